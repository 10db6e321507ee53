// Copyright 2026 The Wittkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WITTKIT_DISTINGUISHED_HPP
#define WITTKIT_DISTINGUISHED_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "wittkit/aut.hpp"

namespace wittkit {

/// The anchor element sum_i (t^{s k_i e_i} + t^{s k'_i e_i}) d_{min(i,m)}
/// with pairwise coprime constants >= 2 and s = +-1. Its stabilizer inside
/// the automorphism group is trivial.
struct DistinguishedElement {
  WittElement element;
  std::vector<BigInt> k;        // k_1..k_n
  std::vector<BigInt> k_prime;  // k'_1..k'_n
  int sign = 1;
};

/// Builds the anchor element. Constants are given interleaved
/// (k_1, k'_1, k_2, k'_2, ...); the default is the first 2n primes in that
/// order. All constants must be >= 2 and pairwise coprime.
DistinguishedElement build_distinguished(
    const AlgebraDescriptor& alg, int sign,
    const std::optional<std::vector<BigInt>>& constants = std::nullopt);

std::vector<BigInt> first_primes(int count);

/// A nonzero multiple of a standard basis vector: coeff * e_axis.
struct AxisVector {
  BigInt coeff;
  int axis = 1;
  bool operator==(const AxisVector& o) const {
    return coeff == o.coeff && axis == o.axis;
  }
};

struct AxisMapResult {
  std::vector<IntMatrix> solutions;  // canonically sorted, duplicate-free
  bool hypotheses_ok = true;         // constants >= 2, pairwise coprime, S within S'
  std::string note;                  // first violated hypothesis, if any
};

/// The exact set of unimodular sigma with sigma(S) within S', found by
/// solving every assignment S -> S' for the columns it forces. S must
/// involve every axis (otherwise the solution set is infinite and
/// HypothesisViolated is thrown). Violations of the rigidity hypotheses
/// (constants >= 2, pairwise coprime, S within S') are flagged, not fatal:
/// the set is still decided, it just need not be {identity}.
AxisMapResult lemma23_decide(int n, const std::vector<AxisVector>& s,
                             const std::vector<AxisVector>& s_prime);

using ProgressFn = std::function<bool(std::uint64_t done, std::uint64_t total)>;

/// Independent oracle: enumerates every integer matrix with entries in
/// [-bound, bound] and filters by unimodularity and sigma(S) within S'.
/// Enumeration proceeds in chunks; a progress callback may cancel. Throws
/// SearchSpaceTooLarge when (2*bound+1)^(n*n) exceeds cap.
AxisMapResult lemma23_bruteforce(int n, const std::vector<AxisVector>& s,
                                 const std::vector<AxisVector>& s_prime,
                                 const BigInt& bound,
                                 std::uint64_t cap = 20'000'000,
                                 const ProgressFn& progress = nullptr);

/// All triples theta with theta(w) = w, found constructively: sigma
/// candidates from the support, tau from the pairing compatibility, chi
/// from root extraction. Exactly {identity} under the anchor hypotheses.
std::vector<AutTriple> stabilizer_of(const AlgebraDescriptor& alg,
                                     const DistinguishedElement& w);

/// Raw-element overload: the support must consist of multiples of standard
/// basis vectors and involve every axis.
std::vector<AutTriple> stabilizer_of_element(const AlgebraDescriptor& alg,
                                             const WittElement& w);

}  // namespace wittkit

#endif  // WITTKIT_DISTINGUISHED_HPP
