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

#ifndef WITTKIT_SAMPLING_HPP
#define WITTKIT_SAMPLING_HPP

#include <random>

#include "wittkit/aut.hpp"
#include "wittkit/lattice.hpp"

namespace wittkit {

/// Deterministic sample source for property tests and the self-test suite.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int int_in(int lo, int hi);  // inclusive
  std::mt19937_64& raw() { return g_; }

  Scalar nonzero_scalar(Field f);
  Scalar any_scalar(Field f);
  Exponent exponent(int n, int lo, int hi);
  Tangent tangent(const AlgebraDescriptor& alg, int max_support);
  WittElement element(const AlgebraDescriptor& alg, int max_terms, int exp_range);
  IntMatrix unimodular(int n, int ops);
  /// A triple passing check_triple, by drawing sigma until the pairing
  /// equation pins a tau (the identity-sigma fallback always succeeds).
  AutTriple valid_triple(const AlgebraDescriptor& alg, int ops = 6);
  Sublattice sublattice(int n, int max_gens, int range);
  std::vector<Tangent> subspace(const AlgebraDescriptor& alg, int max_gens);

 private:
  std::mt19937_64 g_;
};

}  // namespace wittkit

#endif  // WITTKIT_SAMPLING_HPP
