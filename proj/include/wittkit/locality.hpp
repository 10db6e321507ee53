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

#ifndef WITTKIT_LOCALITY_HPP
#define WITTKIT_LOCALITY_HPP

#include <memory>

#include "wittkit/distinguished.hpp"
#include "wittkit/pairs.hpp"

namespace wittkit {

/// Supplies the interpolating automorphism behind a map under test: one
/// element for the pointwise protocol, a pair for the pairwise protocol.
/// Returned triples are never trusted; callers re-validate them.
class WitnessOracle {
 public:
  virtual ~WitnessOracle() = default;
  virtual AutTriple witness_single(const WittElement& x) = 0;
  virtual AutTriple witness_pair(const WittElement& x, const WittElement& y) = 0;
};

/// Simulates the map x -> theta*(x): every query is answered by theta*.
class StoredTripleOracle : public WitnessOracle {
 public:
  StoredTripleOracle(AlgebraDescriptor alg, AutTriple theta)
      : alg_(std::move(alg)), theta_(std::move(theta)) {}
  AutTriple witness_single(const WittElement&) override { return theta_; }
  AutTriple witness_pair(const WittElement&, const WittElement&) override {
    return theta_;
  }
  const AutTriple& triple() const { return theta_; }

 private:
  AlgebraDescriptor alg_;
  AutTriple theta_;
};

/// Witnesses for the coordinate-shift map on the countable-rank algebra.
class ShiftOracle : public WitnessOracle {
 public:
  AutTriple witness_single(const WittElement& x) override;
  AutTriple witness_pair(const WittElement& x, const WittElement& y) override;
};

/// Finite presentation of the map under test: probes plus their images.
struct ProbeSet {
  AlgebraDescriptor alg;
  std::vector<WittElement> probes;
  std::vector<WittElement> images;
  explicit ProbeSet(AlgebraDescriptor a) : alg(std::move(a)) {}
  void add(const WittElement& probe, const WittElement& image);
  void validate() const;  // distinct probes, matching algebras and sizes
};

struct VerifyFailure {
  int i = -1;
  int j = -1;  // -1 for single-probe failures
  std::string what;
};

struct VerifyReport {
  bool pass = true;
  std::vector<VerifyFailure> failures;
};

/// Pairwise protocol: for every ordered probe pair, obtains a witness and
/// checks both interpolation equations exactly.
VerifyReport verify_2local(const ProbeSet& probes, WitnessOracle& oracle);

/// Pointwise protocol: linearity on all probe combinations present, then
/// one witness per probe.
VerifyReport verify_local(const ProbeSet& probes, WitnessOracle& oracle);

/// Reconstructs the single automorphism behind a pairwise-witnessed map on
/// a finite simple algebra: anchors at the distinguished element of the
/// probes' envelope, translates, and certifies that every witness fixing
/// the anchor acts as the identity on the envelope. The returned triple
/// reproduces the map on every probe, or RecoveryMismatch is thrown.
AutTriple recover_2local(const ProbeSet& probes, WitnessOracle& oracle);

/// Pointwise version: each monomial probe is certified through the anchor
/// whose exceptional exponents avoid it (the mirrored anchor covers the
/// leftovers), with the combined probes supplied to the oracle internally.
AutTriple recover_local(const ProbeSet& probes, WitnessOracle& oracle);

/// The scalar c with b = c * a, when a is nonzero and the elements are
/// proportional.
std::optional<Scalar> element_ratio(const WittElement& a, const WittElement& b);

}  // namespace wittkit

#endif  // WITTKIT_LOCALITY_HPP
