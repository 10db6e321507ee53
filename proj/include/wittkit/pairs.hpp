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

#ifndef WITTKIT_PAIRS_HPP
#define WITTKIT_PAIRS_HPP

#include "wittkit/element.hpp"
#include "wittkit/lattice.hpp"

namespace wittkit {

/// Reduced (RREF) basis of the span of the given tangents.
std::vector<Tangent> reduce_subspace(const AlgebraDescriptor& alg,
                                     const std::vector<Tangent>& generators);

/// Defect of a pair (A-bar, T-bar): the sublattice A0 annihilated by all of
/// T-bar, the subspace T0 annihilated by all of A-bar, and
/// r = rank A0 + dim T0. The pair is non-degenerate iff r = 0.
struct DefectResult {
  Sublattice a0;
  std::vector<Tangent> t0;
  int r = 0;
  DefectResult() : a0(0) {}
};

DefectResult nondeg_defect(const AlgebraDescriptor& alg, const Sublattice& a_bar,
                           const std::vector<Tangent>& t_bar);

/// Certified non-degenerate pair: both defect components trivial.
struct NondegPair {
  Sublattice lattice;
  std::vector<Tangent> subspace;
  DefectResult certificate;
  NondegPair() : lattice(0) {}
};

struct CompletionStep {
  bool seed = false;            // initial step for the all-zero input
  bool added_exponent = false;  // otherwise a tangent was adjoined
  Exponent alpha;
  Tangent tangent;
  int r_after = 0;
};

struct CompletionResult {
  NondegPair pair;
  int r_initial = 0;
  std::vector<CompletionStep> trace;
};

/// Grows (A-bar, T-bar) into a non-degenerate pair, one defect-reducing
/// basis vector at a time; r decreases strictly at every non-seed step.
/// Deterministic: always the smallest-index usable basis vector.
CompletionResult complete_pair(const AlgebraDescriptor& alg, const Sublattice& a_bar,
                               const std::vector<Tangent>& t_bar);

/// Coordinates between the ambient algebra and a sub-Witt-algebra built on
/// a lattice basis and a tangent basis.
struct SubalgebraEmbedding {
  AlgebraDescriptor ambient;
  AlgebraDescriptor sub;
  std::vector<Exponent> lattice_basis;  // images of the sub basis vectors
  std::vector<Tangent> tangent_basis;

  Exponent exp_to_ambient(const Exponent& sub_exp) const;
  Tangent tan_to_ambient(const Tangent& sub_tan) const;
  WittElement to_ambient(const WittElement& sub_elem) const;

  std::optional<Exponent> exp_to_sub(const Exponent& ambient_exp) const;
  std::optional<Tangent> tan_to_sub(const Tangent& ambient_tan) const;
  /// Throws RankMismatch when the element lies outside the subalgebra.
  WittElement to_sub(const WittElement& ambient_elem) const;
};

struct EnvelopeResult {
  CompletionResult completion;
  SubalgebraEmbedding embedding;
};

/// Smallest constructed finitely generated simple subalgebra containing
/// both elements (their exponents generate the lattice seed, their
/// tangents the subspace seed, completed to a non-degenerate pair).
EnvelopeResult envelope(const WittElement& x, const WittElement& y);
EnvelopeResult envelope_of(const AlgebraDescriptor& alg,
                           const std::vector<WittElement>& elements);

}  // namespace wittkit

#endif  // WITTKIT_PAIRS_HPP
