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

#ifndef WITTKIT_AUT_HPP
#define WITTKIT_AUT_HPP

#include <string>

#include "wittkit/element.hpp"

namespace wittkit {

/// Automorphism data (chi, sigma, tau): a character of the lattice stored
/// by its values on basis vectors, a unimodular lattice map, and an
/// invertible tangent map. Valid triples satisfy tau^T phi sigma = phi.
///
/// Finite algebras: chi has rank() entries, sigma is rank x rank, tau is
/// dim x dim. The countable-rank case declares a finite support N; all
/// three components act as the identity beyond it.
struct AutTriple {
  std::vector<Scalar> chi;
  IntMatrix sigma;
  ScalarMatrix tau;

  int support() const { return sigma.rows(); }

  /// chi(alpha) = prod_i chi(e_i)^{alpha_i}.
  Scalar chi_value(const Exponent& alpha, Field f) const;
  Exponent apply_sigma(const Exponent& alpha) const;
  Tangent apply_tau(const Tangent& d, Field f) const;

  bool operator==(const AutTriple& o) const;
  bool operator!=(const AutTriple& o) const { return !(*this == o); }
  static int cmp(const AutTriple& a, const AutTriple& b);
};

AutTriple identity_triple(const AlgebraDescriptor& alg);
/// Identity triple with an explicit support block (countable-rank case).
AutTriple identity_triple_n(int n, Field f);

struct TripleCheck {
  bool ok = false;
  std::string reason;  // names the first failed condition
};

/// Validity: sigma unimodular, tau invertible, chi values nonzero, and the
/// pairing compatibility tau^T phi sigma = phi, all exact.
TripleCheck check_triple(const AlgebraDescriptor& alg, const AutTriple& t);

/// theta(t^alpha d) = chi(alpha) t^{sigma(alpha)} tau(d), extended linearly.
/// Validates the triple first.
WittElement apply_aut(const AutTriple& t, const WittElement& x);
/// Same, for callers that already validated the triple.
WittElement apply_aut_unchecked(const AutTriple& t, const WittElement& x);

/// Group operations: apply(compose(a,b), x) = apply(a, apply(b, x)) and
/// compose(a, invert(a)) = identity.
AutTriple compose(const AlgebraDescriptor& alg, const AutTriple& a, const AutTriple& b);
AutTriple invert(const AlgebraDescriptor& alg, const AutTriple& a);

/// The unique tau with tau^T phi sigma = phi, when the compatibility
/// equation is solvable (phi must have full row rank, i.e. the algebra is
/// simple). Finite algebras only.
std::optional<ScalarMatrix> solve_tau(const AlgebraDescriptor& alg,
                                      const IntMatrix& sigma);

}  // namespace wittkit

#endif  // WITTKIT_AUT_HPP
