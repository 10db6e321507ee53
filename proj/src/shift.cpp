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

#include "wittkit/shift.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {
void require_countable(const WittElement& x) {
  if (!x.algebra().is_infinite())
    fail(Errc::AlgebraMismatch, "shift_map lives on the countable-rank algebra");
}
}  // namespace

WittElement shift_map(const WittElement& x) {
  require_countable(x);
  WittElement out(x.algebra());
  for (const auto& [e, t] : x.terms()) {
    Exponent se;
    for (const auto& [i, v] : e.entries()) se.set(i + 1, v);
    Tangent st;
    for (const auto& [i, v] : t.entries()) st.set(i + 1, v);
    out.add_term(se, st);
  }
  return out;
}

std::optional<WittElement> unshift_map(const WittElement& x) {
  require_countable(x);
  WittElement out(x.algebra());
  for (const auto& [e, t] : x.terms()) {
    Exponent se;
    for (const auto& [i, v] : e.entries()) {
      if (i == 1) return std::nullopt;
      se.set(i - 1, v);
    }
    Tangent st;
    for (const auto& [i, v] : t.entries()) {
      if (i == 1) return std::nullopt;
      st.set(i - 1, v);
    }
    out.add_term(se, st);
  }
  return out;
}

AutTriple shift_witness(const WittElement& x, const WittElement& y) {
  require_countable(x);
  require_countable(y);
  if (x.algebra() != y.algebra())
    fail(Errc::AlgebraMismatch, "elements from different algebras");
  const Field f = x.algebra().field();
  int n = 0;
  for (const WittElement* el : {&x, &y})
    for (const auto& [e, t] : el->terms()) {
      n = std::max(n, e.max_index());
      n = std::max(n, t.max_index());
    }
  if (n == 0) return identity_triple_n(1, f);
  // Cycle (1 2 ... N+1): e_i -> e_{i+1}, e_{N+1} -> e_1. Orthogonal, so
  // the same permutation works for sigma and tau under the delta pairing.
  AutTriple theta = identity_triple_n(n + 1, f);
  theta.sigma = IntMatrix(n + 1, n + 1);
  theta.tau = ScalarMatrix(n + 1, n + 1, f);
  for (int i = 1; i <= n; ++i) {
    theta.sigma.at(i, i - 1) = 1;
    theta.tau.at(i, i - 1) = Scalar::one(f);
  }
  theta.sigma.at(0, n) = 1;
  theta.tau.at(0, n) = Scalar::one(f);
  if (apply_aut_unchecked(theta, x) != shift_map(x) ||
      apply_aut_unchecked(theta, y) != shift_map(y))
    fail(Errc::Internal, "cycle witness does not reproduce the shift");
  return theta;
}

NonImageCertificate shift_non_surjectivity_certificate() {
  AlgebraDescriptor alg = AlgebraDescriptor::countable();
  NonImageCertificate cert;
  cert.element = WittElement::monomial(alg, Exponent(),
                                       Tangent::axis(1, Scalar::one(alg.field())));
  cert.reason =
      "every image term has tangent support >= 2 and first exponent "
      "coordinate 0; this element has a term with tangent index 1";
  return cert;
}

CertificateCheck check_non_image(const WittElement& candidate) {
  require_countable(candidate);
  CertificateCheck out;
  if (candidate.is_zero()) {
    out.accepted = false;
    out.reason = "zero is the image of zero";
    out.preimage = WittElement(candidate.algebra());
    return out;
  }
  for (const auto& [e, t] : candidate.terms()) {
    if (e.at(1) != 0) {
      out.accepted = true;
      out.reason = "a term has nonzero first exponent coordinate";
      return out;
    }
    if (t.entries().count(1) != 0) {
      out.accepted = true;
      out.reason = "a term has tangent index 1";
      return out;
    }
  }
  out.accepted = false;
  out.reason = "every term matches the image shape";
  out.preimage = unshift_map(candidate);
  return out;
}

}  // namespace wittkit
