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

#include "wittkit/aut.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

Scalar AutTriple::chi_value(const Exponent& alpha, Field f) const {
  Scalar v = Scalar::one(f);
  for (const auto& [i, ai] : alpha.entries()) {
    if (i > static_cast<int>(chi.size())) continue;  // identity beyond support
    v = v * chi[i - 1].pow(ai);
  }
  return v;
}

Exponent AutTriple::apply_sigma(const Exponent& alpha) const {
  int n = sigma.cols();
  Exponent out;
  std::vector<BigInt> block(n, BigInt(0));
  for (const auto& [i, ai] : alpha.entries()) {
    if (i <= n)
      block[i - 1] = ai;
    else
      out.set(i, ai);  // identity beyond support
  }
  std::vector<BigInt> image = sigma.mul_vec(block);
  for (int i = 0; i < n; ++i)
    if (image[i] != 0) out.set(i + 1, out.at(i + 1) + image[i]);
  return out;
}

Tangent AutTriple::apply_tau(const Tangent& d, Field f) const {
  int m = tau.cols();
  Tangent out;
  std::vector<Scalar> block(m, Scalar::zero(f));
  for (const auto& [i, di] : d.entries()) {
    if (i <= m)
      block[i - 1] = di;
    else
      out.set(i, di);
  }
  std::vector<Scalar> image = tau.mul_vec(block);
  for (int i = 0; i < m; ++i)
    if (!image[i].is_zero()) out.set(i + 1, image[i]);
  return out;
}

bool AutTriple::operator==(const AutTriple& o) const {
  return chi == o.chi && sigma == o.sigma && tau == o.tau;
}

int AutTriple::cmp(const AutTriple& a, const AutTriple& b) {
  int c = IntMatrix::cmp(a.sigma, b.sigma);
  if (c != 0) return c;
  c = ScalarMatrix::cmp(a.tau, b.tau);
  if (c != 0) return c;
  if (a.chi.size() != b.chi.size()) return a.chi.size() < b.chi.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.chi.size(); ++i) {
    c = Scalar::cmp(a.chi[i], b.chi[i]);
    if (c != 0) return c;
  }
  return 0;
}

AutTriple identity_triple(const AlgebraDescriptor& alg) {
  if (alg.is_infinite()) return identity_triple_n(1, alg.field());
  AutTriple t;
  t.chi.assign(alg.rank(), Scalar::one(alg.field()));
  t.sigma = IntMatrix::identity(alg.rank());
  t.tau = ScalarMatrix::identity(alg.dim(), alg.field());
  return t;
}

AutTriple identity_triple_n(int n, Field f) {
  AutTriple t;
  t.chi.assign(n, Scalar::one(f));
  t.sigma = IntMatrix::identity(n);
  t.tau = ScalarMatrix::identity(n, f);
  return t;
}

TripleCheck check_triple(const AlgebraDescriptor& alg, const AutTriple& t) {
  Field f = alg.field();
  if (alg.is_infinite()) {
    if (t.sigma.rows() != t.sigma.cols() || t.tau.rows() != t.tau.cols() ||
        t.sigma.rows() != t.tau.rows() ||
        static_cast<int>(t.chi.size()) != t.sigma.rows())
      fail(Errc::ShapeMismatch, "support block sizes disagree");
  } else {
    if (static_cast<int>(t.chi.size()) != alg.rank() ||
        t.sigma.rows() != alg.rank() || t.sigma.cols() != alg.rank() ||
        t.tau.rows() != alg.dim() || t.tau.cols() != alg.dim())
      fail(Errc::ShapeMismatch, "triple shapes do not match the algebra");
  }
  for (const auto& c : t.chi) {
    if (c.field() != f) fail(Errc::ShapeMismatch, "chi from the wrong field");
    if (c.is_zero()) return {false, "chi has a zero value"};
  }
  if (t.tau.field() != f) fail(Errc::ShapeMismatch, "tau from the wrong field");
  if (!t.sigma.is_unimodular()) return {false, "sigma is not unimodular"};
  if (!t.tau.is_invertible()) return {false, "tau is not invertible"};
  // Compatibility tau^T phi sigma = phi on the support block.
  const int n = t.sigma.rows();
  ScalarMatrix phi(0, 0, f);
  if (alg.is_kronecker()) {
    phi = ScalarMatrix::identity(n, f);
  } else {
    phi = alg.phi();
  }
  ScalarMatrix sigma_s = ScalarMatrix::from_int(t.sigma, f);
  ScalarMatrix lhs = t.tau.transpose() * phi * sigma_s;
  if (lhs != phi) return {false, "tau^T phi sigma differs from phi"};
  return {true, ""};
}

WittElement apply_aut_unchecked(const AutTriple& t, const WittElement& x) {
  Field f = x.algebra().field();
  WittElement r(x.algebra());
  for (const auto& [a, d] : x.terms()) {
    Scalar c = t.chi_value(a, f);
    Tangent td = t.apply_tau(d, f).scaled(c);
    if (!td.is_zero()) r.add_term(t.apply_sigma(a), td);
  }
  r.validate();
  return r;
}

WittElement apply_aut(const AutTriple& t, const WittElement& x) {
  TripleCheck c = check_triple(x.algebra(), t);
  if (!c.ok) fail(Errc::InvalidTriple, c.reason);
  return apply_aut_unchecked(t, x);
}

namespace {
AutTriple extended(const AutTriple& t, int n, Field f) {
  if (t.support() == n) return t;
  AutTriple r = identity_triple_n(n, f);
  for (std::size_t i = 0; i < t.chi.size(); ++i) r.chi[i] = t.chi[i];
  for (int i = 0; i < t.sigma.rows(); ++i)
    for (int j = 0; j < t.sigma.cols(); ++j) r.sigma.at(i, j) = t.sigma.at(i, j);
  for (int i = 0; i < t.tau.rows(); ++i)
    for (int j = 0; j < t.tau.cols(); ++j) r.tau.at(i, j) = t.tau.at(i, j);
  return r;
}
}  // namespace

AutTriple compose(const AlgebraDescriptor& alg, const AutTriple& a,
                  const AutTriple& b) {
  Field f = alg.field();
  AutTriple lhs = a, rhs = b;
  if (alg.is_infinite()) {
    int n = std::max(a.support(), b.support());
    lhs = extended(a, n, f);
    rhs = extended(b, n, f);
  }
  AutTriple r;
  r.sigma = lhs.sigma * rhs.sigma;
  r.tau = lhs.tau * rhs.tau;
  int n = lhs.sigma.cols();
  r.chi.reserve(n);
  for (int i = 0; i < n; ++i) {
    // chi(e_i) = chi_a(sigma_b e_i) * chi_b(e_i)
    Exponent img;
    for (int k = 0; k < n; ++k)
      if (rhs.sigma.at(k, i) != 0) img.set(k + 1, rhs.sigma.at(k, i));
    r.chi.push_back(lhs.chi_value(img, f) * rhs.chi[i]);
  }
  return r;
}

AutTriple invert(const AlgebraDescriptor& alg, const AutTriple& a) {
  Field f = alg.field();
  AutTriple r;
  r.sigma = a.sigma.unimodular_inverse();
  auto tau_inv = a.tau.inverse();
  if (!tau_inv) fail(Errc::InvalidTriple, "tau is not invertible");
  r.tau = *tau_inv;
  int n = a.sigma.cols();
  r.chi.reserve(n);
  for (int i = 0; i < n; ++i) {
    Exponent img;
    for (int k = 0; k < n; ++k)
      if (r.sigma.at(k, i) != 0) img.set(k + 1, r.sigma.at(k, i));
    r.chi.push_back(a.chi_value(img, f).inverse());
  }
  return r;
}

std::optional<ScalarMatrix> solve_tau(const AlgebraDescriptor& alg,
                                      const IntMatrix& sigma) {
  if (alg.is_infinite())
    fail(Errc::ShapeMismatch, "solve_tau handles finite algebras");
  const int n = alg.rank(), m = alg.dim();
  const Field f = alg.field();
  ScalarMatrix phi =
      alg.is_kronecker() ? ScalarMatrix::identity(n, f) : alg.phi();
  // tau^T (phi sigma) = phi, transposed to (phi sigma)^T tau = phi^T and
  // solved one tau column at a time.
  ScalarMatrix b_t = (phi * ScalarMatrix::from_int(sigma, f)).transpose();
  ScalarMatrix tau(m, m, f);
  for (int c = 0; c < m; ++c) {
    std::vector<Scalar> rhs(n, Scalar::zero(f));
    for (int j = 0; j < n; ++j) rhs[j] = phi.at(c, j);
    auto col = b_t.solve_unique(rhs);
    if (!col) return std::nullopt;
    for (int r = 0; r < m; ++r) tau.at(r, c) = (*col)[r];
  }
  return tau;
}

}  // namespace wittkit
