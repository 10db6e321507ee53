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

#include "wittkit/poly.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.c_ = {c};
  return p;
}

Poly Poly::variable() {
  Poly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : Rational(0);
}

const Rational& Poly::leading() const {
  if (c_.empty()) fail(Errc::Internal, "leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rational> r(c_);
  for (auto& v : r) v = -v;
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  std::vector<Rational> r(c_);
  for (auto& v : r) v *= c;
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem(a.c_);
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational& lead = b.c_.back();
  for (int i = static_cast<int>(rem.size()) - 1;
       i >= static_cast<int>(b.c_.size()) - 1; --i) {
    if (rem[i] == 0) continue;
    Rational q = rem[i] / lead;
    int shift = i - (static_cast<int>(b.c_.size()) - 1);
    quo[shift] = q;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= q * b.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(Errc::Internal, "inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = Rational(1) / c_.back();
  return scaled(inv);
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(Rational(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::optional<Poly> Poly::kth_root(unsigned k) const {
  if (k == 0) return std::nullopt;
  if (k == 1) return *this;
  if (is_zero()) return Poly();
  int d = degree();
  if (d % static_cast<int>(k) != 0) return std::nullopt;
  int rd = d / static_cast<int>(k);
  auto lc_root = rational_kth_root(leading(), k);
  if (!lc_root) return std::nullopt;
  // Determine coefficients from the top down; each step matches the highest
  // not-yet-fixed coefficient of root^k against *this.
  std::vector<Rational> rc(rd + 1, Rational(0));
  rc[rd] = *lc_root;
  Rational denom = Rational(k) * rational_pow(*lc_root, BigInt(k - 1));
  for (int t = rd - 1; t >= 0; --t) {
    Poly current(std::vector<Rational>(rc.begin(), rc.end()));
    Poly diff = *this - current.pow(k);
    // coefficient of degree (k-1)*rd + t in diff equals k*lc^{k-1} * rc[t]
    rc[t] = diff.coeff(static_cast<std::size_t>((k - 1) * rd + t)) / denom;
  }
  Poly root(std::move(rc));
  if (root.pow(k) != *this) return std::nullopt;
  if (k % 2 == 0 && root.leading() < 0) root = -root;
  return root;
}

}  // namespace wittkit
