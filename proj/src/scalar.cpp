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

#include "wittkit/scalar.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

const char* field_name(Field f) { return f == Field::Q ? "Q" : "Q(x)"; }

Field field_from_name(const std::string& name) {
  if (name == "Q") return Field::Q;
  if (name == "Q(x)" || name == "Qx") return Field::Qx;
  fail(Errc::ParseError, "unknown field tag: " + name);
}

Scalar Scalar::zero(Field f) {
  return f == Field::Q ? Scalar(Rational(0)) : Scalar(RatFun());
}

Scalar Scalar::one(Field f) {
  return f == Field::Q ? Scalar(Rational(1))
                       : Scalar(RatFun::constant(Rational(1)));
}

Scalar Scalar::of_int(Field f, const BigInt& v) {
  return of_rational(f, Rational(v));
}

Scalar Scalar::of_rational(Field f, const Rational& v) {
  return f == Field::Q ? Scalar(v) : Scalar(RatFun::constant(v));
}

bool Scalar::is_zero() const {
  if (field() == Field::Q) return q() == 0;
  return fx().is_zero();
}

bool Scalar::is_one() const {
  if (field() == Field::Q) return q() == 1;
  return fx().is_one();
}

void Scalar::check_same(const Scalar& o) const {
  if (field() != o.field())
    fail(Errc::AlgebraMismatch, "scalars from different ground fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (field() == Field::Q) return Scalar(q() + o.q());
  return Scalar(fx() + o.fx());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (field() == Field::Q) return Scalar(-q());
  return Scalar(-fx());
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field() == Field::Q) return Scalar(q() * o.q());
  return Scalar(fx() * o.fx());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::ZeroDenominator, "inverse of zero scalar");
  if (field() == Field::Q) return Scalar(Rational(1) / q());
  return Scalar(fx().inverse());
}

Scalar Scalar::pow(const BigInt& e) const {
  if (field() == Field::Q) return Scalar(rational_pow(q(), e));
  return Scalar(fx().pow(e));
}

std::vector<Scalar> Scalar::kth_roots(unsigned k) const {
  std::vector<Scalar> out;
  if (k == 0) return out;
  if (field() == Field::Q) {
    auto r = rational_kth_root(q(), k);
    if (!r) return out;
    out.push_back(Scalar(*r));
    if (k % 2 == 0 && *r != 0) out.push_back(Scalar(-*r));
  } else {
    auto r = fx().kth_root(k);
    if (!r) return out;
    out.push_back(Scalar(*r));
    if (k % 2 == 0 && !r->is_zero()) out.push_back(Scalar(-*r));
  }
  return out;
}

namespace {
int cmp_rational(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

int cmp_poly(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp_rational(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return 0;
}
}  // namespace

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) return a.field() == Field::Q ? -1 : 1;
  if (a.field() == Field::Q) return cmp_rational(a.q(), b.q());
  int c = cmp_poly(a.fx().den(), b.fx().den());
  if (c != 0) return c;
  return cmp_poly(a.fx().num(), b.fx().num());
}

std::vector<Scalar> unit_torsion_solutions(Field f, const BigInt& k,
                                           const BigInt& k_prime) {
  if (k < 1 || k_prime < 1)
    fail(Errc::TooSmallConstant, "torsion exponents must be >= 1");
  std::vector<Scalar> out{Scalar::one(f)};
  if (k % 2 == 0 && k_prime % 2 == 0) out.push_back(-Scalar::one(f));
  return out;
}

}  // namespace wittkit
