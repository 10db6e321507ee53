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

#include "wittkit/ratfun.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::ZeroDenominator, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFun RatFun::constant(const Rational& c) {
  return RatFun(Poly::constant(c), Poly::constant(Rational(1)));
}

RatFun RatFun::variable() {
  return RatFun(Poly::variable(), Poly::constant(Rational(1)));
}

bool RatFun::is_one() const {
  return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0) == 1;
}

bool RatFun::is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

Rational RatFun::constant_value() const {
  if (!is_constant()) fail(Errc::Internal, "non-constant rational function");
  return is_zero() ? Rational(0) : num_.coeff(0);
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator-() const {
  RatFun r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
  if (is_zero()) fail(Errc::ZeroDenominator, "inverse of zero");
  return RatFun(den_, num_);
}

RatFun RatFun::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun result = RatFun::constant(Rational(1));
  RatFun base = *this;
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::optional<RatFun> RatFun::kth_root(unsigned k) const {
  if (k == 0) return std::nullopt;
  auto rn = num_.kth_root(k);
  auto rd = den_.kth_root(k);
  if (!rn || !rd) return std::nullopt;
  RatFun root(*rn, *rd);
  if (root.pow(BigInt(k)) != *this) return std::nullopt;
  return root;
}

}  // namespace wittkit
