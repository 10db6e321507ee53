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

#ifndef WITTKIT_RATFUN_HPP
#define WITTKIT_RATFUN_HPP

#include <optional>

#include "wittkit/poly.hpp"

namespace wittkit {

/// Rational function over QQ in canonical form: gcd(num, den) = 1 with the
/// gcd taken monic, den monic and nonzero, zero represented as 0/1.
class RatFun {
 public:
  RatFun() : num_(), den_(Poly::constant(Rational(1))) {}
  RatFun(Poly num, Poly den);
  static RatFun constant(const Rational& c);
  static RatFun variable();
  static RatFun from_int(const BigInt& v) { return constant(Rational(v)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  /// Value as a rational, when is_constant(); throws otherwise.
  Rational constant_value() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun inverse() const;
  RatFun pow(const BigInt& e) const;
  std::optional<RatFun> kth_root(unsigned k) const;

  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

 private:
  Poly num_, den_;
};

}  // namespace wittkit

#endif  // WITTKIT_RATFUN_HPP
