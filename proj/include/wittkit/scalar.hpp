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

#ifndef WITTKIT_SCALAR_HPP
#define WITTKIT_SCALAR_HPP

#include <string>
#include <variant>
#include <vector>

#include "wittkit/ratfun.hpp"

namespace wittkit {

enum class Field { Q, Qx };

const char* field_name(Field f);   // "Q" / "Q(x)"
Field field_from_name(const std::string& name);

/// Exact element of the active ground field, tagged Q or Q(x).
/// Mixed-field arithmetic throws Error(AlgebraMismatch).
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  explicit Scalar(Rational v) : v_(std::move(v)) {}
  explicit Scalar(RatFun v) : v_(std::move(v)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar of_int(Field f, const BigInt& v);
  static Scalar of_rational(Field f, const Rational& v);

  Field field() const { return std::holds_alternative<Rational>(v_) ? Field::Q : Field::Qx; }
  const Rational& q() const { return std::get<Rational>(v_); }
  const RatFun& fx() const { return std::get<RatFun>(v_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar pow(const BigInt& e) const;

  /// All field solutions of u^k = *this (at most two, exact).
  std::vector<Scalar> kth_roots(unsigned k) const;

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Deterministic total order used only for canonical output.
  static int cmp(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;
  std::variant<Rational, RatFun> v_;
};

/// All field units u with u^k = u^k' = 1. Over Q and Q(x) the units of
/// finite order are 1 and -1, so the answer is {1} unless k and k' are
/// both even, in which case it is {1, -1}.
std::vector<Scalar> unit_torsion_solutions(Field f, const BigInt& k,
                                           const BigInt& k_prime);

}  // namespace wittkit

#endif  // WITTKIT_SCALAR_HPP
