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

#ifndef WITTKIT_POLY_HPP
#define WITTKIT_POLY_HPP

#include <optional>
#include <vector>

#include "wittkit/numbers.hpp"

namespace wittkit {

/// Univariate polynomial over QQ, coefficients ascending by degree.
/// Canonical: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly variable();  // x

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Exact quotient; throws Internal if the division leaves a remainder.
  static Poly exact_div(const Poly& a, const Poly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly pow(unsigned k) const;
  /// Exact k-th root if one exists. For even k the root with positive
  /// leading coefficient is returned.
  std::optional<Poly> kth_root(unsigned k) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace wittkit

#endif  // WITTKIT_POLY_HPP
