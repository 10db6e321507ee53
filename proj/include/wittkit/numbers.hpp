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

#ifndef WITTKIT_NUMBERS_HPP
#define WITTKIT_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace wittkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt gcd(const BigInt& a, const BigInt& b);

/// Extended gcd: returns g >= 0 and fills x, y with a*x + b*y = g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

/// Floor division (rounds toward negative infinity, unlike cpp_int's '/').
BigInt floor_div(const BigInt& a, const BigInt& b);

/// Largest r with r^k <= v, for v >= 0, k >= 1.
BigInt integer_kth_root_floor(const BigInt& v, unsigned k);

/// Exact k-th root in ZZ if it exists (handles negative v for odd k).
std::optional<BigInt> exact_kth_root(const BigInt& v, unsigned k);

/// Exact k-th root in QQ if it exists. For even k only the positive root
/// is returned; the caller accounts for the sign twin.
std::optional<Rational> rational_kth_root(const Rational& v, unsigned k);

/// base^e with exact rational arithmetic; e may be negative for base != 0.
Rational rational_pow(const Rational& base, const BigInt& e);

/// "p/q" or "p", optional leading minus. Throws Error(ParseError) on junk
/// and Error(ZeroDenominator) on q = 0.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rational(const Rational& v);

BigInt parse_bigint(const std::string& text);

}  // namespace wittkit

#endif  // WITTKIT_NUMBERS_HPP
