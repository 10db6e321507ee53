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

#include "wittkit/numbers.hpp"

#include <cctype>

#include "wittkit/errors.hpp"

namespace wittkit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::NotKroneckerPairing: return "NotKroneckerPairing";
    case Errc::InvalidTriple: return "InvalidTriple";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::TooSmallConstant: return "TooSmallConstant";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case Errc::NotSimpleAmbient: return "NotSimpleAmbient";
    case Errc::OracleInvalidTriple: return "OracleInvalidTriple";
    case Errc::WitnessDoesNotFixW: return "WitnessDoesNotFixW";
    case Errc::RecoveryMismatch: return "RecoveryMismatch";
    case Errc::NotLinearOnProbes: return "NotLinearOnProbes";
    case Errc::UnboundedSupport: return "UnboundedSupport";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_x = 1, xx = 0;
  BigInt old_y = 0, yy = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt integer_kth_root_floor(const BigInt& v, unsigned k) {
  if (v < 0) fail(Errc::Internal, "integer_kth_root_floor: negative input");
  if (k == 0) fail(Errc::Internal, "integer_kth_root_floor: k = 0");
  if (v == 0 || v == 1 || k == 1) return v;
  BigInt lo = 1;
  BigInt hi = 1;
  while (boost::multiprecision::pow(hi, k) <= v) hi <<= 1;
  // invariant: lo^k <= v < hi^k
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (boost::multiprecision::pow(mid, k) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::optional<BigInt> exact_kth_root(const BigInt& v, unsigned k) {
  if (k == 0) return std::nullopt;
  if (v < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = exact_kth_root(-v, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  BigInt r = integer_kth_root_floor(v, k);
  if (boost::multiprecision::pow(r, k) == v) return r;
  return std::nullopt;
}

std::optional<Rational> rational_kth_root(const Rational& v, unsigned k) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (k % 2 == 0 && num < 0) return std::nullopt;
  auto rn = exact_kth_root(num, k);
  auto rd = exact_kth_root(den, k);
  if (!rn || !rd) return std::nullopt;
  Rational root(*rn, *rd);
  if (k % 2 == 0 && root < 0) root = -root;
  return root;
}

Rational rational_pow(const Rational& base, const BigInt& e) {
  if (e < 0) {
    if (base == 0) fail(Errc::ZeroDenominator, "0 raised to a negative power");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational result(1);
  Rational b = base;
  BigInt k = e;
  while (k > 0) {
    if ((k & 1) != 0) result *= b;
    b *= b;
    k >>= 1;
  }
  return result;
}

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) fail(Errc::ParseError, "bad integer literal: " + text);
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      fail(Errc::ParseError, "bad integer literal: " + text);
  return BigInt(text);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_bigint(text));
  }
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) fail(Errc::ZeroDenominator, "zero denominator in " + text);
  return Rational(num, den);
}

std::string format_rational(const Rational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace wittkit
