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

#include <doctest.h>

#include "wittkit/errors.hpp"
#include "wittkit/sampling.hpp"
#include "wittkit/scalar.hpp"

using namespace wittkit;

TEST_CASE("rational normalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(format_rational(Rational(2, 4)) == "1/2");
  CHECK(format_rational(Rational(0, 7)) == "0");
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("2x"), Error);
}

TEST_CASE("polynomial quotient reduction") {
  // (x^2 - 1) / (x - 1) reduces to x + 1; cross-multiplication certifies.
  Poly num({Rational(-1), Rational(0), Rational(1)});
  Poly den({Rational(-1), Rational(1)});
  RatFun f(num, den);
  Poly expected({Rational(1), Rational(1)});
  CHECK(f.num() == expected);
  CHECK(f.den() == Poly::constant(Rational(1)));
  CHECK(f.num() * den == num * f.den());
  // zero normalizes to 0/1
  RatFun z(Poly(), Poly({Rational(0), Rational(7)}));
  CHECK(z.is_zero());
  CHECK(z.den() == Poly::constant(Rational(1)));
  CHECK_THROWS_AS(RatFun(num, Poly()), Error);
}

TEST_CASE("rational function field axioms on samples") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    for (Field f : {Field::Q, Field::Qx}) {
      Scalar a = rng.any_scalar(f);
      Scalar b = rng.any_scalar(f);
      Scalar c = rng.any_scalar(f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Scalar::one(f));
      CHECK(a + Scalar::zero(f) == a);
      CHECK(a * Scalar::one(f) == a);
    }
  }
}

TEST_CASE("normalization is idempotent") {
  Rng rng(12);
  for (int t = 0; t < 40; ++t) {
    Scalar a = rng.any_scalar(Field::Qx);
    RatFun again(a.fx().num(), a.fx().den());
    CHECK(Scalar(again) == a);
  }
}

TEST_CASE("unit torsion solutions") {
  auto one = Scalar::one(Field::Q);
  CHECK(unit_torsion_solutions(Field::Q, 2, 3) == std::vector<Scalar>{one});
  CHECK(unit_torsion_solutions(Field::Q, 2, 4) ==
        std::vector<Scalar>{one, -one});
  CHECK(unit_torsion_solutions(Field::Q, 1, 5) == std::vector<Scalar>{one});
  CHECK_THROWS_AS(unit_torsion_solutions(Field::Q, 0, 5), Error);
  // u^gcd(k, k') = 1 for every returned unit
  for (int k = 1; k <= 6; ++k)
    for (int kp = 1; kp <= 6; ++kp) {
      BigInt g = gcd(BigInt(k), BigInt(kp));
      for (const auto& u : unit_torsion_solutions(Field::Qx, k, kp))
        CHECK(u.pow(g).is_one());
    }
}

TEST_CASE("exact roots") {
  CHECK(*exact_kth_root(BigInt(27), 3) == 3);
  CHECK(*exact_kth_root(BigInt(-27), 3) == -3);
  CHECK(!exact_kth_root(BigInt(28), 3).has_value());
  CHECK(!exact_kth_root(BigInt(-4), 2).has_value());
  CHECK(*rational_kth_root(Rational(4, 9), 2) == Rational(2, 3));

  Poly p({Rational(1), Rational(2), Rational(1)});  // (x+1)^2
  auto r = p.kth_root(2);
  REQUIRE(r.has_value());
  CHECK(*r == Poly({Rational(1), Rational(1)}));
  CHECK(!Poly({Rational(2), Rational(1)}).kth_root(2).has_value());

  Scalar s(RatFun(p, Poly::constant(Rational(4))));
  auto roots = s.kth_roots(2);
  REQUIRE(roots.size() == 2);
  for (const auto& u : roots) CHECK(u.pow(2) == s);
}
