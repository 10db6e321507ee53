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

using namespace wittkit;

namespace {
const Scalar kOne = Scalar::one(Field::Q);

AlgebraDescriptor qx21() {
  ScalarMatrix phi(1, 2, Field::Qx);
  phi.at(0, 0) = Scalar(RatFun::constant(Rational(1)));
  phi.at(0, 1) = Scalar(RatFun::variable());
  return AlgebraDescriptor::finite(2, 1, phi);
}
}  // namespace

TEST_CASE("pairing evaluation") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  CHECK(phi_pair(w2, Tangent::axis(1, kOne), Exponent::axis(2, 1)).is_zero());
  Exponent e57;
  e57.set(1, 5);
  e57.set(2, 7);
  CHECK(phi_pair(w2, Tangent::axis(2, kOne), e57) == Scalar(Rational(7)));

  AlgebraDescriptor qx = qx21();
  Exponent e11;
  e11.set(1, 1);
  e11.set(2, 1);
  Scalar expect(RatFun(Poly({Rational(1), Rational(1)}),
                       Poly::constant(Rational(1))));  // 1 + x
  CHECK(phi_pair(qx, Tangent::axis(1, Scalar::one(Field::Qx)), e11) == expect);
}

TEST_CASE("bracket on the stated instances") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  Exponent e23;
  e23.set(1, 2);
  e23.set(2, 3);
  WittElement x = WittElement::monomial(w2, Exponent(), Tangent::axis(1, kOne));
  WittElement y = WittElement::monomial(w2, e23, Tangent::axis(2, kOne));
  WittElement expect =
      WittElement::monomial(w2, e23, Tangent::axis(2, Scalar(Rational(2))));
  CHECK(bracket(x, y) == expect);

  WittElement a = WittElement::monomial(w2, Exponent::axis(1, 1),
                                        Tangent::axis(2, kOne));
  WittElement b = WittElement::monomial(w2, Exponent::axis(2, 1),
                                        Tangent::axis(1, kOne));
  Exponent e11;
  e11.set(1, 1);
  e11.set(2, 1);
  Tangent diff = Tangent::axis(1, kOne) + (-Tangent::axis(2, kOne));
  CHECK(bracket(a, b) == WittElement::monomial(w2, e11, diff));

  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    WittElement r = rng.element(w2, 4, 3);
    CHECK(bracket(r, r).is_zero());
  }

  AlgebraDescriptor w3 = AlgebraDescriptor::kronecker(3);
  WittElement other(w3);
  CHECK_THROWS_AS(bracket(x, other), Error);
}

TEST_CASE("graded components") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  CHECK(graded_components(WittElement(w2)).empty());

  WittElement shared(w2);
  shared.add_term(Exponent::axis(1, 1), Tangent::axis(1, kOne));
  shared.add_term(Exponent::axis(1, 1), Tangent::axis(2, kOne));
  auto parts = graded_components(shared);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == Exponent::axis(1, 1));

  WittElement two(w2);
  two.add_term(Exponent(), Tangent::axis(1, kOne));
  two.add_term(Exponent::axis(1, 2), Tangent::axis(1, Scalar(Rational(3))));
  parts = graded_components(two);
  REQUIRE(parts.size() == 2);
  WittElement sum(w2);
  for (const auto& [e, part] : parts) {
    (void)e;
    sum = sum + part;
  }
  CHECK(sum == two);
}

TEST_CASE("monomial action") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  WittElement d = WittElement::monomial(w1, Exponent(), Tangent::axis(1, kOne));
  CHECK(act(d, Exponent()).empty());

  WittElement t2 = WittElement::monomial(w1, Exponent::axis(1, 2),
                                         Tangent::axis(1, kOne));
  auto img = act(t2, Exponent::axis(1, 3));
  REQUIRE(img.size() == 1);
  CHECK(img[0].first == Exponent::axis(1, 5));
  CHECK(img[0].second == Scalar(Rational(3)));

  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  WittElement m = WittElement::monomial(w2, Exponent::axis(1, 1),
                                        Tangent::axis(1, kOne));
  Exponent e11;
  e11.set(1, 1);
  e11.set(2, 1);
  img = act(m, e11);
  REQUIRE(img.size() == 1);
  Exponent e21;
  e21.set(1, 2);
  e21.set(2, 1);
  CHECK(img[0].first == e21);
  CHECK(img[0].second == kOne);

  CHECK_THROWS_AS(act(WittElement(qx21()), Exponent()), Error);
}

TEST_CASE("action is a derivation") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  Rng rng(22);
  auto eval = [&](const std::vector<std::pair<Exponent, Scalar>>& monos,
                  const WittElement& op) {
    // apply op to a scalar combination of monomials
    std::map<Exponent, Scalar> acc;
    for (const auto& [e, c] : monos)
      for (const auto& [e2, c2] : act(op, e)) {
        auto it = acc.find(e2);
        Scalar v = c * c2;
        if (it == acc.end())
          acc.emplace(e2, v);
        else {
          it->second = it->second + v;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    return std::vector<std::pair<Exponent, Scalar>>(acc.begin(), acc.end());
  };
  for (int t = 0; t < 50; ++t) {
    WittElement x = rng.element(w2, 3, 3);
    WittElement y = rng.element(w2, 3, 3);
    Exponent beta = rng.exponent(2, -3, 3);
    auto lhs = act(bracket(x, y), beta);
    auto xy = eval(act(y, beta), x);
    auto yx = eval(act(x, beta), y);
    std::map<Exponent, Scalar> diff;
    for (const auto& [e, c] : xy) diff[e] = c;
    for (const auto& [e, c] : yx) {
      auto it = diff.find(e);
      if (it == diff.end())
        diff[e] = -c;
      else {
        it->second = it->second - c;
        if (it->second.is_zero()) diff.erase(it);
      }
    }
    CHECK(lhs == std::vector<std::pair<Exponent, Scalar>>(diff.begin(), diff.end()));
  }
}

TEST_CASE("simplicity criterion instances") {
  CHECK(is_simple(AlgebraDescriptor::kronecker(1)));
  CHECK(is_simple(qx21()));
  CHECK(!is_simple(AlgebraDescriptor::kronecker(0)));

  ScalarMatrix ones(1, 2, Field::Q);
  ones.at(0, 0) = Scalar(Rational(1));
  ones.at(0, 1) = Scalar(Rational(1));
  CHECK(!is_simple(AlgebraDescriptor::finite(2, 1, ones)));
  CHECK(is_simple(AlgebraDescriptor::countable()));
}

TEST_CASE("Jacobi identity over Q(x)") {
  AlgebraDescriptor qx = qx21();
  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    WittElement x = rng.element(qx, 4, 4);
    WittElement y = rng.element(qx, 4, 4);
    WittElement z = rng.element(qx, 4, 4);
    WittElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                      bracket(z, bracket(x, y));
    CHECK(jac.is_zero());
  }
}
