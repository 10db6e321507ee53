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

#include "wittkit/distinguished.hpp"
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

AutTriple swap_triple() {
  AutTriple t;
  t.chi = {kOne, kOne};
  t.sigma = IntMatrix(2, 2);
  t.sigma.at(0, 1) = 1;
  t.sigma.at(1, 0) = 1;
  t.tau = ScalarMatrix(2, 2, Field::Q);
  t.tau.at(0, 1) = kOne;
  t.tau.at(1, 0) = kOne;
  return t;
}
}  // namespace

TEST_CASE("triple validation") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  CHECK(check_triple(w2, identity_triple(w2)).ok);
  CHECK(check_triple(w2, swap_triple()).ok);

  AutTriple doubled = identity_triple(w2);
  doubled.tau.at(0, 0) = Scalar(Rational(2));
  doubled.tau.at(1, 1) = Scalar(Rational(2));
  TripleCheck c = check_triple(w2, doubled);
  CHECK(!c.ok);
  CHECK(c.reason == "tau^T phi sigma differs from phi");

  AutTriple zero_chi = identity_triple(w2);
  zero_chi.chi[0] = Scalar(Rational(0));
  CHECK(!check_triple(w2, zero_chi).ok);
}

TEST_CASE("apply on the stated instances") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  WittElement x = WittElement::monomial(w1, Exponent::axis(1, 3),
                                        Tangent::axis(1, kOne));
  CHECK(apply_aut(identity_triple(w1), x) == x);

  AutTriple chi2 = identity_triple(w1);
  chi2.chi[0] = Scalar(Rational(2));
  CHECK(apply_aut(chi2, x) == x.scaled(Scalar(Rational(8))));

  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  Exponent e12;
  e12.set(1, 1);
  e12.set(2, 2);
  Exponent e21;
  e21.set(1, 2);
  e21.set(2, 1);
  WittElement m = WittElement::monomial(w2, e12, Tangent::axis(1, kOne));
  CHECK(apply_aut(swap_triple(), m) ==
        WittElement::monomial(w2, e21, Tangent::axis(2, kOne)));

  AutTriple bad = identity_triple(w2);
  bad.sigma.at(0, 0) = 2;
  CHECK_THROWS_AS(apply_aut(bad, m), Error);
}

TEST_CASE("composition and inversion") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  AutTriple a = identity_triple(w1);
  a.chi[0] = Scalar(Rational(2));
  AutTriple b = identity_triple(w1);
  b.chi[0] = Scalar(Rational(3));
  CHECK(compose(w1, a, b).chi[0] == Scalar(Rational(6)));

  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  CHECK(compose(w2, swap_triple(), swap_triple()) == identity_triple(w2));

  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    AutTriple theta = rng.valid_triple(w2);
    CHECK(compose(w2, theta, invert(w2, theta)) == identity_triple(w2));
  }
}

TEST_CASE("automorphisms preserve the bracket") {
  Rng rng(32);
  for (const AlgebraDescriptor& alg :
       {AlgebraDescriptor::kronecker(2), qx21()}) {
    for (int t = 0; t < 15; ++t) {
      AutTriple theta = rng.valid_triple(alg);
      WittElement x = rng.element(alg, 3, 3);
      WittElement y = rng.element(alg, 3, 3);
      CHECK(apply_aut_unchecked(theta, bracket(x, y)) ==
            bracket(apply_aut_unchecked(theta, x),
                    apply_aut_unchecked(theta, y)));
    }
  }
}

TEST_CASE("character is multiplicative on exponents") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  Rng rng(33);
  for (int t = 0; t < 40; ++t) {
    AutTriple theta = rng.valid_triple(w2);
    Exponent a = rng.exponent(2, -4, 4);
    Exponent b = rng.exponent(2, -4, 4);
    CHECK(theta.chi_value(a + b, Field::Q) ==
          theta.chi_value(a, Field::Q) * theta.chi_value(b, Field::Q));
  }
}

TEST_CASE("anchor element construction") {
  AlgebraDescriptor qx = qx21();
  DistinguishedElement w = build_distinguished(
      qx, 1, std::vector<BigInt>{BigInt(2), BigInt(3), BigInt(5), BigInt(7)});
  WittElement expect(qx);
  Scalar one = Scalar::one(Field::Qx);
  expect.add_term(Exponent::axis(1, 2), Tangent::axis(1, one));
  expect.add_term(Exponent::axis(1, 3), Tangent::axis(1, one));
  expect.add_term(Exponent::axis(2, 5), Tangent::axis(1, one));
  expect.add_term(Exponent::axis(2, 7), Tangent::axis(1, one));
  CHECK(w.element == expect);

  CHECK_THROWS_AS(
      build_distinguished(qx, 1, std::vector<BigInt>{BigInt(2), BigInt(4),
                                                     BigInt(5), BigInt(7)}),
      Error);
  CHECK_THROWS_AS(
      build_distinguished(qx, 1, std::vector<BigInt>{BigInt(1), BigInt(3),
                                                     BigInt(5), BigInt(7)}),
      Error);

  DistinguishedElement wm = build_distinguished(qx, -1);
  for (const auto& [e, t] : wm.element.terms()) {
    (void)t;
    CHECK(e.entries().begin()->second < 0);
  }
  // default constants are the first primes, interleaved
  CHECK(wm.k == std::vector<BigInt>{BigInt(2), BigInt(5)});
  CHECK(wm.k_prime == std::vector<BigInt>{BigInt(3), BigInt(7)});
}

TEST_CASE("axis map solver on the stated instances") {
  std::vector<AxisVector> s{{BigInt(2), 1}};
  std::vector<AxisVector> sp{{BigInt(2), 1}, {BigInt(3), 1}};
  AxisMapResult r = lemma23_decide(1, s, sp);
  CHECK(r.hypotheses_ok);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == IntMatrix::identity(1));

  std::vector<AxisVector> s2{{BigInt(2), 1}, {BigInt(3), 1},
                             {BigInt(5), 2}, {BigInt(7), 2}};
  r = lemma23_decide(2, s2, s2);
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == IntMatrix::identity(2));

  std::vector<AxisVector> sp_signed{{BigInt(2), 1}, {BigInt(-2), 1}};
  r = lemma23_decide(1, s, sp_signed);
  CHECK(!r.hypotheses_ok);
  REQUIRE(r.solutions.size() == 2);

  // missing axis coverage leaves infinitely many solutions
  CHECK_THROWS_AS(lemma23_decide(2, s, s2), Error);
}

TEST_CASE("axis map brute force agrees") {
  std::vector<AxisVector> s{{BigInt(2), 1}};
  std::vector<AxisVector> sp{{BigInt(2), 1}, {BigInt(3), 1}};
  AxisMapResult brute = lemma23_bruteforce(1, s, sp, 3);
  REQUIRE(brute.solutions.size() == 1);
  CHECK(brute.solutions[0] == IntMatrix::identity(1));

  std::vector<AxisVector> s2{{BigInt(2), 1}, {BigInt(3), 1},
                             {BigInt(5), 2}, {BigInt(7), 2}};
  CHECK(lemma23_bruteforce(2, s2, s2, 1).solutions ==
        std::vector<IntMatrix>{IntMatrix::identity(2)});

  CHECK(lemma23_bruteforce(1, s, sp, 0).solutions.empty());

  CHECK_THROWS_AS(lemma23_bruteforce(2, s2, s2, 50, 1000), Error);

  // the partitioned enumeration reports progress and honors cancellation
  int calls = 0;
  CHECK_THROWS_AS(lemma23_bruteforce(2, s2, s2, 8, 20'000'000,
                                     [&](std::uint64_t, std::uint64_t) {
                                       ++calls;
                                       return false;
                                     }),
                  Error);
  CHECK(calls > 0);
}

TEST_CASE("stabilizers") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  DistinguishedElement w11 = build_distinguished(
      w1, 1, std::vector<BigInt>{BigInt(2), BigInt(3)});
  auto stab = stabilizer_of(w1, w11);
  REQUIRE(stab.size() == 1);
  CHECK(stab[0] == identity_triple(w1));

  WittElement bad(w1);
  bad.add_term(Exponent::axis(1, 2), Tangent::axis(1, kOne));
  bad.add_term(Exponent::axis(1, 4), Tangent::axis(1, kOne));
  auto stab2 = stabilizer_of_element(w1, bad);
  REQUIRE(stab2.size() == 2);
  bool saw_minus = false;
  for (const auto& t : stab2) {
    CHECK(apply_aut_unchecked(t, bad) == bad);
    if (t.chi[0] == Scalar(Rational(-1))) saw_minus = true;
  }
  CHECK(saw_minus);

  AlgebraDescriptor qx = qx21();
  DistinguishedElement w21 = build_distinguished(
      qx, 1, std::vector<BigInt>{BigInt(2), BigInt(3), BigInt(5), BigInt(7)});
  auto stab3 = stabilizer_of(qx, w21);
  REQUIRE(stab3.size() == 1);
  CHECK(stab3[0] == identity_triple(qx));
}
