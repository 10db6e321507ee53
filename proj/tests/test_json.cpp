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
#include "wittkit/json_io.hpp"
#include "wittkit/sampling.hpp"

using namespace wittkit;

namespace {
AlgebraDescriptor qx21() {
  ScalarMatrix phi(1, 2, Field::Qx);
  phi.at(0, 0) = Scalar(RatFun::constant(Rational(1)));
  phi.at(0, 1) = Scalar(RatFun::variable());
  return AlgebraDescriptor::finite(2, 1, phi);
}
}  // namespace

TEST_CASE("scalar round trip") {
  Rng rng(61);
  for (int t = 0; t < 60; ++t) {
    for (Field f : {Field::Q, Field::Qx}) {
      Scalar s = rng.any_scalar(f);
      Json j = scalar_to_json(s);
      CHECK(scalar_from_json(j, f) == s);
      CHECK(canonical_dump(j) == canonical_dump(scalar_to_json(s)));
    }
  }
  CHECK_THROWS_AS(scalar_from_json(Json("1/0"), Field::Q), Error);
}

TEST_CASE("descriptor round trip") {
  for (const AlgebraDescriptor& alg :
       {AlgebraDescriptor::kronecker(3), qx21(), AlgebraDescriptor::countable()}) {
    Json j = descriptor_to_json(alg);
    CHECK(descriptor_from_json(j) == alg);
  }
  Json bad = descriptor_to_json(AlgebraDescriptor::kronecker(2));
  bad["dim"] = 3;
  CHECK_THROWS_AS(descriptor_from_json(bad), Error);
}

TEST_CASE("element round trip") {
  Rng rng(62);
  for (const AlgebraDescriptor& alg :
       {AlgebraDescriptor::kronecker(2), qx21(), AlgebraDescriptor::countable()}) {
    for (int t = 0; t < 40; ++t) {
      WittElement x = rng.element(alg, 4, 4);
      Json j = element_to_json(x);
      CHECK(element_from_json(j) == x);
      CHECK(canonical_dump(j) == canonical_dump(element_to_json(x)));
    }
  }
}

TEST_CASE("triple round trip") {
  Rng rng(63);
  for (const AlgebraDescriptor& alg :
       {AlgebraDescriptor::kronecker(2), AlgebraDescriptor::kronecker(3), qx21()}) {
    for (int t = 0; t < 25; ++t) {
      AutTriple theta = rng.valid_triple(alg);
      Json j = triple_to_json(theta, alg);
      CHECK(triple_from_json(j, alg) == theta);
    }
  }
  // countable-rank triple with declared support
  AlgebraDescriptor inf = AlgebraDescriptor::countable();
  AutTriple cycle = identity_triple_n(2, Field::Q);
  cycle.sigma = IntMatrix(2, 2);
  cycle.sigma.at(0, 1) = 1;
  cycle.sigma.at(1, 0) = 1;
  cycle.tau = ScalarMatrix(2, 2, Field::Q);
  cycle.tau.at(0, 1) = Scalar::one(Field::Q);
  cycle.tau.at(1, 0) = Scalar::one(Field::Q);
  Json j = triple_to_json(cycle, inf);
  CHECK(j["support"] == 2);
  CHECK(triple_from_json(j, inf) == cycle);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK_THROWS_AS(parse_json("{nope"), Error);
  CHECK_THROWS_AS(element_from_json(parse_json("{\"terms\": []}")), Error);
  Json j = parse_json(R"({"rank": 2, "dim": 2, "field": "F7"})");
  CHECK_THROWS_AS(descriptor_from_json(j), Error);
}
