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
#include "wittkit/locality.hpp"
#include "wittkit/sampling.hpp"
#include "wittkit/shift.hpp"

using namespace wittkit;

namespace {
const AlgebraDescriptor kInf = AlgebraDescriptor::countable();
const Scalar kOne = Scalar::one(Field::Q);
}  // namespace

TEST_CASE("shift moves every index up") {
  WittElement x = WittElement::monomial(kInf, Exponent::axis(1, 2),
                                        Tangent::axis(1, kOne));
  CHECK(shift_map(x) == WittElement::monomial(kInf, Exponent::axis(2, 2),
                                              Tangent::axis(2, kOne)));
  CHECK(shift_map(WittElement(kInf)).is_zero());
  CHECK_THROWS_AS(shift_map(WittElement(AlgebraDescriptor::kronecker(1))), Error);

  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    WittElement a = rng.element(kInf, 3, 3);
    WittElement b = rng.element(kInf, 3, 3);
    CHECK(shift_map(bracket(a, b)) == bracket(shift_map(a), shift_map(b)));
  }
}

TEST_CASE("cycle witnesses the shift") {
  WittElement x = WittElement::monomial(kInf, Exponent::axis(1, 2),
                                        Tangent::axis(1, kOne));
  AutTriple t = shift_witness(x, WittElement(kInf));
  CHECK(t.support() == 2);
  CHECK(apply_aut(t, x) == shift_map(x));

  WittElement y(kInf);
  y.add_term(Exponent::axis(1, 1), Tangent::axis(2, kOne));
  AutTriple t2 = shift_witness(y, y);
  CHECK(t2.support() == 3);
  CHECK(apply_aut(t2, y) == shift_map(y));
  CHECK(check_triple(kInf, t2).ok);

  AutTriple t0 = shift_witness(WittElement(kInf), WittElement(kInf));
  CHECK(t0 == identity_triple_n(1, Field::Q));
}

TEST_CASE("non-surjectivity certificates") {
  NonImageCertificate cert = shift_non_surjectivity_certificate();
  CertificateCheck chk = check_non_image(cert.element);
  CHECK(chk.accepted);

  WittElement with_first_coord = WittElement::monomial(
      kInf, Exponent::axis(1, 1), Tangent::axis(2, kOne));
  CHECK(check_non_image(with_first_coord).accepted);

  WittElement in_image = WittElement::monomial(kInf, Exponent::axis(2, 1),
                                               Tangent::axis(2, kOne));
  CertificateCheck rejected = check_non_image(in_image);
  CHECK(!rejected.accepted);
  REQUIRE(rejected.preimage.has_value());
  CHECK(*rejected.preimage == WittElement::monomial(kInf, Exponent::axis(1, 1),
                                                    Tangent::axis(1, kOne)));
}

TEST_CASE("shift is pointwise and pairwise witnessed") {
  Rng rng(52);
  ShiftOracle oracle;
  ProbeSet probes(kInf);
  int added = 0;
  while (added < 6) {
    WittElement x = rng.element(kInf, 3, 3);
    bool dup = false;
    for (const auto& q : probes.probes) dup = dup || q == x;
    if (dup) continue;
    probes.add(x, shift_map(x));
    ++added;
  }
  CHECK(verify_local(probes, oracle).pass);
  CHECK(verify_2local(probes, oracle).pass);
}
