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

using namespace wittkit;

namespace {
const Scalar kOne = Scalar::one(Field::Q);

Sublattice lattice_of(int n, std::vector<std::vector<int>> gens) {
  std::vector<std::vector<BigInt>> g;
  for (const auto& v : gens) g.emplace_back(v.begin(), v.end());
  return Sublattice(n, g);
}

/// Oracle that answers with an inconsistent triple for pair queries whose
/// second element differs from the first.
class InconsistentOracle : public WitnessOracle {
 public:
  InconsistentOracle(AlgebraDescriptor alg, AutTriple honest, AutTriple rogue)
      : alg_(std::move(alg)), honest_(std::move(honest)), rogue_(std::move(rogue)) {}
  AutTriple witness_single(const WittElement&) override { return honest_; }
  AutTriple witness_pair(const WittElement& x, const WittElement& y) override {
    return x == y ? honest_ : rogue_;
  }

 private:
  AlgebraDescriptor alg_;
  AutTriple honest_, rogue_;
};
}  // namespace

TEST_CASE("defect computation") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  auto d = nondeg_defect(w2, lattice_of(2, {{1, 0}}),
                         {Tangent::axis(2, kOne)});
  CHECK(d.r == 2);
  CHECK(d.a0.rank() == 1);
  CHECK(d.t0.size() == 1);

  auto full = nondeg_defect(w2, lattice_of(2, {{1, 0}, {0, 1}}),
                            {Tangent::axis(1, kOne), Tangent::axis(2, kOne)});
  CHECK(full.r == 0);

  auto empty = nondeg_defect(w2, Sublattice(2), {});
  CHECK(empty.r == 0);

  ScalarMatrix ones(1, 2, Field::Q);
  ones.at(0, 0) = Scalar(Rational(1));
  ones.at(0, 1) = Scalar(Rational(1));
  AlgebraDescriptor degenerate = AlgebraDescriptor::finite(2, 1, ones);
  CHECK_THROWS_AS(nondeg_defect(degenerate, Sublattice(2), {}), Error);
}

TEST_CASE("pair completion trace") {
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  auto res = complete_pair(w2, lattice_of(2, {{1, 0}}), {Tangent::axis(2, kOne)});
  CHECK(res.r_initial == 2);
  REQUIRE(res.trace.size() == 2);
  CHECK(res.trace[0].added_exponent);
  CHECK(res.trace[0].alpha == Exponent::axis(2, 1));
  CHECK(res.trace[0].r_after == 1);
  CHECK(!res.trace[1].added_exponent);
  CHECK(res.trace[1].tangent == Tangent::axis(1, kOne));
  CHECK(res.trace[1].r_after == 0);
  CHECK(res.pair.lattice.rank() == 2);
  CHECK(res.pair.subspace.size() == 2);

  auto untouched = complete_pair(w2, lattice_of(2, {{1, 0}, {0, 1}}),
                                 {Tangent::axis(1, kOne), Tangent::axis(2, kOne)});
  CHECK(untouched.trace.empty());
  CHECK(untouched.r_initial == 0);

  AlgebraDescriptor w3 = AlgebraDescriptor::kronecker(3);
  auto res3 = complete_pair(w3, lattice_of(3, {{0, 0, 1}}),
                            {Tangent::axis(1, kOne)});
  REQUIRE(res3.trace.size() == 2);
  CHECK(res3.trace[0].alpha == Exponent::axis(1, 1));
  CHECK(res3.trace[1].tangent == Tangent::axis(3, kOne));
  CHECK(res3.pair.lattice.rank() == 2);
  CHECK(res3.pair.subspace.size() == 2);
}

TEST_CASE("envelope on the stated instances") {
  AlgebraDescriptor w3 = AlgebraDescriptor::kronecker(3);
  WittElement x = WittElement::monomial(w3, Exponent::axis(1, 1),
                                        Tangent::axis(1, kOne));
  WittElement y = WittElement::monomial(w3, Exponent::axis(2, 1),
                                        Tangent::axis(2, kOne));
  EnvelopeResult env = envelope(x, y);
  CHECK(env.completion.trace.empty());
  CHECK(env.embedding.sub.rank() == 2);
  CHECK(env.embedding.sub.dim() == 2);
  CHECK(env.embedding.to_ambient(env.embedding.to_sub(x)) == x);

  EnvelopeResult zero_env = envelope(WittElement(w3), WittElement(w3));
  REQUIRE(zero_env.completion.trace.size() == 1);
  CHECK(zero_env.completion.trace[0].seed);
  CHECK(zero_env.embedding.sub.rank() == 1);
  CHECK(zero_env.embedding.sub.dim() == 1);
  CHECK(zero_env.embedding.lattice_basis[0] == Exponent::axis(1, 1));

  WittElement x3 = WittElement::monomial(w3, Exponent::axis(3, 1),
                                         Tangent::axis(1, kOne));
  EnvelopeResult env3 = envelope(x3, WittElement(w3));
  CHECK(env3.embedding.sub.rank() == 2);
  CHECK(env3.embedding.sub.dim() == 2);
  CHECK(is_simple(env3.embedding.sub));
}

TEST_CASE("pairwise verification") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  StoredTripleOracle id_oracle(w1, identity_triple(w1));
  ProbeSet probes(w1);
  WittElement p = WittElement::monomial(w1, Exponent::axis(1, 2),
                                        Tangent::axis(1, kOne));
  probes.add(p, p);
  CHECK(verify_2local(probes, id_oracle).pass);

  ProbeSet scaled(w1);
  scaled.add(p, p.scaled(Scalar(Rational(2))));
  VerifyReport r = verify_2local(scaled, id_oracle);
  CHECK(!r.pass);
  REQUIRE(!r.failures.empty());

  // oracle returning a non-automorphism is a typed error
  AutTriple bad = identity_triple(w1);
  bad.chi[0] = Scalar(Rational(0));
  StoredTripleOracle bad_oracle(w1, bad);
  CHECK_THROWS_AS(verify_2local(probes, bad_oracle), Error);
}

TEST_CASE("pointwise verification checks linearity") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  StoredTripleOracle id_oracle(w1, identity_triple(w1));
  WittElement a = WittElement::monomial(w1, Exponent::axis(1, 1),
                                        Tangent::axis(1, kOne));
  WittElement b = a.scaled(Scalar(Rational(2)));

  ProbeSet fine(w1);
  fine.add(a, a);
  fine.add(b, b);
  CHECK(verify_local(fine, id_oracle).pass);

  // images that break homogeneity: a -> a but 2a -> 6a
  ProbeSet broken(w1);
  broken.add(a, a);
  broken.add(b, b.scaled(Scalar(Rational(3))));
  VerifyReport r = verify_local(broken, id_oracle);
  CHECK(!r.pass);
}

TEST_CASE("pairwise recovery round trip") {
  Rng rng(41);
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  for (int trip = 0; trip < 10; ++trip) {
    AutTriple hidden = rng.valid_triple(w2);
    StoredTripleOracle oracle(w2, hidden);
    ProbeSet probes(w2);
    WittElement p1 = WittElement::monomial(w2, Exponent::axis(1, 1),
                                           Tangent::axis(1, kOne));
    WittElement p2 = WittElement::monomial(w2, Exponent::axis(2, 1),
                                           Tangent::axis(2, kOne));
    probes.add(p1, apply_aut_unchecked(hidden, p1));
    probes.add(p2, apply_aut_unchecked(hidden, p2));
    AutTriple rec = recover_2local(probes, oracle);
    for (int t = 0; t < 10; ++t) {
      WittElement z = rng.element(w2, 3, 3);
      CHECK(apply_aut_unchecked(rec, z) == apply_aut_unchecked(hidden, z));
    }
  }
}

TEST_CASE("recovery failure modes") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  WittElement p = WittElement::monomial(w1, Exponent::axis(1, 2),
                                        Tangent::axis(1, kOne));

  // No automorphism maps t^{2e}d to twice itself over Q.
  ProbeSet probes(w1);
  probes.add(p, p.scaled(Scalar(Rational(2))));
  StoredTripleOracle cheat(w1, identity_triple(w1));
  CHECK_THROWS_WITH_AS(recover_2local(probes, cheat),
                       doctest::Contains("disagrees"), Error);

  // A witness that does not fix the anchor is reported as such.
  AutTriple flip = identity_triple(w1);
  flip.sigma.at(0, 0) = -1;
  flip.tau.at(0, 0) = Scalar(Rational(-1));
  REQUIRE(check_triple(w1, flip).ok);
  ProbeSet simple(w1);
  simple.add(p, p);
  InconsistentOracle fickle(w1, identity_triple(w1), flip);
  bool saw_fix_error = false;
  try {
    recover_2local(simple, fickle);
  } catch (const Error& e) {
    saw_fix_error = e.code() == Errc::WitnessDoesNotFixW;
  }
  CHECK(saw_fix_error);

  // Additivity violations in the pointwise protocol.
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  WittElement zero_probe(w2);
  ProbeSet bad_zero(w2);
  bad_zero.add(zero_probe, WittElement::monomial(w2, Exponent::axis(1, 1),
                                                 Tangent::axis(1, kOne)));
  StoredTripleOracle id2(w2, identity_triple(w2));
  CHECK_THROWS_AS(recover_local(bad_zero, id2), Error);
}

TEST_CASE("pointwise recovery covers exceptional exponents") {
  Rng rng(42);
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  AutTriple hidden = rng.valid_triple(w2);
  StoredTripleOracle oracle(w2, hidden);
  ProbeSet probes(w2);
  for (int i = 1; i <= 2; ++i) {
    WittElement m = WittElement::monomial(w2, Exponent::axis(i, 1),
                                          Tangent::axis(i, kOne));
    probes.add(m, apply_aut_unchecked(hidden, m));
  }
  // 2 e_1 sits inside the plus anchor's exceptional set with the default
  // first-prime constants, so the mirrored pass must certify it.
  WittElement exceptional = WittElement::monomial(w2, Exponent::axis(1, 2),
                                                  Tangent::axis(1, kOne));
  probes.add(exceptional, apply_aut_unchecked(hidden, exceptional));
  AutTriple rec = recover_local(probes, oracle);
  for (int t = 0; t < 20; ++t) {
    WittElement z = rng.element(w2, 3, 3);
    CHECK(apply_aut_unchecked(rec, z) == apply_aut_unchecked(hidden, z));
  }
}

TEST_CASE("element ratio") {
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  WittElement a = WittElement::monomial(w1, Exponent::axis(1, 1),
                                        Tangent::axis(1, kOne));
  CHECK(*element_ratio(a, a.scaled(Scalar(Rational(5)))) == Scalar(Rational(5)));
  CHECK(element_ratio(a, WittElement(w1))->is_zero());
  WittElement other = WittElement::monomial(w1, Exponent::axis(1, 2),
                                            Tangent::axis(1, kOne));
  CHECK(!element_ratio(a, other).has_value());
  CHECK(!element_ratio(WittElement(w1), a).has_value());
}
