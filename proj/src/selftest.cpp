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

#include "wittkit/selftest.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "wittkit/json_io.hpp"
#include "wittkit/sampling.hpp"
#include "wittkit/shift.hpp"

namespace wittkit {

namespace {

struct Check {
  bool pass = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

AlgebraDescriptor qx_algebra_2_1() {
  ScalarMatrix phi(1, 2, Field::Qx);
  phi.at(0, 0) = Scalar(RatFun::constant(Rational(1)));
  phi.at(0, 1) = Scalar(RatFun::variable());
  return AlgebraDescriptor::finite(2, 1, phi);
}

AlgebraDescriptor qx_algebra_3_2() {
  ScalarMatrix phi(2, 3, Field::Qx);
  phi.at(0, 0) = Scalar(RatFun::constant(Rational(1)));
  phi.at(0, 1) = Scalar(RatFun());
  phi.at(0, 2) = Scalar(RatFun::variable());
  phi.at(1, 0) = Scalar(RatFun());
  phi.at(1, 1) = Scalar(RatFun::constant(Rational(1)));
  phi.at(1, 2) = Scalar(RatFun::variable());
  return AlgebraDescriptor::finite(3, 2, phi);
}

WittElement nonzero_element(Rng& rng, const AlgebraDescriptor& alg, int max_terms,
                            int range) {
  for (;;) {
    WittElement x = rng.element(alg, max_terms, range);
    if (!x.is_zero()) return x;
  }
}

// --- criterion bodies -----------------------------------------------------

Check lie_axioms(Rng& rng) {
  Check c;
  auto run = [&](const AlgebraDescriptor& alg, int rounds) {
    for (int t = 0; t < rounds && c.pass; ++t) {
      WittElement x = rng.element(alg, 5, 4);
      WittElement y = rng.element(alg, 5, 4);
      WittElement z = rng.element(alg, 5, 4);
      WittElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                        bracket(z, bracket(x, y));
      c.expect(jac.is_zero(), "Jacobi identity failed");
      c.expect(bracket(x, y) == -bracket(y, x), "anticommutativity failed");
      c.expect(bracket(x, x).is_zero(), "alternation failed");
    }
  };
  run(AlgebraDescriptor::kronecker(3), 1000);
  run(qx_algebra_2_1(), 200);
  return c;
}

Check gradation(Rng& rng) {
  Check c;
  AlgebraDescriptor alg = AlgebraDescriptor::kronecker(3);
  for (int t = 0; t < 500 && c.pass; ++t) {
    Exponent a = rng.exponent(3, -4, 4);
    Exponent b = rng.exponent(3, -4, 4);
    WittElement x = WittElement::monomial(alg, a, rng.tangent(alg, 3));
    WittElement y = WittElement::monomial(alg, b, rng.tangent(alg, 3));
    WittElement br = bracket(x, y);
    for (const auto& [e, tan] : br.terms()) {
      (void)tan;
      c.expect(e == a + b, "bracket term escaped the degree a+b");
    }
  }
  return c;
}

Check triple_action(Rng& rng) {
  Check c;
  for (int t = 0; t < 100 && c.pass; ++t) {
    AlgebraDescriptor alg = AlgebraDescriptor::kronecker(t % 2 == 0 ? 2 : 3);
    AutTriple theta = rng.valid_triple(alg);
    c.expect(check_triple(alg, theta).ok, "sampled triple failed validation");
    for (int p = 0; p < 20 && c.pass; ++p) {
      WittElement x = rng.element(alg, 4, 3);
      WittElement y = rng.element(alg, 4, 3);
      c.expect(apply_aut_unchecked(theta, bracket(x, y)) ==
                   bracket(apply_aut_unchecked(theta, x),
                           apply_aut_unchecked(theta, y)),
               "triple does not preserve the bracket");
    }
    AutTriple inv = invert(alg, theta);
    c.expect(compose(alg, theta, inv) == identity_triple(alg),
             "compose(theta, invert(theta)) is not the identity");
    c.expect(compose(alg, inv, theta) == identity_triple(alg),
             "invert is not a two-sided inverse");
    AutTriple other = rng.valid_triple(alg);
    AutTriple third = rng.valid_triple(alg);
    c.expect(compose(alg, compose(alg, theta, other), third) ==
                 compose(alg, theta, compose(alg, other, third)),
             "composition is not associative");
    WittElement x = rng.element(alg, 4, 3);
    c.expect(apply_aut_unchecked(compose(alg, theta, other), x) ==
                 apply_aut_unchecked(theta, apply_aut_unchecked(other, x)),
             "apply does not respect composition");
  }
  return c;
}

Check simplicity(Rng& rng) {
  Check c;
  for (int n = 1; n <= 4; ++n)
    c.expect(is_simple(AlgebraDescriptor::kronecker(n)),
             "Kronecker algebra reported non-simple");
  c.expect(is_simple(qx_algebra_2_1()), "(1, x) pairing reported non-simple");
  c.expect(!is_simple(AlgebraDescriptor::kronecker(0)),
           "rank-0 algebra reported simple");
  for (int t = 0; t < 50 && c.pass; ++t) {
    int n = rng.int_in(2, 4);
    int m = rng.int_in(1, n - 1);
    ScalarMatrix phi(m, n, Field::Q);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        phi.at(i, j) = Scalar(Rational(rng.int_in(-4, 4)));
    c.expect(!is_simple(AlgebraDescriptor::finite(n, m, phi)),
             "rational pairing with dim < rank reported simple");
  }
  return c;
}

Check axis_rigidity(Rng&) {
  Check c;
  for (int n = 1; n <= 3 && c.pass; ++n) {
    std::vector<BigInt> primes = first_primes(2 * n);
    std::vector<AxisVector> sp;
    for (int i = 1; i <= n; ++i) {
      sp.push_back({primes[2 * (i - 1)], i});
      sp.push_back({primes[2 * (i - 1) + 1], i});
    }
    // Every subset of S' that involves each axis: per axis take the first
    // constant, the second, or both.
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 3;
    for (int mask = 0; mask < combos && c.pass; ++mask) {
      std::vector<AxisVector> s;
      int rest = mask;
      for (int i = 0; i < n; ++i) {
        int choice = rest % 3;
        rest /= 3;
        if (choice == 0 || choice == 2) s.push_back(sp[2 * i]);
        if (choice == 1 || choice == 2) s.push_back(sp[2 * i + 1]);
      }
      AxisMapResult res = lemma23_decide(n, s, sp);
      c.expect(res.hypotheses_ok, "hypotheses flagged on a clean instance");
      c.expect(res.solutions.size() == 1 &&
                   res.solutions[0] == IntMatrix::identity(n),
               "rigidity solver found a non-identity solution");
      if (n <= 2) {
        AxisMapResult brute = lemma23_bruteforce(n, s, sp, 8);
        c.expect(brute.solutions == res.solutions,
                 "brute force disagrees with the solver");
      }
    }
  }
  // Violated hypotheses still decide and agree with brute force.
  std::vector<AxisVector> s{{BigInt(2), 1}};
  std::vector<AxisVector> sp{{BigInt(2), 1}, {BigInt(-2), 1}};
  AxisMapResult res = lemma23_decide(1, s, sp);
  c.expect(!res.hypotheses_ok, "sign violation not flagged");
  c.expect(res.solutions.size() == 2, "expected both signs as solutions");
  AxisMapResult brute = lemma23_bruteforce(1, s, sp, 8);
  c.expect(brute.solutions == res.solutions,
           "brute force disagrees on the flagged instance");
  return c;
}

Check stabilizer_triviality(Rng&) {
  Check c;
  struct Case {
    AlgebraDescriptor alg;
    std::string name;
  };
  std::vector<Case> cases{{AlgebraDescriptor::kronecker(1), "W1"},
                          {AlgebraDescriptor::kronecker(2), "W2"},
                          {AlgebraDescriptor::kronecker(3), "W3"},
                          {qx_algebra_2_1(), "W(2,1|x)"},
                          {qx_algebra_3_2(), "W(3,2|x)"}};
  for (const auto& cs : cases) {
    int n = cs.alg.rank();
    std::vector<BigInt> alt;
    static const int alt_pool[] = {3, 4, 5, 7, 11, 13};
    for (int i = 0; i < 2 * n; ++i) alt.push_back(alt_pool[i]);
    for (int sign : {1, -1}) {
      for (int variant = 0; variant < 2; ++variant) {
        auto constants = variant == 0
                             ? std::optional<std::vector<BigInt>>()
                             : std::optional<std::vector<BigInt>>(alt);
        DistinguishedElement w = build_distinguished(cs.alg, sign, constants);
        auto stab = stabilizer_of(cs.alg, w);
        c.expect(stab.size() == 1 && stab[0] == identity_triple(cs.alg),
                 "nontrivial stabilizer in " + cs.name);
        if (!c.pass) return c;
      }
    }
  }
  // Negative control: constants 2 and 4 share a factor, so the character
  // value -1 also fixes the element.
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  WittElement bad(w1);
  bad.add_term(Exponent::axis(1, 2), Tangent::axis(1, Scalar::one(Field::Q)));
  bad.add_term(Exponent::axis(1, 4), Tangent::axis(1, Scalar::one(Field::Q)));
  auto stab = stabilizer_of_element(w1, bad);
  c.expect(stab.size() == 2, "negative control stabilizer is not of size 2");
  for (const auto& t : stab)
    c.expect(apply_aut_unchecked(t, bad) == bad,
             "reported stabilizer element does not fix the element");
  return c;
}

Check pair_completion(Rng& rng) {
  Check c;
  AlgebraDescriptor alg = AlgebraDescriptor::kronecker(4);
  for (int t = 0; t < 200 && c.pass; ++t) {
    Sublattice a_bar = rng.sublattice(4, 3, 3);
    std::vector<Tangent> t_bar = rng.subspace(alg, 3);
    CompletionResult res = complete_pair(alg, a_bar, t_bar);
    c.expect(res.pair.certificate.r == 0, "completion left a nonzero defect");
    int non_seed = 0;
    int prev_r = res.r_initial;
    for (const auto& step : res.trace) {
      if (step.seed) continue;
      ++non_seed;
      c.expect(step.r_after < prev_r, "defect did not strictly decrease");
      prev_r = step.r_after;
    }
    c.expect(non_seed <= res.r_initial, "more steps than the initial defect");
    for (const auto& g : a_bar.generators())
      c.expect(res.pair.lattice.contains(g), "input generator lost");
    auto base = res.pair.subspace;
    for (const auto& tan : t_bar) {
      auto grown = base;
      grown.push_back(tan);
      c.expect(reduce_subspace(alg, grown).size() == base.size(),
               "input tangent lost");
    }
  }
  return c;
}

Check two_element_envelope(Rng& rng) {
  Check c;
  AlgebraDescriptor alg = AlgebraDescriptor::kronecker(3);
  for (int t = 0; t < 200 && c.pass; ++t) {
    WittElement x = rng.element(alg, 3, 3);
    WittElement y = rng.element(alg, 3, 3);
    EnvelopeResult env = envelope(x, y);
    c.expect(is_simple(env.embedding.sub), "restricted pairing not simple");
    c.expect(env.embedding.to_ambient(env.embedding.to_sub(x)) == x,
             "x does not embed into the envelope");
    c.expect(env.embedding.to_ambient(env.embedding.to_sub(y)) == y,
             "y does not embed into the envelope");
  }
  return c;
}

AlgebraDescriptor recovery_algebra(int trip) {
  switch (trip % 5) {
    case 0:
    case 1: return AlgebraDescriptor::kronecker(2);
    case 2:
    case 3: return AlgebraDescriptor::kronecker(3);
    default: return qx_algebra_2_1();
  }
}

Check two_local_recovery(Rng& rng) {
  Check c;
  for (int trip = 0; trip < 100 && c.pass; ++trip) {
    AlgebraDescriptor alg = recovery_algebra(trip);
    AutTriple hidden = rng.valid_triple(alg);
    StoredTripleOracle oracle(alg, hidden);
    ProbeSet probes(alg);
    int count = rng.int_in(2, 4);
    std::set<std::string> seen;
    while (static_cast<int>(probes.probes.size()) < count) {
      WittElement x = nonzero_element(rng, alg, 3, 3);
      if (!seen.insert(canonical_dump(element_to_json(x))).second) continue;
      probes.add(x, apply_aut_unchecked(hidden, x));
    }
    AutTriple rec = recover_2local(probes, oracle);
    EnvelopeResult env = envelope_of(alg, probes.probes);
    for (int z = 0; z < 50 && c.pass; ++z) {
      WittElement zs = rng.element(env.embedding.sub, 3, 3);
      WittElement za = env.embedding.to_ambient(zs);
      c.expect(apply_aut_unchecked(rec, za) == apply_aut_unchecked(hidden, za),
               "recovered triple disagrees with the hidden one");
    }
  }
  // A map no automorphism interpolates: scale one basis monomial.
  AlgebraDescriptor w1 = AlgebraDescriptor::kronecker(1);
  ProbeSet probes(w1);
  WittElement p(w1);
  p.add_term(Exponent::axis(1, 2), Tangent::axis(1, Scalar::one(Field::Q)));
  probes.add(p, p.scaled(Scalar(Rational(2))));
  StoredTripleOracle cheat(w1, identity_triple(w1));
  bool threw = false;
  try {
    recover_2local(probes, cheat);
  } catch (const Error& e) {
    threw = e.code() == Errc::RecoveryMismatch;
  }
  c.expect(threw, "non-interpolable map did not raise RecoveryMismatch");
  return c;
}

Check local_recovery(Rng& rng) {
  Check c;
  for (int trip = 0; trip < 100 && c.pass; ++trip) {
    AlgebraDescriptor alg = recovery_algebra(trip);
    const int n = alg.rank();
    AutTriple hidden = rng.valid_triple(alg);
    StoredTripleOracle oracle(alg, hidden);
    ProbeSet probes(alg);
    auto add_probe = [&](const WittElement& x) {
      for (const auto& q : probes.probes)
        if (q == x) return;
      probes.add(x, apply_aut_unchecked(hidden, x));
    };
    // A spanning slice: one monomial per axis pair, plus an exponent from
    // the anchor's exceptional set so the mirrored pass runs.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= alg.dim(); ++j)
        add_probe(WittElement::monomial(
            alg, Exponent::axis(i, 1),
            Tangent::axis(j, Scalar::one(alg.field()))));
    add_probe(WittElement::monomial(alg, Exponent::axis(1, 2),
                                    Tangent::axis(1, Scalar::one(alg.field()))));
    for (int extra = rng.int_in(0, 2); extra > 0; --extra)
      add_probe(WittElement::monomial(
          alg, rng.exponent(n, -3, 3),
          Tangent::axis(rng.int_in(1, alg.dim()), Scalar::one(alg.field()))));
    AutTriple rec = recover_local(probes, oracle);
    EnvelopeResult env = envelope_of(alg, probes.probes);
    for (int z = 0; z < 50 && c.pass; ++z) {
      WittElement zs = rng.element(env.embedding.sub, 3, 3);
      WittElement za = env.embedding.to_ambient(zs);
      c.expect(apply_aut_unchecked(rec, za) == apply_aut_unchecked(hidden, za),
               "recovered triple disagrees with the hidden one");
    }
  }
  // Identity map sanity.
  AlgebraDescriptor w2 = AlgebraDescriptor::kronecker(2);
  ProbeSet probes(w2);
  for (int i = 1; i <= 2; ++i) {
    WittElement m = WittElement::monomial(w2, Exponent::axis(i, 1),
                                          Tangent::axis(i, Scalar::one(Field::Q)));
    probes.add(m, m);
  }
  StoredTripleOracle id_oracle(w2, identity_triple(w2));
  c.expect(recover_local(probes, id_oracle) == identity_triple(w2),
           "identity map did not recover the identity triple");
  return c;
}

Check shift_counterexample(Rng& rng) {
  Check c;
  AlgebraDescriptor alg = AlgebraDescriptor::countable();
  std::set<std::string> inputs, images;
  while (static_cast<int>(inputs.size()) < 100) {
    WittElement x = rng.element(alg, 3, 3);
    if (!inputs.insert(canonical_dump(element_to_json(x))).second) continue;
    images.insert(canonical_dump(element_to_json(shift_map(x))));
  }
  c.expect(images.size() == 100, "shift_map collided on distinct inputs");
  for (int t = 0; t < 100 && c.pass; ++t) {
    WittElement x = rng.element(alg, 3, 3);
    WittElement y = rng.element(alg, 3, 3);
    c.expect(shift_map(bracket(x, y)) == bracket(shift_map(x), shift_map(y)),
             "shift_map does not preserve the bracket");
  }
  ShiftOracle oracle;
  ProbeSet probes(alg);
  std::set<std::string> seen;
  while (static_cast<int>(probes.probes.size()) < 50) {
    WittElement x = rng.element(alg, 3, 3);
    if (!seen.insert(canonical_dump(element_to_json(x))).second) continue;
    probes.add(x, shift_map(x));
  }
  c.expect(verify_local(probes, oracle).pass, "pointwise verification failed");
  // 7 probes give 49 ordered pairs, one witness each.
  ProbeSet pair_probes(alg);
  pair_probes.probes.assign(probes.probes.begin(), probes.probes.begin() + 7);
  pair_probes.images.assign(probes.images.begin(), probes.images.begin() + 7);
  c.expect(verify_2local(pair_probes, oracle).pass,
           "pairwise verification failed");
  NonImageCertificate cert = shift_non_surjectivity_certificate();
  c.expect(check_non_image(cert.element).accepted,
           "canonical non-image certificate rejected");
  WittElement alt = WittElement::monomial(alg, Exponent::axis(1, 1),
                                          Tangent::axis(2, Scalar::one(Field::Q)));
  c.expect(check_non_image(alt).accepted,
           "nonzero first coordinate certificate rejected");
  WittElement in_image = WittElement::monomial(
      alg, Exponent::axis(2, 1), Tangent::axis(2, Scalar::one(Field::Q)));
  CertificateCheck chk = check_non_image(in_image);
  c.expect(!chk.accepted && chk.preimage.has_value(),
           "image element accepted as a certificate");
  if (chk.preimage)
    c.expect(shift_map(*chk.preimage) == in_image, "refutation preimage wrong");
  return c;
}

}  // namespace

std::string run_golden_corpus(const std::string& cli_path,
                              const std::string& golden_dir) {
  if (cli_path.empty() || golden_dir.empty())
    return "golden corpus not configured (need the CLI path and corpus dir)";
  std::ifstream manifest(golden_dir + "/cases.json");
  if (!manifest) return "cannot open " + golden_dir + "/cases.json";
  std::stringstream buf;
  buf << manifest.rdbuf();
  Json cases = parse_json(buf.str());
  auto run_once = [&](const std::string& cmd, std::string& out) -> int {
    out.clear();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char chunk[4096];
    std::size_t got;
    while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0) out.append(chunk, got);
    int status = pclose(pipe);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  for (const auto& c : cases) {
    std::string name = c["name"].get<std::string>();
    std::string cmd = "cd '" + golden_dir + "' && '" + cli_path + "'";
    for (const auto& a : c["args"]) cmd += " " + a.get<std::string>();
    cmd += " 2>/dev/null";
    int want_exit = c.contains("exit") ? c["exit"].get<int>() : 0;
    std::ifstream exp(golden_dir + "/" + c["expected"].get<std::string>(),
                      std::ios::binary);
    if (!exp) return name + ": missing expected file";
    std::stringstream want;
    want << exp.rdbuf();
    std::string out1, out2;
    int code1 = run_once(cmd, out1);
    int code2 = run_once(cmd, out2);
    if (code1 != want_exit)
      return name + ": exit " + std::to_string(code1) + ", expected " +
             std::to_string(want_exit);
    if (out1 != out2) return name + ": output differs between two runs";
    if (out1 != want.str()) return name + ": output differs from the golden file";
  }
  return "";
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::string& cli_path,
                                            const std::string& golden_dir) {
  struct Entry {
    const char* name;
    std::function<Check(Rng&)> body;
  };
  std::vector<Entry> entries{
      {"lie_axioms", lie_axioms},
      {"gradation", gradation},
      {"triple_action", triple_action},
      {"simplicity", simplicity},
      {"axis_rigidity", axis_rigidity},
      {"stabilizer_triviality", stabilizer_triviality},
      {"pair_completion", pair_completion},
      {"two_element_envelope", two_element_envelope},
      {"two_local_recovery", two_local_recovery},
      {"local_recovery", local_recovery},
      {"shift_counterexample", shift_counterexample},
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (const auto& e : entries) {
    CriterionResult r;
    r.id = id++;
    r.name = e.name;
    Rng rng(seed + static_cast<std::uint64_t>(r.id) * 7919);
    auto t0 = std::chrono::steady_clock::now();
    try {
      Check c = e.body(rng);
      r.pass = c.pass;
      r.detail = c.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
    out.push_back(std::move(r));
  }
  CriterionResult g;
  g.id = id;
  g.name = "cli_determinism";
  auto t0 = std::chrono::steady_clock::now();
  std::string err = run_golden_corpus(cli_path, golden_dir);
  g.pass = err.empty();
  g.detail = err;
  g.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.push_back(std::move(g));
  return out;
}

bool report_acceptance(const std::vector<CriterionResult>& results,
                       std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name
        << " (" << r.seconds << "s)";
    if (!r.pass && !r.detail.empty()) out << ": " << r.detail;
    out << "\n";
    all = all && r.pass;
  }
  out << (all ? "ACCEPTANCE: all criteria passed"
              : "ACCEPTANCE: some criteria FAILED")
      << "\n";
  return all;
}

}  // namespace wittkit
