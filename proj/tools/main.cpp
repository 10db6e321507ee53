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

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wittkit/json_io.hpp"
#include "wittkit/sampling.hpp"
#include "wittkit/selftest.hpp"
#include "wittkit/shift.hpp"

namespace wittkit {
namespace {

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ParseError:
      return 2;
    case Errc::SearchSpaceTooLarge:
      return 4;
    case Errc::RecoveryMismatch:
    case Errc::WitnessDoesNotFixW:
    case Errc::NotLinearOnProbes:
    case Errc::OracleInvalidTriple:
      return 1;
    default:
      return 3;
  }
}

struct Options {
  std::string input = "-";
  std::string algebra;
  std::string field = "Q";
  std::string constants;
  int sign = 1;
  std::string bound = "3";
  std::uint64_t cap = 20'000'000;
  std::string oracle;
  std::uint64_t seed = 20260809;
  std::string golden_dir;
};

std::string slurp(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json_arg(const std::string& arg) {
  if (arg == "-") return parse_json(slurp(std::cin));
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return parse_json(arg);
  std::ifstream f(arg);
  if (!f) fail(Errc::ParseError, "cannot open " + arg);
  return parse_json(slurp(f));
}

Json read_input(const Options& opt) {
  Json j = read_json_arg(opt.input);
  if (!opt.algebra.empty() && j.is_object() && !j.contains("algebra"))
    j["algebra"] = read_json_arg(opt.algebra);
  return j;
}

AlgebraDescriptor algebra_of(const Json& input, const Options& opt) {
  if (input.is_object() && input.contains("algebra"))
    return descriptor_from_json(input["algebra"]);
  if (!opt.algebra.empty())
    return descriptor_from_json(read_json_arg(opt.algebra));
  // A bare descriptor document is also accepted.
  if (input.is_object() && input.contains("rank"))
    return descriptor_from_json(input);
  fail(Errc::ParseError, "no algebra descriptor given");
}

std::vector<BigInt> parse_constants(const std::string& text) {
  std::vector<BigInt> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) out.push_back(parse_bigint(cur));
  return out;
}

std::vector<AxisVector> axis_vectors_from(const Json& j) {
  std::vector<AxisVector> out;
  for (const auto& v : j) out.push_back(axis_vector_from_json(v));
  return out;
}

// Queries go to a subprocess as one JSON document on stdin; the reply is
// one triple JSON document on stdout.
class ExecOracle : public WitnessOracle {
 public:
  ExecOracle(AlgebraDescriptor alg, std::string command)
      : alg_(std::move(alg)), command_(std::move(command)) {}

  AutTriple witness_single(const WittElement& x) override {
    Json req;
    req["kind"] = "single";
    req["algebra"] = descriptor_to_json(alg_);
    req["x"] = element_to_json(x);
    return ask(req);
  }
  AutTriple witness_pair(const WittElement& x, const WittElement& y) override {
    Json req;
    req["kind"] = "pair";
    req["algebra"] = descriptor_to_json(alg_);
    req["x"] = element_to_json(x);
    req["y"] = element_to_json(y);
    return ask(req);
  }

 private:
  AutTriple ask(const Json& req) {
    char tmpl[] = "/tmp/wittkit-oracle-XXXXXX";
    int fd = mkstemp(tmpl);
    if (fd < 0) fail(Errc::Internal, "cannot create oracle request file");
    std::string body = canonical_dump(req);
    if (write(fd, body.data(), body.size()) < 0) {
      close(fd);
      fail(Errc::Internal, "cannot write oracle request");
    }
    close(fd);
    std::string cmd = command_ + " < " + tmpl;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) fail(Errc::Internal, "cannot start oracle command");
    std::string out;
    char chunk[4096];
    std::size_t got;
    while ((got = fread(chunk, 1, sizeof chunk, pipe)) > 0) out.append(chunk, got);
    int status = pclose(pipe);
    unlink(tmpl);
    if (status != 0)
      fail(Errc::OracleInvalidTriple, "oracle command failed");
    return triple_from_json(parse_json(out), alg_);
  }

  AlgebraDescriptor alg_;
  std::string command_;
};

struct OracleSetup {
  std::unique_ptr<WitnessOracle> oracle;
  // Fills missing probe images from what the oracle itself attests.
  std::function<WittElement(const WittElement&)> default_image;
};

OracleSetup make_oracle(const AlgebraDescriptor& alg, const Options& opt) {
  if (opt.oracle.empty())
    fail(Errc::ParseError, "--oracle is required for this subcommand");
  OracleSetup setup;
  if (opt.oracle == "builtin:shift") {
    setup.oracle = std::make_unique<ShiftOracle>();
    setup.default_image = [](const WittElement& x) { return shift_map(x); };
    return setup;
  }
  const std::string kBuiltin = "builtin:";
  const std::string kExec = "exec:";
  if (opt.oracle.rfind(kBuiltin, 0) == 0) {
    Json j = read_json_arg(opt.oracle.substr(kBuiltin.size()));
    Json tj = j.is_object() && j.contains("triple") ? j["triple"] : j;
    AutTriple theta = triple_from_json(tj, alg);
    TripleCheck c = check_triple(alg, theta);
    if (!c.ok) fail(Errc::InvalidTriple, "stored oracle triple: " + c.reason);
    auto oracle = std::make_unique<StoredTripleOracle>(alg, theta);
    setup.default_image = [theta](const WittElement& x) {
      return apply_aut_unchecked(theta, x);
    };
    setup.oracle = std::move(oracle);
    return setup;
  }
  if (opt.oracle.rfind(kExec, 0) == 0) {
    auto oracle = std::make_unique<ExecOracle>(alg, opt.oracle.substr(kExec.size()));
    WitnessOracle* raw = oracle.get();
    setup.default_image = [raw, alg](const WittElement& x) {
      AutTriple t = raw->witness_single(x);
      TripleCheck c = check_triple(alg, t);
      if (!c.ok) fail(Errc::OracleInvalidTriple, c.reason);
      return apply_aut_unchecked(t, x);
    };
    setup.oracle = std::move(oracle);
    return setup;
  }
  fail(Errc::ParseError, "unknown --oracle mode: " + opt.oracle);
}

ProbeSet probes_from_input(const Json& input, const AlgebraDescriptor& alg,
                           const OracleSetup& setup) {
  ProbeSet probes(alg);
  if (!input.contains("probes") || !input["probes"].is_array())
    fail(Errc::ParseError, "input needs a probes array");
  for (const auto& p : input["probes"])
    probes.probes.push_back(element_from_json(p, &alg));
  if (input.contains("images")) {
    for (const auto& p : input["images"])
      probes.images.push_back(element_from_json(p, &alg));
  } else {
    for (const auto& p : probes.probes)
      probes.images.push_back(setup.default_image(p));
  }
  probes.validate();
  return probes;
}

int emit(const Json& j, int code = 0) {
  std::cout << canonical_dump(j);
  return code;
}

int cmd_bracket(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  WittElement x = element_from_json(input.at("x"), &alg);
  WittElement y = element_from_json(input.at("y"), &alg);
  return emit(element_to_json(bracket(x, y)));
}

int cmd_act(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  WittElement x = element_from_json(input.at("x"), &alg);
  Exponent beta = exponent_from_json(input.at("beta"), alg);
  Json monos = Json::array();
  for (const auto& [e, c] : act(x, beta)) {
    Json m;
    m["exp"] = exponent_to_json(e, alg);
    m["coeff"] = scalar_to_json(c);
    monos.push_back(std::move(m));
  }
  Json out;
  out["monomials"] = std::move(monos);
  return emit(out);
}

int cmd_simple_check(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  bool simple = is_simple(alg);
  Json out;
  out["simple"] = simple;
  return emit(out, simple ? 0 : 1);
}

int cmd_aut_check(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  AutTriple t = triple_from_json(input.at("triple"), alg);
  TripleCheck c = check_triple(alg, t);
  Json out;
  out["valid"] = c.ok;
  out["reason"] = c.reason;
  return emit(out, c.ok ? 0 : 1);
}

int cmd_aut_apply(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  AutTriple t = triple_from_json(input.at("triple"), alg);
  WittElement x = element_from_json(input.at("x"), &alg);
  return emit(element_to_json(apply_aut(t, x)));
}

int cmd_aut_compose(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  AutTriple a = triple_from_json(input.at("a"), alg);
  AutTriple b = triple_from_json(input.at("b"), alg);
  for (const AutTriple* t : {&a, &b}) {
    TripleCheck c = check_triple(alg, *t);
    if (!c.ok) fail(Errc::InvalidTriple, c.reason);
  }
  return emit(triple_to_json(compose(alg, a, b), alg));
}

int cmd_aut_invert(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  AutTriple a = triple_from_json(input.at("a"), alg);
  TripleCheck c = check_triple(alg, a);
  if (!c.ok) fail(Errc::InvalidTriple, c.reason);
  return emit(triple_to_json(invert(alg, a), alg));
}

std::optional<std::vector<BigInt>> constants_of(const Json& input,
                                                const Options& opt) {
  if (input.is_object() && input.contains("constants")) {
    const Json& c = input["constants"];
    if (c.is_array()) {
      std::vector<BigInt> out;
      for (const auto& v : c) out.push_back(bigint_from_json(v));
      return out;
    }
    std::vector<BigInt> out;
    const Json& k = c.at("k");
    const Json& kp = c.at("k_prime");
    for (std::size_t i = 0; i < k.size(); ++i) {
      out.push_back(bigint_from_json(k[i]));
      out.push_back(bigint_from_json(kp[i]));
    }
    return out;
  }
  if (!opt.constants.empty()) return parse_constants(opt.constants);
  return std::nullopt;
}

int cmd_wnm(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  int sign = input.is_object() && input.contains("sign")
                 ? input["sign"].get<int>()
                 : opt.sign;
  DistinguishedElement w =
      build_distinguished(alg, sign, constants_of(input, opt));
  return emit(distinguished_to_json(w));
}

int cmd_lemma23(const Options& opt, bool brute) {
  Json input = read_input(opt);
  int n = input.at("n").get<int>();
  auto s = axis_vectors_from(input.at("s"));
  auto sp = axis_vectors_from(input.at("s_prime"));
  AxisMapResult res;
  if (brute) {
    BigInt bound = input.contains("bound") ? bigint_from_json(input["bound"])
                                           : parse_bigint(opt.bound);
    res = lemma23_bruteforce(n, s, sp, bound, opt.cap);
  } else {
    res = lemma23_decide(n, s, sp);
  }
  Json out;
  Json sols = Json::array();
  for (const auto& m : res.solutions) sols.push_back(int_matrix_to_json(m));
  out["solutions"] = std::move(sols);
  out["hypotheses_ok"] = res.hypotheses_ok;
  out["note"] = res.note;
  return emit(out);
}

int cmd_stabilizer(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  std::vector<AutTriple> stab;
  if (input.contains("element")) {
    stab = stabilizer_of_element(alg, element_from_json(input["element"], &alg));
  } else {
    int sign = input.contains("sign") ? input["sign"].get<int>() : opt.sign;
    stab = stabilizer_of(alg,
                         build_distinguished(alg, sign, constants_of(input, opt)));
  }
  Json out;
  Json list = Json::array();
  for (const auto& t : stab) list.push_back(triple_to_json(t, alg));
  out["stabilizer"] = std::move(list);
  return emit(out);
}

int cmd_defect(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  Sublattice l = sublattice_from_json(input.at("lattice"), alg);
  auto t = subspace_from_json(input.at("subspace"), alg);
  return emit(defect_to_json(alg, nondeg_defect(alg, l, t)));
}

int cmd_complete_pair(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  Sublattice l = sublattice_from_json(input.at("lattice"), alg);
  auto t = subspace_from_json(input.at("subspace"), alg);
  return emit(completion_to_json(alg, complete_pair(alg, l, t)));
}

int cmd_envelope(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  WittElement x = element_from_json(input.at("x"), &alg);
  WittElement y = element_from_json(input.at("y"), &alg);
  EnvelopeResult env = envelope(x, y);
  Json out = envelope_to_json(env);
  out["x_sub"] = element_to_json(env.embedding.to_sub(x));
  out["y_sub"] = element_to_json(env.embedding.to_sub(y));
  return emit(out);
}

int cmd_verify(const Options& opt, bool pairwise) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  OracleSetup setup = make_oracle(alg, opt);
  ProbeSet probes = probes_from_input(input, alg, setup);
  VerifyReport report = pairwise ? verify_2local(probes, *setup.oracle)
                                 : verify_local(probes, *setup.oracle);
  return emit(verify_report_to_json(report), report.pass ? 0 : 1);
}

int cmd_recover(const Options& opt, bool pairwise) {
  Json input = read_input(opt);
  AlgebraDescriptor alg = algebra_of(input, opt);
  OracleSetup setup = make_oracle(alg, opt);
  ProbeSet probes = probes_from_input(input, alg, setup);
  AutTriple t = pairwise ? recover_2local(probes, *setup.oracle)
                         : recover_local(probes, *setup.oracle);
  Json out;
  out["triple"] = triple_to_json(t, alg);
  return emit(out);
}

int cmd_shift(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor inf = AlgebraDescriptor::countable(
      field_from_name(opt.field));
  WittElement x = element_from_json(input.at("x"), &inf);
  return emit(element_to_json(shift_map(x)));
}

int cmd_shift_witness(const Options& opt) {
  Json input = read_input(opt);
  AlgebraDescriptor inf = AlgebraDescriptor::countable(
      field_from_name(opt.field));
  WittElement x = element_from_json(input.at("x"), &inf);
  WittElement y = input.contains("y") ? element_from_json(input["y"], &inf)
                                      : WittElement(x.algebra());
  AutTriple t = shift_witness(x, y);
  Json out;
  out["triple"] = triple_to_json(t, x.algebra());
  out["image_x"] = element_to_json(shift_map(x));
  out["image_y"] = element_to_json(shift_map(y));
  return emit(out);
}

int cmd_shift_demo(const Options&) {
  AlgebraDescriptor alg = AlgebraDescriptor::countable();
  Scalar one = Scalar::one(alg.field());
  std::vector<WittElement> samples;
  samples.push_back(WittElement::monomial(alg, Exponent::axis(1, 2),
                                          Tangent::axis(1, one)));
  WittElement mixed(alg);
  mixed.add_term(Exponent::axis(1, 1), Tangent::axis(2, one));
  mixed.add_term(Exponent::axis(2, 1), Tangent::axis(1, one));
  samples.push_back(mixed);
  samples.push_back(WittElement::monomial(alg, Exponent(), Tangent::axis(3, one)));

  Json out;
  Json sample_json = Json::array();
  for (const auto& s : samples) {
    Json e;
    e["input"] = element_to_json(s);
    e["image"] = element_to_json(shift_map(s));
    sample_json.push_back(std::move(e));
  }
  out["samples"] = std::move(sample_json);

  bool brackets_ok = true;
  for (const auto& a : samples)
    for (const auto& b : samples)
      brackets_ok = brackets_ok &&
                    shift_map(bracket(a, b)) == bracket(shift_map(a), shift_map(b));
  out["bracket_preserved"] = brackets_ok;

  AutTriple witness = shift_witness(samples[0], samples[1]);
  bool interpolates =
      apply_aut_unchecked(witness, samples[0]) == shift_map(samples[0]) &&
      apply_aut_unchecked(witness, samples[1]) == shift_map(samples[1]);
  Json wj;
  wj["triple"] = triple_to_json(witness, alg);
  wj["interpolates_both"] = interpolates;
  out["pair_witness"] = std::move(wj);

  NonImageCertificate cert = shift_non_surjectivity_certificate();
  CertificateCheck chk = check_non_image(cert.element);
  Json cj;
  cj["element"] = element_to_json(cert.element);
  cj["reason"] = cert.reason;
  cj["accepted"] = chk.accepted;
  out["non_surjectivity"] = std::move(cj);

  WittElement in_image =
      WittElement::monomial(alg, Exponent::axis(2, 1), Tangent::axis(2, one));
  CertificateCheck rejected = check_non_image(in_image);
  Json rj;
  rj["element"] = element_to_json(in_image);
  rj["accepted"] = rejected.accepted;
  if (rejected.preimage) rj["preimage"] = element_to_json(*rejected.preimage);
  out["rejected_example"] = std::move(rj);

  bool ok = brackets_ok && interpolates && chk.accepted && !rejected.accepted;
  return emit(out, ok ? 0 : 1);
}

std::string absolute_path(const std::string& p) {
  char buf[4096];
  if (p.empty()) return p;
  if (realpath(p.c_str(), buf)) return buf;
  return p;
}

int cmd_selftest(const Options& opt, const std::string& self_path) {
  std::string cli = absolute_path(self_path);
  std::string golden = opt.golden_dir;
  if (golden.empty()) {
    std::ifstream probe("tests/golden/cases.json");
    if (probe) golden = "tests/golden";
  }
  golden = absolute_path(golden);
  auto results = run_acceptance(opt.seed, cli, golden);
  bool ok = report_acceptance(results, std::cout);
  return ok ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& opt,
             const std::string& self_path) {
  if (cmd == "bracket") return cmd_bracket(opt);
  if (cmd == "act") return cmd_act(opt);
  if (cmd == "simple-check") return cmd_simple_check(opt);
  if (cmd == "aut-check") return cmd_aut_check(opt);
  if (cmd == "aut-apply") return cmd_aut_apply(opt);
  if (cmd == "aut-compose") return cmd_aut_compose(opt);
  if (cmd == "aut-invert") return cmd_aut_invert(opt);
  if (cmd == "wnm") return cmd_wnm(opt);
  if (cmd == "lemma23") return cmd_lemma23(opt, false);
  if (cmd == "lemma23-brute") return cmd_lemma23(opt, true);
  if (cmd == "stabilizer") return cmd_stabilizer(opt);
  if (cmd == "defect") return cmd_defect(opt);
  if (cmd == "complete-pair") return cmd_complete_pair(opt);
  if (cmd == "envelope") return cmd_envelope(opt);
  if (cmd == "verify-local") return cmd_verify(opt, false);
  if (cmd == "verify-2local") return cmd_verify(opt, true);
  if (cmd == "recover-local") return cmd_recover(opt, false);
  if (cmd == "recover-2local") return cmd_recover(opt, true);
  if (cmd == "shift") return cmd_shift(opt);
  if (cmd == "shift-witness") return cmd_shift_witness(opt);
  if (cmd == "shift-demo") return cmd_shift_demo(opt);
  if (cmd == "selftest") return cmd_selftest(opt, self_path);
  fail(Errc::ParseError, "unknown subcommand: " + cmd);
}

}  // namespace
}  // namespace wittkit

int main(int argc, char** argv) {
  using namespace wittkit;
  CLI::App app{"exact kernel for simple generalized Witt algebras"};
  std::string command;
  Options opt;
  app.add_option("command", command, "subcommand to run")->required();
  app.add_option("input", opt.input,
                 "input JSON: a path, '-' for stdin, or inline JSON");
  app.add_option("--algebra", opt.algebra, "algebra descriptor (path or inline)");
  app.add_option("--field", opt.field, "field tag: Q or Q(x)");
  app.add_option("--constants", opt.constants,
                 "anchor constants k1,k1',k2,k2',...");
  app.add_option("--sign", opt.sign, "anchor sign: 1 or -1");
  app.add_option("--bound", opt.bound, "entry bound for brute-force search");
  app.add_option("--cap", opt.cap, "enumeration cap for brute-force search");
  app.add_option("--oracle", opt.oracle,
                 "witness oracle: builtin:<triple-file>, builtin:shift, or "
                 "exec:<command>");
  app.add_option("--seed", opt.seed, "seed for deterministic sampling");
  app.add_option("--golden-dir", opt.golden_dir,
                 "golden corpus directory for selftest");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return dispatch(command, opt, argv[0]);
  } catch (const Error& e) {
    Json err;
    err["error"] = Json{{"code", errc_name(e.code())}, {"message", e.what()}};
    std::cout << canonical_dump(err);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
    std::cout << canonical_dump(err);
    return 3;
  }
}
