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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittkit/json_io.hpp"
#include "wittkit/selftest.hpp"
#include "wittkit/shift.hpp"

namespace py = pybind11;
using namespace wittkit;

namespace {

// The Python surface speaks the same canonical JSON as the CLI; objects are
// held natively and converted at the boundary.

AlgebraDescriptor alg_from_str(const std::string& s) {
  return descriptor_from_json(parse_json(s));
}

class PyOracle : public WitnessOracle {
 public:
  PyOracle(AlgebraDescriptor alg, py::function fn)
      : alg_(std::move(alg)), fn_(std::move(fn)) {}
  AutTriple witness_single(const WittElement& x) override {
    py::object res = fn_(canonical_dump(element_to_json(x)), py::none());
    return triple_from_json(parse_json(res.cast<std::string>()), alg_);
  }
  AutTriple witness_pair(const WittElement& x, const WittElement& y) override {
    py::object res = fn_(canonical_dump(element_to_json(x)),
                         canonical_dump(element_to_json(y)));
    return triple_from_json(parse_json(res.cast<std::string>()), alg_);
  }

 private:
  AlgebraDescriptor alg_;
  py::function fn_;
};

std::unique_ptr<WitnessOracle> oracle_from(const AlgebraDescriptor& alg,
                                           const py::object& spec) {
  if (py::isinstance<py::str>(spec)) {
    std::string s = spec.cast<std::string>();
    if (s == "shift") return std::make_unique<ShiftOracle>();
    AutTriple t = triple_from_json(parse_json(s), alg);
    return std::make_unique<StoredTripleOracle>(alg, t);
  }
  return std::make_unique<PyOracle>(alg, spec.cast<py::function>());
}

ProbeSet probe_set_from(const AlgebraDescriptor& alg,
                        const std::vector<std::string>& probes,
                        const std::vector<std::string>& images) {
  ProbeSet ps(alg);
  for (const auto& p : probes)
    ps.probes.push_back(element_from_json(parse_json(p), &alg));
  for (const auto& p : images)
    ps.images.push_back(element_from_json(parse_json(p), &alg));
  ps.validate();
  return ps;
}

}  // namespace

PYBIND11_MODULE(_wittkit, m) {
  m.doc() = "exact kernel for simple generalized Witt algebras";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError,
                      (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("kronecker_algebra", [](int n, const std::string& field) {
    return canonical_dump(descriptor_to_json(
        AlgebraDescriptor::kronecker(n, field_from_name(field))));
  }, py::arg("n"), py::arg("field") = "Q");

  m.def("countable_algebra", [](const std::string& field) {
    return canonical_dump(descriptor_to_json(
        AlgebraDescriptor::countable(field_from_name(field))));
  }, py::arg("field") = "Q");

  m.def("is_simple", [](const std::string& alg) {
    return is_simple(alg_from_str(alg));
  });

  m.def("bracket", [](const std::string& x, const std::string& y) {
    WittElement ex = element_from_json(parse_json(x));
    WittElement ey = element_from_json(parse_json(y));
    return canonical_dump(element_to_json(bracket(ex, ey)));
  });

  m.def("act", [](const std::string& x, const std::string& beta) {
    WittElement ex = element_from_json(parse_json(x));
    Exponent b = exponent_from_json(parse_json(beta), ex.algebra());
    Json out = Json::array();
    for (const auto& [e, c] : act(ex, b)) {
      Json mono;
      mono["exp"] = exponent_to_json(e, ex.algebra());
      mono["coeff"] = scalar_to_json(c);
      out.push_back(std::move(mono));
    }
    return canonical_dump(out);
  });

  m.def("check_triple", [](const std::string& alg, const std::string& t) {
    AlgebraDescriptor a = alg_from_str(alg);
    TripleCheck c = check_triple(a, triple_from_json(parse_json(t), a));
    return py::make_tuple(c.ok, c.reason);
  });

  m.def("apply_aut", [](const std::string& alg, const std::string& t,
                        const std::string& x) {
    AlgebraDescriptor a = alg_from_str(alg);
    return canonical_dump(element_to_json(apply_aut(
        triple_from_json(parse_json(t), a), element_from_json(parse_json(x), &a))));
  });

  m.def("compose", [](const std::string& alg, const std::string& a,
                      const std::string& b) {
    AlgebraDescriptor d = alg_from_str(alg);
    return canonical_dump(triple_to_json(
        compose(d, triple_from_json(parse_json(a), d),
                triple_from_json(parse_json(b), d)), d));
  });

  m.def("invert", [](const std::string& alg, const std::string& a) {
    AlgebraDescriptor d = alg_from_str(alg);
    return canonical_dump(
        triple_to_json(invert(d, triple_from_json(parse_json(a), d)), d));
  });

  m.def("build_distinguished", [](const std::string& alg, int sign,
                                  const std::optional<std::vector<std::string>>& constants) {
    AlgebraDescriptor d = alg_from_str(alg);
    std::optional<std::vector<BigInt>> cs;
    if (constants) {
      cs.emplace();
      for (const auto& c : *constants) cs->push_back(parse_bigint(c));
    }
    return canonical_dump(distinguished_to_json(build_distinguished(d, sign, cs)));
  }, py::arg("algebra"), py::arg("sign") = 1, py::arg("constants") = py::none());

  m.def("stabilizer", [](const std::string& alg, const std::string& element) {
    AlgebraDescriptor d = alg_from_str(alg);
    WittElement w = element_from_json(parse_json(element), &d);
    Json out = Json::array();
    for (const auto& t : stabilizer_of_element(d, w))
      out.push_back(triple_to_json(t, d));
    return canonical_dump(out);
  });

  m.def("shift_map", [](const std::string& x) {
    return canonical_dump(
        element_to_json(shift_map(element_from_json(parse_json(x)))));
  });

  m.def("shift_witness", [](const std::string& x, const std::string& y) {
    WittElement ex = element_from_json(parse_json(x));
    WittElement ey = element_from_json(parse_json(y));
    return canonical_dump(
        triple_to_json(shift_witness(ex, ey), ex.algebra()));
  });

  m.def("verify_local", [](const std::string& alg,
                           const std::vector<std::string>& probes,
                           const std::vector<std::string>& images,
                           const py::object& oracle) {
    AlgebraDescriptor d = alg_from_str(alg);
    auto o = oracle_from(d, oracle);
    return canonical_dump(
        verify_report_to_json(verify_local(probe_set_from(d, probes, images), *o)));
  });

  m.def("verify_2local", [](const std::string& alg,
                            const std::vector<std::string>& probes,
                            const std::vector<std::string>& images,
                            const py::object& oracle) {
    AlgebraDescriptor d = alg_from_str(alg);
    auto o = oracle_from(d, oracle);
    return canonical_dump(
        verify_report_to_json(verify_2local(probe_set_from(d, probes, images), *o)));
  });

  m.def("recover_local", [](const std::string& alg,
                            const std::vector<std::string>& probes,
                            const std::vector<std::string>& images,
                            const py::object& oracle) {
    AlgebraDescriptor d = alg_from_str(alg);
    auto o = oracle_from(d, oracle);
    return canonical_dump(triple_to_json(
        recover_local(probe_set_from(d, probes, images), *o), d));
  });

  m.def("recover_2local", [](const std::string& alg,
                             const std::vector<std::string>& probes,
                             const std::vector<std::string>& images,
                             const py::object& oracle) {
    AlgebraDescriptor d = alg_from_str(alg);
    auto o = oracle_from(d, oracle);
    return canonical_dump(triple_to_json(
        recover_2local(probe_set_from(d, probes, images), *o), d));
  });

  m.def("selftest", [](std::uint64_t seed) {
    auto results = run_acceptance(seed, "", "");
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["pass"] = r.pass;
      d["detail"] = r.detail;
      out.append(std::move(d));
    }
    return out;
  }, py::arg("seed") = 20260809);
}
