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

#include "wittkit/json_io.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

std::string canonical_dump(const Json& j) { return j.dump() + "\n"; }

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "invalid JSON");
  return j;
}

Json bigint_to_json(const BigInt& v) { return v.str(); }

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  fail(Errc::ParseError, "expected an integer (number or decimal string)");
}

namespace {
Poly poly_from_json(const Json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "polynomial must be an array");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (v.is_number_integer())
      c.push_back(Rational(v.get<long long>()));
    else if (v.is_string())
      c.push_back(parse_rational(v.get<std::string>()));
    else
      fail(Errc::ParseError, "polynomial coefficient must be a rational string");
  }
  return Poly(std::move(c));
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  if (p.is_zero()) {
    a.push_back("0");
    return a;
  }
  for (const auto& c : p.coeffs()) a.push_back(format_rational(c));
  return a;
}
}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.field() == Field::Q) return format_rational(s.q());
  Json j;
  j["num"] = poly_to_json(s.fx().num());
  j["den"] = poly_to_json(s.fx().den());
  return j;
}

Scalar scalar_from_json(const Json& j, Field f) {
  if (j.is_object()) {
    if (f != Field::Qx)
      fail(Errc::ParseError, "rational-function scalar in a Q context");
    if (!j.contains("num") || !j.contains("den"))
      fail(Errc::ParseError, "rational function needs num and den");
    return Scalar(RatFun(poly_from_json(j["num"]), poly_from_json(j["den"])));
  }
  Rational v;
  if (j.is_number_integer())
    v = Rational(j.get<long long>());
  else if (j.is_string())
    v = parse_rational(j.get<std::string>());
  else
    fail(Errc::ParseError, "expected a scalar");
  return Scalar::of_rational(f, v);
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(bigint_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(Errc::ParseError, "matrix must be a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      fail(Errc::ParseError, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = bigint_from_json(j[i][c]);
  }
  return m;
}

Json descriptor_to_json(const AlgebraDescriptor& alg) {
  Json j;
  if (alg.is_infinite()) {
    j["rank"] = "inf";
    j["dim"] = "inf";
    j["field"] = field_name(alg.field());
    j["phi"] = "kronecker";
    return j;
  }
  j["rank"] = alg.rank();
  j["dim"] = alg.dim();
  j["field"] = field_name(alg.field());
  if (alg.is_kronecker()) {
    j["phi"] = "kronecker";
  } else {
    Json rows = Json::array();
    for (int i = 0; i < alg.dim(); ++i) {
      Json row = Json::array();
      for (int c = 0; c < alg.rank(); ++c)
        row.push_back(scalar_to_json(alg.phi().at(i, c)));
      rows.push_back(std::move(row));
    }
    j["phi"] = std::move(rows);
  }
  return j;
}

AlgebraDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "algebra descriptor must be an object");
  if (!j.contains("rank") || !j.contains("dim") || !j.contains("field"))
    fail(Errc::ParseError, "algebra descriptor needs rank, dim, field");
  Field f = field_from_name(j["field"].get<std::string>());
  bool inf_rank = j["rank"].is_string() && j["rank"].get<std::string>() == "inf";
  bool inf_dim = j["dim"].is_string() && j["dim"].get<std::string>() == "inf";
  if (inf_rank != inf_dim)
    fail(Errc::ParseError, "rank and dim must both be finite or both inf");
  if (inf_rank) return AlgebraDescriptor::countable(f);
  int n = j["rank"].get<int>();
  int m = j["dim"].get<int>();
  bool kronecker = !j.contains("phi") ||
                   (j["phi"].is_string() && j["phi"].get<std::string>() == "kronecker");
  if (kronecker) {
    if (n != m)
      fail(Errc::ParseError, "the Kronecker pairing needs rank = dim");
    return AlgebraDescriptor::kronecker(n, f);
  }
  const Json& phi = j["phi"];
  if (!phi.is_array() || static_cast<int>(phi.size()) != m)
    fail(Errc::ParseError, "phi must have dim rows");
  ScalarMatrix mat(m, n, f);
  for (int i = 0; i < m; ++i) {
    if (!phi[i].is_array() || static_cast<int>(phi[i].size()) != n)
      fail(Errc::ParseError, "phi rows must have rank entries");
    for (int c = 0; c < n; ++c) mat.at(i, c) = scalar_from_json(phi[i][c], f);
  }
  return AlgebraDescriptor::finite(n, m, std::move(mat));
}

Json exponent_to_json(const Exponent& e, const AlgebraDescriptor& alg) {
  if (alg.is_infinite()) {
    Json j = Json::object();
    for (const auto& [i, v] : e.entries())
      j[std::to_string(i)] = bigint_to_json(v);
    return j;
  }
  Json j = Json::array();
  for (const auto& v : e.dense(alg.rank())) j.push_back(bigint_to_json(v));
  return j;
}

Exponent exponent_from_json(const Json& j, const AlgebraDescriptor& alg) {
  Exponent e;
  if (j.is_array()) {
    if (!alg.is_infinite() && static_cast<int>(j.size()) != alg.rank())
      fail(Errc::ParseError, "exponent length differs from rank");
    for (std::size_t i = 0; i < j.size(); ++i)
      e.set(static_cast<int>(i) + 1, bigint_from_json(j[i]));
    return e;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      int idx = std::stoi(it.key());
      e.set(idx, bigint_from_json(it.value()));
    }
    return e;
  }
  fail(Errc::ParseError, "exponent must be an array or a sparse object");
}

Json tangent_to_json(const Tangent& t, const AlgebraDescriptor& alg) {
  if (alg.is_infinite()) {
    Json j = Json::object();
    for (const auto& [i, v] : t.entries()) j[std::to_string(i)] = scalar_to_json(v);
    return j;
  }
  Json j = Json::array();
  for (const auto& v : t.dense(alg.dim(), alg.field())) j.push_back(scalar_to_json(v));
  return j;
}

Tangent tangent_from_json(const Json& j, const AlgebraDescriptor& alg) {
  Tangent t;
  if (j.is_array()) {
    if (!alg.is_infinite() && static_cast<int>(j.size()) != alg.dim())
      fail(Errc::ParseError, "tangent length differs from dim");
    for (std::size_t i = 0; i < j.size(); ++i)
      t.set(static_cast<int>(i) + 1, scalar_from_json(j[i], alg.field()));
    return t;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      t.set(std::stoi(it.key()), scalar_from_json(it.value(), alg.field()));
    return t;
  }
  fail(Errc::ParseError, "tangent must be an array or a sparse object");
}

Json element_to_json(const WittElement& x) {
  Json j;
  j["algebra"] = descriptor_to_json(x.algebra());
  Json terms = Json::array();
  for (const auto& [e, t] : x.terms()) {
    Json term;
    term["exp"] = exponent_to_json(e, x.algebra());
    term["tan"] = tangent_to_json(t, x.algebra());
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

WittElement element_from_json(const Json& j, const AlgebraDescriptor* fallback) {
  if (!j.is_object()) fail(Errc::ParseError, "element must be an object");
  AlgebraDescriptor alg =
      j.contains("algebra") ? descriptor_from_json(j["algebra"])
                            : (fallback ? *fallback
                                        : (fail(Errc::ParseError,
                                                "element carries no algebra and "
                                                "no --algebra was given"),
                                           AlgebraDescriptor::kronecker(1)));
  WittElement x(alg);
  if (!j.contains("terms") || !j["terms"].is_array())
    fail(Errc::ParseError, "element needs a terms array");
  for (const auto& term : j["terms"]) {
    if (!term.contains("exp") || !term.contains("tan"))
      fail(Errc::ParseError, "term needs exp and tan");
    x.add_term(exponent_from_json(term["exp"], alg),
               tangent_from_json(term["tan"], alg));
  }
  x.validate();
  return x;
}

Json triple_to_json(const AutTriple& t, const AlgebraDescriptor& alg) {
  Json j;
  if (alg.is_infinite()) {
    j["support"] = t.support();
    Json chi = Json::object();
    for (std::size_t i = 0; i < t.chi.size(); ++i)
      if (!t.chi[i].is_one()) chi[std::to_string(i + 1)] = scalar_to_json(t.chi[i]);
    j["chi"] = std::move(chi);
  } else {
    Json chi = Json::array();
    for (const auto& c : t.chi) chi.push_back(scalar_to_json(c));
    j["chi"] = std::move(chi);
  }
  j["sigma"] = int_matrix_to_json(t.sigma);
  Json tau = Json::array();
  for (int i = 0; i < t.tau.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < t.tau.cols(); ++c) row.push_back(scalar_to_json(t.tau.at(i, c)));
    tau.push_back(std::move(row));
  }
  j["tau"] = std::move(tau);
  return j;
}

AutTriple triple_from_json(const Json& j, const AlgebraDescriptor& alg) {
  if (!j.is_object()) fail(Errc::ParseError, "triple must be an object");
  if (!j.contains("chi") || !j.contains("sigma") || !j.contains("tau"))
    fail(Errc::ParseError, "triple needs chi, sigma, tau");
  AutTriple t;
  t.sigma = int_matrix_from_json(j["sigma"]);
  const Json& tau = j["tau"];
  if (!tau.is_array() || tau.empty())
    fail(Errc::ParseError, "tau must be a matrix");
  int tr = static_cast<int>(tau.size());
  int tc = static_cast<int>(tau[0].size());
  t.tau = ScalarMatrix(tr, tc, alg.field());
  for (int i = 0; i < tr; ++i) {
    if (static_cast<int>(tau[i].size()) != tc)
      fail(Errc::ParseError, "ragged tau rows");
    for (int c = 0; c < tc; ++c)
      t.tau.at(i, c) = scalar_from_json(tau[i][c], alg.field());
  }
  int support = alg.is_infinite()
                    ? (j.contains("support") ? j["support"].get<int>()
                                             : t.sigma.rows())
                    : alg.rank();
  if (alg.is_infinite() && support != t.sigma.rows())
    fail(Errc::ParseError, "support differs from the sigma block size");
  const Json& chi = j["chi"];
  if (chi.is_array()) {
    for (const auto& c : chi) t.chi.push_back(scalar_from_json(c, alg.field()));
  } else if (chi.is_object()) {
    t.chi.assign(support, Scalar::one(alg.field()));
    for (auto it = chi.begin(); it != chi.end(); ++it) {
      int idx = std::stoi(it.key());
      if (idx < 1 || idx > support)
        fail(Errc::ParseError, "chi index outside the declared support");
      t.chi[idx - 1] = scalar_from_json(it.value(), alg.field());
    }
  } else {
    fail(Errc::ParseError, "chi must be an array or a sparse object");
  }
  return t;
}

Json distinguished_to_json(const DistinguishedElement& w) {
  Json j;
  j["element"] = element_to_json(w.element);
  Json k = Json::array(), kp = Json::array();
  for (const auto& v : w.k) k.push_back(bigint_to_json(v));
  for (const auto& v : w.k_prime) kp.push_back(bigint_to_json(v));
  j["constants"] = Json{{"k", std::move(k)}, {"k_prime", std::move(kp)}};
  j["sign"] = w.sign;
  return j;
}

Json axis_vector_to_json(const AxisVector& v) {
  Json j;
  j["coeff"] = bigint_to_json(v.coeff);
  j["axis"] = v.axis;
  return j;
}

AxisVector axis_vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeff") || !j.contains("axis"))
    fail(Errc::ParseError, "axis vector needs coeff and axis");
  return {bigint_from_json(j["coeff"]), j["axis"].get<int>()};
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  j["pass"] = r.pass;
  Json fs = Json::array();
  for (const auto& f : r.failures) {
    Json e;
    e["i"] = f.i;
    if (f.j >= 0) e["j"] = f.j;
    e["what"] = f.what;
    fs.push_back(std::move(e));
  }
  j["failures"] = std::move(fs);
  return j;
}

namespace {
Json exponent_list_to_json(const AlgebraDescriptor& alg,
                           const std::vector<std::vector<BigInt>>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(exponent_to_json(Exponent::from_dense(v), alg));
  return a;
}

Json tangent_list_to_json(const AlgebraDescriptor& alg,
                          const std::vector<Tangent>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) a.push_back(tangent_to_json(t, alg));
  return a;
}
}  // namespace

Json defect_to_json(const AlgebraDescriptor& alg, const DefectResult& d) {
  Json j;
  j["a0_basis"] = exponent_list_to_json(alg, d.a0.basis());
  j["t0_basis"] = tangent_list_to_json(alg, d.t0);
  j["r"] = d.r;
  return j;
}

Json completion_to_json(const AlgebraDescriptor& alg, const CompletionResult& c) {
  Json j;
  Json pair;
  pair["lattice_basis"] = exponent_list_to_json(alg, c.pair.lattice.basis());
  pair["subspace_basis"] = tangent_list_to_json(alg, c.pair.subspace);
  pair["certificate"] = defect_to_json(alg, c.pair.certificate);
  j["pair"] = std::move(pair);
  j["r_initial"] = c.r_initial;
  Json trace = Json::array();
  for (const auto& s : c.trace) {
    Json step;
    step["kind"] = s.seed ? "seed" : (s.added_exponent ? "exponent" : "tangent");
    if (s.seed || s.added_exponent) step["exp"] = exponent_to_json(s.alpha, alg);
    if (s.seed || !s.added_exponent) step["tan"] = tangent_to_json(s.tangent, alg);
    step["r_after"] = s.r_after;
    trace.push_back(std::move(step));
  }
  j["trace"] = std::move(trace);
  return j;
}

Json envelope_to_json(const EnvelopeResult& e) {
  Json j = completion_to_json(e.embedding.ambient, e.completion);
  j["sub_algebra"] = descriptor_to_json(e.embedding.sub);
  return j;
}

Sublattice sublattice_from_json(const Json& j, const AlgebraDescriptor& alg) {
  if (!j.is_array()) fail(Errc::ParseError, "lattice must be an array of exponents");
  std::vector<std::vector<BigInt>> gens;
  for (const auto& g : j)
    gens.push_back(exponent_from_json(g, alg).dense(alg.rank()));
  return Sublattice(alg.rank(), gens);
}

std::vector<Tangent> subspace_from_json(const Json& j, const AlgebraDescriptor& alg) {
  if (!j.is_array()) fail(Errc::ParseError, "subspace must be an array of tangents");
  std::vector<Tangent> ts;
  for (const auto& t : j) ts.push_back(tangent_from_json(t, alg));
  return ts;
}

}  // namespace wittkit
