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

#include "wittkit/pairs.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

std::vector<Tangent> reduce_subspace(const AlgebraDescriptor& alg,
                                     const std::vector<Tangent>& generators) {
  if (generators.empty()) return {};
  const int m = alg.dim();
  const Field f = alg.field();
  ScalarMatrix rows(static_cast<int>(generators.size()), m, f);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    auto dense = generators[i].dense(m, f);
    for (int j = 0; j < m; ++j) rows.at(static_cast<int>(i), j) = dense[j];
  }
  ScalarMatrix r = rows.rref();
  std::vector<Tangent> basis;
  for (int i = 0; i < r.rows(); ++i) {
    std::vector<Scalar> v(m);
    bool nonzero = false;
    for (int j = 0; j < m; ++j) {
      v[j] = r.at(i, j);
      if (!v[j].is_zero()) nonzero = true;
    }
    if (nonzero) basis.push_back(Tangent::from_dense(v));
  }
  return basis;
}

namespace {
void require_finite_simple(const AlgebraDescriptor& alg) {
  if (alg.is_infinite() || !is_simple(alg))
    fail(Errc::NotSimpleAmbient, "a finite simple ambient algebra is required");
}

std::vector<BigInt> basis_vector(int n, int j) {
  std::vector<BigInt> v(n, BigInt(0));
  v[j - 1] = 1;
  return v;
}
}  // namespace

DefectResult nondeg_defect(const AlgebraDescriptor& alg, const Sublattice& a_bar,
                           const std::vector<Tangent>& t_bar) {
  require_finite_simple(alg);
  if (a_bar.ambient_rank() != alg.rank())
    fail(Errc::RankMismatch, "lattice ambient rank differs from the algebra");
  const int n = alg.rank();
  const Field f = alg.field();
  std::vector<Tangent> tbasis = reduce_subspace(alg, t_bar);

  DefectResult out;
  // A0 = {alpha in A-bar : phi(T-bar, alpha) = 0}
  std::vector<std::vector<Scalar>> rows;
  for (const auto& t : tbasis) {
    std::vector<Scalar> row(n, Scalar::zero(f));
    for (int j = 1; j <= n; ++j) row[j - 1] = phi_pair(alg, t, Exponent::axis(j, 1));
    rows.push_back(std::move(row));
  }
  out.a0 = lattice_constraint_kernel(a_bar, rows);

  // T0 = {d in T-bar : phi(d, A-bar) = 0}, solved in T-bar coordinates.
  if (tbasis.empty()) {
    out.t0 = {};
  } else if (a_bar.rank() == 0) {
    out.t0 = tbasis;
  } else {
    ScalarMatrix m(a_bar.rank(), static_cast<int>(tbasis.size()), f);
    for (int i = 0; i < a_bar.rank(); ++i) {
      Exponent a = Exponent::from_dense(a_bar.basis()[i]);
      for (std::size_t k = 0; k < tbasis.size(); ++k)
        m.at(i, static_cast<int>(k)) = phi_pair(alg, tbasis[k], a);
    }
    for (const auto& c : m.nullspace()) {
      Tangent t;
      for (std::size_t k = 0; k < tbasis.size(); ++k)
        t = t + tbasis[k].scaled(c[k]);
      out.t0.push_back(std::move(t));
    }
  }
  out.r = out.a0.rank() + static_cast<int>(out.t0.size());
  return out;
}

CompletionResult complete_pair(const AlgebraDescriptor& alg, const Sublattice& a_bar,
                               const std::vector<Tangent>& t_bar) {
  require_finite_simple(alg);
  const int n = alg.rank(), m = alg.dim();
  const Field f = alg.field();

  Sublattice lattice = a_bar;
  std::vector<Tangent> subspace = reduce_subspace(alg, t_bar);
  CompletionResult out;
  DefectResult defect = nondeg_defect(alg, lattice, subspace);
  out.r_initial = defect.r;

  if (lattice.rank() == 0 && subspace.empty()) {
    // Empty input: adjoin the first pairing (e_j, d_i) that couples.
    bool seeded = false;
    for (int j = 1; j <= n && !seeded; ++j)
      for (int i = 1; i <= m && !seeded; ++i) {
        if (alg.pairing(i, j).is_zero()) continue;
        lattice = lattice.adjoin(basis_vector(n, j));
        subspace.push_back(Tangent::axis(i, Scalar::one(f)));
        subspace = reduce_subspace(alg, subspace);
        defect = nondeg_defect(alg, lattice, subspace);
        CompletionStep step;
        step.seed = true;
        step.added_exponent = true;  // records both; alpha and tangent set
        step.alpha = Exponent::axis(j, 1);
        step.tangent = Tangent::axis(i, Scalar::one(f));
        step.r_after = defect.r;
        out.trace.push_back(std::move(step));
        seeded = true;
      }
    if (!seeded) fail(Errc::Internal, "simple algebra without a coupling pair");
  }

  while (defect.r > 0) {
    int r_before = defect.r;
    CompletionStep step;
    if (!defect.t0.empty()) {
      // Some tangent directions pair to zero with the whole lattice: grow
      // the lattice by the first basis vector that couples with one.
      int pick = 0;
      for (int j = 1; j <= n && pick == 0; ++j) {
        for (const auto& t : defect.t0) {
          if (!phi_pair(alg, t, Exponent::axis(j, 1)).is_zero()) {
            pick = j;
            break;
          }
        }
      }
      if (pick == 0) fail(Errc::Internal, "no basis vector couples with T0");
      lattice = lattice.adjoin(basis_vector(n, pick));
      step.added_exponent = true;
      step.alpha = Exponent::axis(pick, 1);
    } else {
      // Dually, grow the subspace against A0.
      int pick = 0;
      for (int i = 1; i <= m && pick == 0; ++i) {
        Tangent di = Tangent::axis(i, Scalar::one(f));
        for (const auto& a : defect.a0.basis()) {
          if (!phi_pair(alg, di, Exponent::from_dense(a)).is_zero()) {
            pick = i;
            break;
          }
        }
      }
      if (pick == 0) fail(Errc::Internal, "no tangent direction couples with A0");
      subspace.push_back(Tangent::axis(pick, Scalar::one(f)));
      subspace = reduce_subspace(alg, subspace);
      step.added_exponent = false;
      step.tangent = Tangent::axis(pick, Scalar::one(f));
    }
    defect = nondeg_defect(alg, lattice, subspace);
    step.r_after = defect.r;
    out.trace.push_back(step);
    if (defect.r >= r_before)
      fail(Errc::Internal, "defect did not decrease");
  }

  out.pair.lattice = lattice;
  out.pair.subspace = subspace;
  out.pair.certificate = defect;
  return out;
}

Exponent SubalgebraEmbedding::exp_to_ambient(const Exponent& sub_exp) const {
  Exponent out;
  for (const auto& [j, c] : sub_exp.entries()) {
    if (j > static_cast<int>(lattice_basis.size()))
      fail(Errc::RankMismatch, "sub exponent support exceeds the basis");
    for (const auto& [i, v] : lattice_basis[j - 1].entries())
      out.set(i, out.at(i) + c * v);
  }
  return out;
}

Tangent SubalgebraEmbedding::tan_to_ambient(const Tangent& sub_tan) const {
  Tangent out;
  for (const auto& [j, c] : sub_tan.entries()) {
    if (j > static_cast<int>(tangent_basis.size()))
      fail(Errc::RankMismatch, "sub tangent support exceeds the basis");
    out = out + tangent_basis[j - 1].scaled(c);
  }
  return out;
}

WittElement SubalgebraEmbedding::to_ambient(const WittElement& sub_elem) const {
  if (sub_elem.algebra() != sub)
    fail(Errc::AlgebraMismatch, "element is not in the subalgebra");
  WittElement out(ambient);
  for (const auto& [e, t] : sub_elem.terms())
    out.add_term(exp_to_ambient(e), tan_to_ambient(t));
  out.validate();
  return out;
}

std::optional<Exponent> SubalgebraEmbedding::exp_to_sub(
    const Exponent& ambient_exp) const {
  // Solve over QQ against the stored basis, then demand integrality.
  ScalarMatrix b(ambient.rank(), static_cast<int>(lattice_basis.size()), Field::Q);
  for (std::size_t j = 0; j < lattice_basis.size(); ++j) {
    auto dense = lattice_basis[j].dense(ambient.rank());
    for (int i = 0; i < ambient.rank(); ++i)
      b.at(i, static_cast<int>(j)) = Scalar(Rational(dense[i]));
  }
  std::vector<Scalar> rhs(ambient.rank());
  auto dense = ambient_exp.dense(ambient.rank());
  for (int i = 0; i < ambient.rank(); ++i) rhs[i] = Scalar(Rational(dense[i]));
  auto sol = b.solve_unique(rhs);
  if (!sol) return std::nullopt;
  Exponent out;
  for (std::size_t j = 0; j < lattice_basis.size(); ++j) {
    const Rational& v = (*sol)[j].q();
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    out.set(static_cast<int>(j) + 1, boost::multiprecision::numerator(v));
  }
  return out;
}

std::optional<Tangent> SubalgebraEmbedding::tan_to_sub(
    const Tangent& ambient_tan) const {
  const int m = ambient.dim();
  const Field f = ambient.field();
  if (tangent_basis.empty())
    return ambient_tan.is_zero() ? std::optional<Tangent>(Tangent())
                                 : std::nullopt;
  ScalarMatrix b(m, static_cast<int>(tangent_basis.size()), f);
  for (std::size_t j = 0; j < tangent_basis.size(); ++j) {
    auto dense = tangent_basis[j].dense(m, f);
    for (int i = 0; i < m; ++i) b.at(i, static_cast<int>(j)) = dense[i];
  }
  auto sol = b.solve_unique(ambient_tan.dense(m, f));
  if (!sol) return std::nullopt;
  Tangent out;
  for (std::size_t j = 0; j < tangent_basis.size(); ++j)
    out.set(static_cast<int>(j) + 1, (*sol)[j]);
  return out;
}

WittElement SubalgebraEmbedding::to_sub(const WittElement& ambient_elem) const {
  if (ambient_elem.algebra() != ambient)
    fail(Errc::AlgebraMismatch, "element is not in the ambient algebra");
  WittElement out(sub);
  for (const auto& [e, t] : ambient_elem.terms()) {
    auto se = exp_to_sub(e);
    auto st = tan_to_sub(t);
    if (!se || !st)
      fail(Errc::RankMismatch, "element lies outside the subalgebra");
    out.add_term(*se, *st);
  }
  out.validate();
  return out;
}

EnvelopeResult envelope_of(const AlgebraDescriptor& alg,
                           const std::vector<WittElement>& elements) {
  require_finite_simple(alg);
  std::vector<std::vector<BigInt>> gens;
  std::vector<Tangent> tans;
  for (const auto& x : elements) {
    if (x.algebra() != alg)
      fail(Errc::AlgebraMismatch, "elements from different algebras");
    for (const auto& [e, t] : x.terms()) {
      gens.push_back(e.dense(alg.rank()));
      tans.push_back(t);
    }
  }
  EnvelopeResult out;
  out.completion = complete_pair(alg, Sublattice(alg.rank(), gens), tans);

  const NondegPair& pair = out.completion.pair;
  const int np = pair.lattice.rank();
  const int mp = static_cast<int>(pair.subspace.size());
  ScalarMatrix phi(mp, np, alg.field());
  for (int i = 0; i < mp; ++i)
    for (int j = 0; j < np; ++j)
      phi.at(i, j) = phi_pair(alg, pair.subspace[i],
                              Exponent::from_dense(pair.lattice.basis()[j]));
  out.embedding.ambient = alg;
  out.embedding.sub = AlgebraDescriptor::finite(np, mp, phi);
  for (const auto& col : pair.lattice.basis())
    out.embedding.lattice_basis.push_back(Exponent::from_dense(col));
  out.embedding.tangent_basis = pair.subspace;
  if (!is_simple(out.embedding.sub))
    fail(Errc::Internal, "completed pair is degenerate");
  return out;
}

EnvelopeResult envelope(const WittElement& x, const WittElement& y) {
  if (x.algebra() != y.algebra())
    fail(Errc::AlgebraMismatch, "elements from different algebras");
  return envelope_of(x.algebra(), {x, y});
}

}  // namespace wittkit
