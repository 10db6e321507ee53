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

#include "wittkit/lattice.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

namespace {
std::vector<std::vector<BigInt>> hnf_columns(
    int ambient, const std::vector<std::vector<BigInt>>& vectors) {
  if (vectors.empty()) return {};
  IntMatrix m(ambient, static_cast<int>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (static_cast<int>(vectors[c].size()) != ambient)
      fail(Errc::RankMismatch, "generator has wrong ambient rank");
    for (int i = 0; i < ambient; ++i) m.at(i, static_cast<int>(c)) = vectors[c][i];
  }
  IntMatrix h = hnf(m).h;
  std::vector<std::vector<BigInt>> cols;
  for (int c = 0; c < h.cols(); ++c) {
    bool zero = true;
    std::vector<BigInt> v(ambient);
    for (int i = 0; i < ambient; ++i) {
      v[i] = h.at(i, c);
      if (v[i] != 0) zero = false;
    }
    if (!zero) cols.push_back(std::move(v));
  }
  return cols;
}
}  // namespace

Sublattice::Sublattice(int ambient_rank,
                       const std::vector<std::vector<BigInt>>& generators)
    : ambient_(ambient_rank), generators_(generators) {
  basis_ = hnf_columns(ambient_, generators_);
}

std::optional<std::vector<BigInt>> Sublattice::coordinates(
    const std::vector<BigInt>& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    fail(Errc::RankMismatch, "vector has wrong ambient rank");
  // Back-substitution against the HNF staircase: basis column c has its
  // topmost nonzero entry strictly below the previous column's.
  std::vector<BigInt> rem = v;
  std::vector<BigInt> coords(basis_.size(), BigInt(0));
  for (std::size_t c = 0; c < basis_.size(); ++c) {
    int pivot_row = -1;
    for (int i = 0; i < ambient_; ++i)
      if (basis_[c][i] != 0) {
        pivot_row = i;
        break;
      }
    const BigInt& p = basis_[c][pivot_row];
    if (rem[pivot_row] % p != 0) {
      // Entries above this pivot must already be zero for membership; a
      // nonzero residue either way means v is outside the lattice.
      return std::nullopt;
    }
    BigInt q = rem[pivot_row] / p;
    coords[c] = q;
    if (q != 0)
      for (int i = 0; i < ambient_; ++i) rem[i] -= q * basis_[c][i];
  }
  for (int i = 0; i < ambient_; ++i)
    if (rem[i] != 0) return std::nullopt;
  return coords;
}

bool Sublattice::contains(const std::vector<BigInt>& v) const {
  return coordinates(v).has_value();
}

Sublattice Sublattice::adjoin(const std::vector<BigInt>& v) const {
  std::vector<std::vector<BigInt>> gens = basis_;
  gens.push_back(v);
  return Sublattice(ambient_, gens);
}

std::vector<std::vector<BigInt>> scalar_rows_integer_kernel(
    int width, const std::vector<std::vector<Scalar>>& rows) {
  // Expand field rows into QQ rows: over Q(x), sum_j f_j(x) v_j = 0 with
  // integer unknowns v splits into one QQ row per power of x.
  std::vector<std::vector<Rational>> qrows;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != width)
      fail(Errc::RankMismatch, "constraint row has wrong width");
    bool any_qx = false;
    for (const auto& s : row) {
      if (s.field() != row[0].field())
        fail(Errc::AlgebraMismatch, "mixed-field constraint row");
      if (s.field() == Field::Qx) any_qx = true;
    }
    if (!any_qx) {
      std::vector<Rational> q(width);
      for (int j = 0; j < width; ++j) q[j] = row[j].q();
      qrows.push_back(std::move(q));
      continue;
    }
    // Clear denominators so every entry becomes a polynomial.
    Poly common = Poly::constant(Rational(1));
    for (const auto& s : row) {
      const Poly& d = s.fx().den();
      Poly g = Poly::gcd(common, d);
      common = common * Poly::exact_div(d, g);
    }
    std::vector<Poly> cleared(width);
    int max_deg = 0;
    for (int j = 0; j < width; ++j) {
      const RatFun& f = row[j].fx();
      cleared[j] = f.num() * Poly::exact_div(common, f.den());
      max_deg = std::max(max_deg, cleared[j].degree());
    }
    for (int d = 0; d <= max_deg; ++d) {
      std::vector<Rational> q(width);
      bool nonzero = false;
      for (int j = 0; j < width; ++j) {
        q[j] = cleared[j].coeff(static_cast<std::size_t>(d));
        if (q[j] != 0) nonzero = true;
      }
      if (nonzero) qrows.push_back(std::move(q));
    }
  }
  // Clear rational denominators rowwise, then take the integer kernel.
  IntMatrix m(static_cast<int>(qrows.size()), width);
  for (std::size_t i = 0; i < qrows.size(); ++i) {
    BigInt lcm(1);
    for (const auto& v : qrows[i]) {
      BigInt den = boost::multiprecision::denominator(v);
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (int j = 0; j < width; ++j) {
      Rational scaled = qrows[i][j] * Rational(lcm);
      m.at(static_cast<int>(i), j) = boost::multiprecision::numerator(scaled);
    }
  }
  if (qrows.empty()) {
    std::vector<std::vector<BigInt>> id;
    for (int j = 0; j < width; ++j) {
      std::vector<BigInt> e(width, BigInt(0));
      e[j] = 1;
      id.push_back(std::move(e));
    }
    return id;
  }
  return integer_kernel(m);
}

Sublattice lattice_constraint_kernel(const Sublattice& l,
                                     const std::vector<std::vector<Scalar>>& rows) {
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != l.ambient_rank())
      fail(Errc::RankMismatch, "constraint row has wrong ambient rank");
  if (l.rank() == 0) return Sublattice(l.ambient_rank());
  // Restrict the constraints to lattice coordinates: x in ZZ^rank with
  // rows * (B x) = 0, i.e. (rows * B) x = 0.
  std::vector<std::vector<Scalar>> restricted;
  restricted.reserve(rows.size());
  for (const auto& row : rows) {
    Field f = row.empty() ? Field::Q : row[0].field();
    std::vector<Scalar> r(l.rank(), Scalar::zero(f));
    for (int c = 0; c < l.rank(); ++c)
      for (int i = 0; i < l.ambient_rank(); ++i)
        r[c] = r[c] + row[i] * Scalar::of_int(f, l.basis()[c][i]);
    restricted.push_back(std::move(r));
  }
  auto coord_kernel = scalar_rows_integer_kernel(l.rank(), restricted);
  std::vector<std::vector<BigInt>> gens;
  for (const auto& x : coord_kernel) {
    std::vector<BigInt> v(l.ambient_rank(), BigInt(0));
    for (int c = 0; c < l.rank(); ++c)
      for (int i = 0; i < l.ambient_rank(); ++i) v[i] += x[c] * l.basis()[c][i];
    gens.push_back(std::move(v));
  }
  return Sublattice(l.ambient_rank(), gens);
}

}  // namespace wittkit
