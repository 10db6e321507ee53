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
#include "wittkit/lattice.hpp"
#include "wittkit/sampling.hpp"

using namespace wittkit;

namespace {
IntMatrix from_rows(std::vector<std::vector<int>> rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

bool hnf_shape(const IntMatrix& h) {
  int prev_pivot_row = -1;
  bool seen_zero_col = false;
  for (int c = 0; c < h.cols(); ++c) {
    int pivot = -1;
    for (int i = 0; i < h.rows(); ++i)
      if (h.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      seen_zero_col = true;
      continue;
    }
    if (seen_zero_col) return false;      // zero columns must come last
    if (pivot <= prev_pivot_row) return false;  // staircase
    if (h.at(pivot, c) <= 0) return false;
    for (int c2 = 0; c2 < c; ++c2) {
      if (h.at(pivot, c2) < 0) return false;
      if (h.at(pivot, c2) >= h.at(pivot, c)) return false;
    }
    prev_pivot_row = pivot;
  }
  return true;
}

bool same_column_lattice(const IntMatrix& a, const IntMatrix& b) {
  auto cols = [](const IntMatrix& m) {
    std::vector<std::vector<BigInt>> out;
    for (int c = 0; c < m.cols(); ++c) {
      std::vector<BigInt> v(m.rows());
      for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, c);
      out.push_back(std::move(v));
    }
    return out;
  };
  Sublattice la(a.rows(), cols(a));
  Sublattice lb(b.rows(), cols(b));
  for (const auto& v : cols(a))
    if (!lb.contains(v)) return false;
  for (const auto& v : cols(b))
    if (!la.contains(v)) return false;
  return true;
}
}  // namespace

TEST_CASE("hnf on the stated instances") {
  IntMatrix id = IntMatrix::identity(2);
  HnfResult r = hnf(id);
  CHECK(r.h == id);
  CHECK(r.u == id);

  IntMatrix m = from_rows({{2, 1}, {0, 3}});
  r = hnf(m);
  CHECK(hnf_shape(r.h));
  CHECK(m * r.u == r.h);
  CHECK(r.u.is_unimodular());
  CHECK(same_column_lattice(m, r.h));

  IntMatrix z(2, 2);
  r = hnf(z);
  CHECK(r.h == z);
  CHECK(r.u == IntMatrix::identity(2));
}

TEST_CASE("hnf properties on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 150; ++t) {
    int n = rng.int_in(1, 4);
    int k = rng.int_in(1, 5);
    IntMatrix m(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) m.at(i, j) = rng.int_in(-9, 9);
    HnfResult r = hnf(m);
    CHECK(hnf_shape(r.h));
    CHECK(m * r.u == r.h);
    CHECK(r.u.is_unimodular());
    CHECK(same_column_lattice(m, r.h));
  }
}

TEST_CASE("unimodularity detection") {
  CHECK(IntMatrix::identity(3).is_unimodular());
  CHECK(from_rows({{1, 1}, {0, 1}}).is_unimodular());
  CHECK(from_rows({{1, 1}, {0, 1}}).det() == 1);
  CHECK(!from_rows({{2, 0}, {0, 1}}).is_unimodular());
  CHECK_THROWS_AS(from_rows({{1, 0, 0}, {0, 1, 0}}).det(), Error);
}

TEST_CASE("unimodular inverse") {
  CHECK(IntMatrix::identity(2).unimodular_inverse() == IntMatrix::identity(2));
  IntMatrix m = from_rows({{1, 1}, {0, 1}});
  CHECK(m.unimodular_inverse() == from_rows({{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(from_rows({{2, 0}, {0, 1}}).unimodular_inverse(), Error);

  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    int n = rng.int_in(1, 5);
    IntMatrix u = rng.unimodular(n, 8);
    CHECK(u * u.unimodular_inverse() == IntMatrix::identity(n));
  }
}

TEST_CASE("lattice membership") {
  Sublattice l2(2, {{BigInt(2), BigInt(0)}});
  CHECK(l2.contains({BigInt(4), BigInt(0)}));
  CHECK(!l2.contains({BigInt(1), BigInt(0)}));
  Sublattice l(2, {{BigInt(1), BigInt(1)}, {BigInt(0), BigInt(2)}});
  CHECK(l.contains({BigInt(3), BigInt(1)}));
  CHECK_THROWS_AS(l.contains({BigInt(1)}), Error);
}

TEST_CASE("constraint kernels") {
  Sublattice z2(2, {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
  auto k = lattice_constraint_kernel(
      z2, {{Scalar(Rational(0)), Scalar(Rational(1))}});
  REQUIRE(k.rank() == 1);
  CHECK(k.basis()[0] == std::vector<BigInt>{BigInt(1), BigInt(0)});

  // over Q(x): a + b x = 0 with integers forces a = b = 0
  auto kx = lattice_constraint_kernel(
      z2, {{Scalar(RatFun::constant(Rational(1))), Scalar(RatFun::variable())}});
  CHECK(kx.rank() == 0);

  Sublattice diag(2, {{BigInt(1), BigInt(1)}});
  auto kd = lattice_constraint_kernel(
      diag, {{Scalar(Rational(1)), Scalar(Rational(-1))}});
  REQUIRE(kd.rank() == 1);
  CHECK(kd.basis()[0] == std::vector<BigInt>{BigInt(1), BigInt(1)});
}

TEST_CASE("constraint kernel output is contained and annihilated") {
  Rng rng(9);
  for (int t = 0; t < 80; ++t) {
    int n = rng.int_in(1, 4);
    Sublattice l = rng.sublattice(n, 3, 4);
    std::vector<std::vector<Scalar>> rows;
    int nrows = rng.int_in(1, 2);
    for (int r = 0; r < nrows; ++r) {
      std::vector<Scalar> row;
      for (int j = 0; j < n; ++j) row.push_back(rng.any_scalar(Field::Q));
      rows.push_back(std::move(row));
    }
    Sublattice k = lattice_constraint_kernel(l, rows);
    for (const auto& v : k.basis()) {
      CHECK(l.contains(v));
      for (const auto& row : rows) {
        Scalar dot = Scalar::zero(Field::Q);
        for (int j = 0; j < n; ++j)
          dot = dot + row[j] * Scalar::of_int(Field::Q, v[j]);
        CHECK(dot.is_zero());
      }
    }
  }
}
