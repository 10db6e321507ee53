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

#include "wittkit/scalar_matrix.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

ScalarMatrix::ScalarMatrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f) {
  if (rows < 0 || cols < 0) fail(Errc::ShapeMismatch, "negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(f));
}

ScalarMatrix ScalarMatrix::identity(int n, Field f) {
  ScalarMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

ScalarMatrix ScalarMatrix::from_int(const IntMatrix& m, Field f) {
  ScalarMatrix r(m.rows(), m.cols(), f);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = Scalar::of_int(f, m.at(i, j));
  return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    fail(Errc::ShapeMismatch, "matrix product shape/field");
  ScalarMatrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<Scalar> ScalarMatrix::mul_vec(const std::vector<Scalar>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(Errc::ShapeMismatch, "matrix-vector shape");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
  return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ScalarMatrix ScalarMatrix::rref() const {
  ScalarMatrix m = *this;
  int lead = 0;
  for (int r = 0; r < rows_ && lead < cols_; ++r) {
    int i = r;
    while (i < rows_ && m.at(i, lead).is_zero()) {
      ++i;
      if (i == rows_) {
        i = r;
        ++lead;
        if (lead == cols_) return m;
      }
    }
    for (int j = 0; j < cols_; ++j) std::swap(m.at(i, j), m.at(r, j));
    Scalar inv = m.at(r, lead).inverse();
    for (int j = 0; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int k = 0; k < rows_; ++k) {
      if (k == r || m.at(k, lead).is_zero()) continue;
      Scalar f = m.at(k, lead);
      for (int j = 0; j < cols_; ++j)
        m.at(k, j) = m.at(k, j) - f * m.at(r, j);
    }
    ++lead;
  }
  return m;
}

int ScalarMatrix::rank() const {
  ScalarMatrix r = rref();
  int rank = 0;
  for (int i = 0; i < rows_; ++i) {
    bool nonzero = false;
    for (int j = 0; j < cols_ && !nonzero; ++j)
      if (!r.at(i, j).is_zero()) nonzero = true;
    if (nonzero) ++rank;
  }
  return rank;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  int n = rows_;
  ScalarMatrix w(n, 2 * n, field_);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w.at(i, j) = at(i, j);
    w.at(i, n + i) = Scalar::one(field_);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!w.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    for (int j = 0; j < 2 * n; ++j) std::swap(w.at(c, j), w.at(p, j));
    Scalar inv = w.at(c, c).inverse();
    for (int j = 0; j < 2 * n; ++j) w.at(c, j) = w.at(c, j) * inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || w.at(i, c).is_zero()) continue;
      Scalar f = w.at(i, c);
      for (int j = 0; j < 2 * n; ++j) w.at(i, j) = w.at(i, j) - f * w.at(c, j);
    }
  }
  ScalarMatrix r(n, n, field_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = w.at(i, n + j);
  return r;
}

std::optional<std::vector<Scalar>> ScalarMatrix::solve_unique(
    const std::vector<Scalar>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    fail(Errc::ShapeMismatch, "solve rhs shape");
  ScalarMatrix w(rows_, cols_ + 1, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) w.at(i, j) = at(i, j);
    w.at(i, cols_) = b[i];
  }
  ScalarMatrix r = w.rref();
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  std::vector<bool> pivot_col(cols_, false);
  for (int i = 0; i < rows_; ++i) {
    int lead = -1;
    for (int j = 0; j <= cols_; ++j)
      if (!r.at(i, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    if (lead == cols_) return std::nullopt;  // inconsistent
    pivot_col[lead] = true;
    x[lead] = r.at(i, cols_);
  }
  for (int j = 0; j < cols_; ++j)
    if (!pivot_col[j]) return std::nullopt;  // underdetermined
  return x;
}

std::vector<std::vector<Scalar>> ScalarMatrix::nullspace() const {
  ScalarMatrix r = rref();
  std::vector<int> pivot_of_col(cols_, -1);
  int row = 0;
  for (int i = 0; i < rows_; ++i) {
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
      if (!r.at(i, j).is_zero()) {
        lead = j;
        break;
      }
    if (lead >= 0) pivot_of_col[lead] = i;
    (void)row;
  }
  std::vector<std::vector<Scalar>> basis;
  for (int j = 0; j < cols_; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[j] = Scalar::one(field_);
    for (int c = 0; c < cols_; ++c) {
      if (pivot_of_col[c] < 0) continue;
      v[c] = -r.at(pivot_of_col[c], j);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int ScalarMatrix::cmp(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    int c = Scalar::cmp(a.a_[i], b.a_[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace wittkit
