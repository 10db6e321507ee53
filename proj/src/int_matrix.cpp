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

#include "wittkit/int_matrix.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(Errc::ShapeMismatch, "negative dimension");
  a_.assign(static_cast<std::size_t>(rows) * cols, BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "matrix product shape");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<BigInt> IntMatrix::mul_vec(const std::vector<BigInt>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    fail(Errc::ShapeMismatch, "matrix-vector shape");
  std::vector<BigInt> r(rows_, BigInt(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

BigInt IntMatrix::det() const {
  if (rows_ != cols_) fail(Errc::NotSquare, "determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return BigInt(1);
  // Bareiss fraction-free elimination.
  IntMatrix m = *this;
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return BigInt(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = v / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

bool IntMatrix::is_unimodular() const {
  BigInt d = det();
  return d == 1 || d == -1;
}

IntMatrix IntMatrix::unimodular_inverse() const {
  if (rows_ != cols_) fail(Errc::NotSquare, "inverse of non-square matrix");
  BigInt d = det();
  if (d != 1 && d != -1)
    fail(Errc::NotUnimodular, "determinant is " + d.str() + ", not +-1");
  int n = rows_;
  // Gauss-Jordan over QQ; entries of the result are integers since det=+-1.
  std::vector<std::vector<Rational>> w(
      n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = Rational(at(i, j));
    w[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (w[i][c] != 0) {
        p = i;
        break;
      }
    std::swap(w[c], w[p]);
    Rational inv = Rational(1) / w[c][c];
    for (int j = 0; j < 2 * n; ++j) w[c][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rational f = w[i][c];
      for (int j = 0; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  IntMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = w[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        fail(Errc::Internal, "unimodular inverse not integral");
      r.at(i, j) = boost::multiprecision::numerator(v);
    }
  return r;
}

int IntMatrix::cmp(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    if (a.a_[i] != b.a_[i]) return a.a_[i] < b.a_[i] ? -1 : 1;
  }
  return 0;
}

HnfResult hnf(const IntMatrix& m) {
  int n = m.rows(), k = m.cols();
  HnfResult res{m, IntMatrix::identity(k)};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  auto col_sub = [&](int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int i = 0; i < n; ++i) h.at(i, dst) -= q * h.at(i, src);
    for (int i = 0; i < k; ++i) u.at(i, dst) -= q * u.at(i, src);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n; ++i) std::swap(h.at(i, a), h.at(i, b));
    for (int i = 0; i < k; ++i) std::swap(u.at(i, a), u.at(i, b));
  };
  auto col_neg = [&](int c) {
    for (int i = 0; i < n; ++i) h.at(i, c) = -h.at(i, c);
    for (int i = 0; i < k; ++i) u.at(i, c) = -u.at(i, c);
  };

  int r = 0;  // next pivot column
  for (int row = 0; row < n && r < k; ++row) {
    // Euclid across columns r..k-1 until row has a single nonzero at r.
    for (;;) {
      int best = -1;
      for (int c = r; c < k; ++c) {
        if (h.at(row, c) == 0) continue;
        if (best < 0 || boost::multiprecision::abs(h.at(row, c)) <
                            boost::multiprecision::abs(h.at(row, best)))
          best = c;
      }
      if (best < 0) break;  // row is zero beyond the pivots
      col_swap(r, best);
      bool done = true;
      for (int c = r + 1; c < k; ++c) {
        if (h.at(row, c) == 0) continue;
        BigInt q = floor_div(h.at(row, c), h.at(row, r));
        col_sub(c, r, q);
        if (h.at(row, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h.at(row, r) == 0) continue;
    if (h.at(row, r) < 0) col_neg(r);
    // Reduce entries left of the pivot in this row into [0, pivot).
    for (int c = 0; c < r; ++c) {
      BigInt q = floor_div(h.at(row, c), h.at(row, r));
      col_sub(c, r, q);
    }
    ++r;
  }
  return res;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& m) {
  HnfResult res = hnf(m);
  std::vector<std::vector<BigInt>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    bool zero = true;
    for (int i = 0; i < m.rows() && zero; ++i)
      if (res.h.at(i, c) != 0) zero = false;
    if (!zero) continue;
    std::vector<BigInt> v(m.cols());
    for (int i = 0; i < m.cols(); ++i) v[i] = res.u.at(i, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wittkit
