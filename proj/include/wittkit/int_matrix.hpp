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

#ifndef WITTKIT_INT_MATRIX_HPP
#define WITTKIT_INT_MATRIX_HPP

#include <vector>

#include "wittkit/numbers.hpp"

namespace wittkit {

/// Dense integer matrix with exact arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  BigInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<BigInt> mul_vec(const std::vector<BigInt>& v) const;
  IntMatrix transpose() const;

  /// Fraction-free determinant (Bareiss). Throws NotSquare.
  BigInt det() const;
  bool is_unimodular() const;
  /// Exact integer inverse; throws NotUnimodular unless det is +-1.
  IntMatrix unimodular_inverse() const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  /// Lexicographic entry order for canonical listings of solution sets.
  static int cmp(const IntMatrix& a, const IntMatrix& b);

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

struct HnfResult {
  IntMatrix h;  // column Hermite normal form, h = m * u
  IntMatrix u;  // unimodular column transform
};

/// Column-style Hermite normal form: pivots positive, entries left of each
/// pivot reduced into [0, pivot), zero columns last. Deterministic.
HnfResult hnf(const IntMatrix& m);

/// Basis columns of the integer kernel {v : m v = 0}, via the zero columns
/// of the HNF transform.
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& m);

}  // namespace wittkit

#endif  // WITTKIT_INT_MATRIX_HPP
