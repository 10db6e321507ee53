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

#ifndef WITTKIT_SCALAR_MATRIX_HPP
#define WITTKIT_SCALAR_MATRIX_HPP

#include <optional>
#include <vector>

#include "wittkit/int_matrix.hpp"
#include "wittkit/scalar.hpp"

namespace wittkit {

/// Dense matrix over the active ground field with exact Gauss elimination.
class ScalarMatrix {
 public:
  ScalarMatrix() : rows_(0), cols_(0), field_(Field::Q) {}
  ScalarMatrix(int rows, int cols, Field f);
  static ScalarMatrix identity(int n, Field f);
  static ScalarMatrix from_int(const IntMatrix& m, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const;
  ScalarMatrix transpose() const;

  int rank() const;
  std::optional<ScalarMatrix> inverse() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  /// Unique solution of (*this) x = b when it exists (consistency checked;
  /// nullopt when inconsistent or underdetermined).
  std::optional<std::vector<Scalar>> solve_unique(const std::vector<Scalar>& b) const;

  /// Reduced row echelon form basis of the row space.
  ScalarMatrix rref() const;
  /// Basis of {x : (*this) x = 0}, from the RREF free columns; canonical.
  std::vector<std::vector<Scalar>> nullspace() const;

  bool operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }
  static int cmp(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> a_;
};

}  // namespace wittkit

#endif  // WITTKIT_SCALAR_MATRIX_HPP
