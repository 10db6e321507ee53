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

#ifndef WITTKIT_ALGEBRA_HPP
#define WITTKIT_ALGEBRA_HPP

#include "wittkit/scalar_matrix.hpp"

namespace wittkit {

/// Shape of one generalized Witt algebra W(ZZ^n, V_m, phi): the lattice
/// rank n, the tangent dimension m, the ground field, and the pairing
/// matrix phi[i][j] = phi(d_i, e_j). The countable-rank algebra uses the
/// Kronecker pairing by construction; finite Kronecker descriptors require
/// n = m.
class AlgebraDescriptor {
 public:
  static AlgebraDescriptor kronecker(int n, Field f = Field::Q);
  static AlgebraDescriptor finite(int n, int m, ScalarMatrix phi);
  static AlgebraDescriptor countable(Field f = Field::Q);

  bool is_infinite() const { return infinite_; }
  bool is_kronecker() const { return kronecker_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  Field field() const { return field_; }
  const ScalarMatrix& phi() const { return phi_; }
  /// phi(d_i, e_j) with 1-based indices; Kronecker descriptors answer for
  /// every index.
  Scalar pairing(int i, int j) const;

  bool operator==(const AlgebraDescriptor& o) const;
  bool operator!=(const AlgebraDescriptor& o) const { return !(*this == o); }

 private:
  AlgebraDescriptor() = default;
  bool infinite_ = false;
  bool kronecker_ = true;
  int rank_ = 0;
  int dim_ = 0;
  Field field_ = Field::Q;
  ScalarMatrix phi_;  // m x n when !kronecker_
};

/// Simplicity criterion: n >= 1, no nonzero integer vector is annihilated
/// by phi, and the rows of phi are linearly independent over the field.
bool is_simple(const AlgebraDescriptor& alg);

}  // namespace wittkit

#endif  // WITTKIT_ALGEBRA_HPP
