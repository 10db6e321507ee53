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

#include "wittkit/algebra.hpp"

#include "wittkit/errors.hpp"
#include "wittkit/lattice.hpp"

namespace wittkit {

AlgebraDescriptor AlgebraDescriptor::kronecker(int n, Field f) {
  if (n < 0) fail(Errc::ShapeMismatch, "negative rank");
  AlgebraDescriptor a;
  a.infinite_ = false;
  a.kronecker_ = true;
  a.rank_ = n;
  a.dim_ = n;
  a.field_ = f;
  return a;
}

AlgebraDescriptor AlgebraDescriptor::finite(int n, int m, ScalarMatrix phi) {
  if (n < 0 || m < 0) fail(Errc::ShapeMismatch, "negative rank or dim");
  if (phi.rows() != m || phi.cols() != n)
    fail(Errc::ShapeMismatch, "pairing matrix must be dim x rank");
  AlgebraDescriptor a;
  a.infinite_ = false;
  a.kronecker_ = false;
  a.rank_ = n;
  a.dim_ = m;
  a.field_ = phi.field();
  a.phi_ = std::move(phi);
  return a;
}

AlgebraDescriptor AlgebraDescriptor::countable(Field f) {
  AlgebraDescriptor a;
  a.infinite_ = true;
  a.kronecker_ = true;
  a.rank_ = 0;
  a.dim_ = 0;
  a.field_ = f;
  return a;
}

Scalar AlgebraDescriptor::pairing(int i, int j) const {
  if (i < 1 || j < 1) fail(Errc::ShapeMismatch, "pairing indices are 1-based");
  if (kronecker_) {
    if (!infinite_ && (i > dim_ || j > rank_))
      fail(Errc::ShapeMismatch, "pairing index out of range");
    return i == j ? Scalar::one(field_) : Scalar::zero(field_);
  }
  if (i > dim_ || j > rank_)
    fail(Errc::ShapeMismatch, "pairing index out of range");
  return phi_.at(i - 1, j - 1);
}

bool AlgebraDescriptor::operator==(const AlgebraDescriptor& o) const {
  if (infinite_ != o.infinite_ || field_ != o.field_) return false;
  if (infinite_) return true;
  if (kronecker_ != o.kronecker_ || rank_ != o.rank_ || dim_ != o.dim_)
    return false;
  return kronecker_ || phi_ == o.phi_;
}

bool is_simple(const AlgebraDescriptor& alg) {
  if (alg.is_infinite()) return true;
  if (alg.rank() < 1 || alg.dim() < 1) return false;
  if (alg.is_kronecker()) return true;  // square identity pairing
  // No nonzero alpha in ZZ^n with phi * alpha = 0.
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < alg.dim(); ++i) {
    std::vector<Scalar> row(alg.rank());
    for (int j = 0; j < alg.rank(); ++j) row[j] = alg.phi().at(i, j);
    rows.push_back(std::move(row));
  }
  if (!scalar_rows_integer_kernel(alg.rank(), rows).empty()) return false;
  // No nonzero tangent annihilating all of ZZ^n: rows independent over F.
  return alg.phi().rank() == alg.dim();
}

}  // namespace wittkit
