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

#ifndef WITTKIT_LATTICE_HPP
#define WITTKIT_LATTICE_HPP

#include <optional>
#include <vector>

#include "wittkit/scalar_matrix.hpp"

namespace wittkit {

/// Subgroup of ZZ^n held by its generators and a canonical column-HNF basis.
class Sublattice {
 public:
  explicit Sublattice(int ambient_rank) : ambient_(ambient_rank) {}
  Sublattice(int ambient_rank, const std::vector<std::vector<BigInt>>& generators);

  int ambient_rank() const { return ambient_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  /// Basis vectors, HNF-canonical, possibly empty for the zero lattice.
  const std::vector<std::vector<BigInt>>& basis() const { return basis_; }
  const std::vector<std::vector<BigInt>>& generators() const { return generators_; }

  bool contains(const std::vector<BigInt>& v) const;
  /// Integer coordinates of v in the basis, when v is a member.
  std::optional<std::vector<BigInt>> coordinates(const std::vector<BigInt>& v) const;

  /// Lattice generated by this one plus one extra vector.
  Sublattice adjoin(const std::vector<BigInt>& v) const;

  bool operator==(const Sublattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

 private:
  int ambient_;
  std::vector<std::vector<BigInt>> generators_;
  std::vector<std::vector<BigInt>> basis_;
};

/// Vectors of L annihilated by every constraint row (rows act by the
/// field dot product). Q(x)-valued rows are expanded coefficient-wise into
/// QQ-rows before the integer kernel is taken.
Sublattice lattice_constraint_kernel(const Sublattice& l,
                                     const std::vector<std::vector<Scalar>>& rows);

/// Integer matrix whose columns span {x : rows * x = 0} over ZZ, where the
/// constraint rows may have arbitrary field entries.
std::vector<std::vector<BigInt>> scalar_rows_integer_kernel(
    int width, const std::vector<std::vector<Scalar>>& rows);

}  // namespace wittkit

#endif  // WITTKIT_LATTICE_HPP
