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

#ifndef WITTKIT_ELEMENT_HPP
#define WITTKIT_ELEMENT_HPP

#include <map>
#include <utility>
#include <vector>

#include "wittkit/algebra.hpp"

namespace wittkit {

/// Finitely supported integer vector: a lattice element with sparse
/// 1-based coordinates, no explicit zeros.
class Exponent {
 public:
  Exponent() = default;
  static Exponent axis(int index, const BigInt& value);
  static Exponent from_dense(const std::vector<BigInt>& v);

  const std::map<int, BigInt>& entries() const { return e_; }
  BigInt at(int index) const;
  void set(int index, const BigInt& value);
  bool is_zero() const { return e_.empty(); }
  int max_index() const { return e_.empty() ? 0 : e_.rbegin()->first; }
  std::vector<BigInt> dense(int n) const;

  Exponent operator+(const Exponent& o) const;
  Exponent operator-() const;
  bool operator==(const Exponent& o) const { return e_ == o.e_; }
  bool operator!=(const Exponent& o) const { return !(*this == o); }
  /// Lexicographic order on the (virtual) dense expansion.
  static int lex_cmp(const Exponent& a, const Exponent& b);
  bool operator<(const Exponent& o) const { return lex_cmp(*this, o) < 0; }

 private:
  std::map<int, BigInt> e_;
};

/// Finitely supported tangent vector: sparse 1-based coordinates with
/// nonzero Scalar values, all from one field.
class Tangent {
 public:
  Tangent() = default;
  static Tangent axis(int index, const Scalar& value);
  static Tangent from_dense(const std::vector<Scalar>& v);

  const std::map<int, Scalar>& entries() const { return t_; }
  Scalar at(int index, Field f) const;
  void set(int index, const Scalar& value);
  bool is_zero() const { return t_.empty(); }
  int max_index() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  std::vector<Scalar> dense(int m, Field f) const;

  Tangent operator+(const Tangent& o) const;
  Tangent operator-() const;
  Tangent scaled(const Scalar& c) const;
  bool operator==(const Tangent& o) const { return t_ == o.t_; }
  bool operator!=(const Tangent& o) const { return !(*this == o); }
  static int cmp(const Tangent& a, const Tangent& b);

 private:
  std::map<int, Scalar> t_;
};

/// Element of a generalized Witt algebra: a finite sum of terms t^alpha d,
/// stored as a canonical map from exponents to nonzero tangents.
class WittElement {
 public:
  explicit WittElement(AlgebraDescriptor alg) : alg_(std::move(alg)) {}
  static WittElement monomial(const AlgebraDescriptor& alg, const Exponent& e,
                              const Tangent& t);

  const AlgebraDescriptor& algebra() const { return alg_; }
  const std::map<Exponent, Tangent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * t^e d into the element, pruning cancelled terms.
  void add_term(const Exponent& e, const Tangent& t);

  WittElement operator+(const WittElement& o) const;
  WittElement operator-(const WittElement& o) const;
  WittElement operator-() const;
  WittElement scaled(const Scalar& c) const;
  bool operator==(const WittElement& o) const;
  bool operator!=(const WittElement& o) const { return !(*this == o); }
  static int cmp(const WittElement& a, const WittElement& b);

  /// Support bounds + field consistency; throws ShapeMismatch on violation.
  void validate() const;

 private:
  AlgebraDescriptor alg_;
  std::map<Exponent, Tangent> terms_;
};

/// phi(d, alpha) extended bilinearly from the descriptor's pairing.
Scalar phi_pair(const AlgebraDescriptor& alg, const Tangent& d, const Exponent& a);

/// The defining bracket, fully canonicalized:
/// [t^a u, t^b v] = t^{a+b} (phi(u,b) v - phi(v,a) u).
WittElement bracket(const WittElement& x, const WittElement& y);

/// Homogeneous parts of x, sorted by exponent.
std::vector<std::pair<Exponent, WittElement>> graded_components(const WittElement& x);

/// Action on Laurent monomials for Kronecker-paired algebras:
/// (t^a d_i) . t^b = b_i t^{a+b}, extended linearly. Returns the image as
/// monomial/coefficient pairs, canonically sorted, zeros pruned.
std::vector<std::pair<Exponent, Scalar>> act(const WittElement& x, const Exponent& beta);

}  // namespace wittkit

#endif  // WITTKIT_ELEMENT_HPP
