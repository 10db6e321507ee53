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

#include "wittkit/sampling.hpp"

#include "wittkit/errors.hpp"

namespace wittkit {

int Rng::int_in(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g_);
}

Scalar Rng::nonzero_scalar(Field f) {
  static const int nums[] = {1, -1, 2, -2, 3, -3, 5, 1, -1, 2};
  static const int dens[] = {1, 1, 1, 2, 3, 1, 2, 1, 1, 1};
  int pick = int_in(0, 9);
  Rational q(nums[pick], dens[pick]);
  if (f == Field::Q) return Scalar(q);
  // Mix in genuinely non-constant field elements now and then.
  switch (int_in(0, 4)) {
    case 0:
      return Scalar(RatFun::variable().pow(int_in(-1, 2)) *
                    RatFun::constant(q));
    case 1:
      return Scalar(RatFun(Poly({Rational(int_in(1, 3)), Rational(1)}),
                           Poly::constant(Rational(1))) *
                    RatFun::constant(q));
    default:
      return Scalar(RatFun::constant(q));
  }
}

Scalar Rng::any_scalar(Field f) {
  if (int_in(0, 5) == 0) return Scalar::zero(f);
  return nonzero_scalar(f);
}

Exponent Rng::exponent(int n, int lo, int hi) {
  Exponent e;
  for (int i = 1; i <= n; ++i) e.set(i, BigInt(int_in(lo, hi)));
  return e;
}

Tangent Rng::tangent(const AlgebraDescriptor& alg, int max_support) {
  Tangent t;
  int m = alg.is_infinite() ? max_support : alg.dim();
  int count = int_in(1, std::max(1, std::min(max_support, m)));
  for (int c = 0; c < count; ++c)
    t.set(int_in(1, m), nonzero_scalar(alg.field()));
  return t;
}

WittElement Rng::element(const AlgebraDescriptor& alg, int max_terms,
                         int exp_range) {
  WittElement x(alg);
  int n = alg.is_infinite() ? 4 : alg.rank();
  int terms = int_in(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Exponent e = exponent(n, -exp_range, exp_range);
    x.add_term(e, tangent(alg, 2));
  }
  x.validate();
  return x;
}

IntMatrix Rng::unimodular(int n, int ops) {
  IntMatrix m = IntMatrix::identity(n);
  for (int o = 0; o < ops; ++o) {
    int kind = int_in(0, 2);
    int i = int_in(0, n - 1);
    int j = int_in(0, n - 1);
    if (kind == 0 && i != j) {
      BigInt c(int_in(-2, 2));
      for (int r = 0; r < n; ++r) m.at(r, j) += c * m.at(r, i);
    } else if (kind == 1 && i != j) {
      for (int r = 0; r < n; ++r) std::swap(m.at(r, i), m.at(r, j));
    } else {
      for (int r = 0; r < n; ++r) m.at(r, i) = -m.at(r, i);
    }
  }
  return m;
}

AutTriple Rng::valid_triple(const AlgebraDescriptor& alg, int ops) {
  if (alg.is_infinite())
    fail(Errc::ShapeMismatch, "triple sampling targets finite algebras");
  const int n = alg.rank();
  AutTriple t;
  for (int attempt = 0; attempt < 32; ++attempt) {
    IntMatrix sigma = attempt + 1 < 32 ? unimodular(n, ops)
                                       : IntMatrix::identity(n);
    auto tau = solve_tau(alg, sigma);
    if (!tau) continue;
    t.sigma = std::move(sigma);
    t.tau = std::move(*tau);
    break;
  }
  t.chi.clear();
  for (int i = 0; i < n; ++i) t.chi.push_back(nonzero_scalar(alg.field()));
  TripleCheck c = check_triple(alg, t);
  if (!c.ok) fail(Errc::Internal, "sampled triple is invalid: " + c.reason);
  return t;
}

Sublattice Rng::sublattice(int n, int max_gens, int range) {
  std::vector<std::vector<BigInt>> gens;
  int count = int_in(0, max_gens);
  for (int g = 0; g < count; ++g) {
    std::vector<BigInt> v(n);
    for (int i = 0; i < n; ++i) v[i] = int_in(-range, range);
    gens.push_back(std::move(v));
  }
  return Sublattice(n, gens);
}

std::vector<Tangent> Rng::subspace(const AlgebraDescriptor& alg, int max_gens) {
  std::vector<Tangent> ts;
  int count = int_in(0, max_gens);
  for (int g = 0; g < count; ++g) ts.push_back(tangent(alg, 2));
  return ts;
}

}  // namespace wittkit
