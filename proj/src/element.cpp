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

#include "wittkit/element.hpp"

#include <limits>

#include "wittkit/errors.hpp"

namespace wittkit {

Exponent Exponent::axis(int index, const BigInt& value) {
  Exponent e;
  e.set(index, value);
  return e;
}

Exponent Exponent::from_dense(const std::vector<BigInt>& v) {
  Exponent e;
  for (std::size_t i = 0; i < v.size(); ++i)
    e.set(static_cast<int>(i) + 1, v[i]);
  return e;
}

BigInt Exponent::at(int index) const {
  auto it = e_.find(index);
  return it == e_.end() ? BigInt(0) : it->second;
}

void Exponent::set(int index, const BigInt& value) {
  if (index < 1) fail(Errc::ShapeMismatch, "coordinate indices are 1-based");
  if (value == 0)
    e_.erase(index);
  else
    e_[index] = value;
}

std::vector<BigInt> Exponent::dense(int n) const {
  std::vector<BigInt> v(n, BigInt(0));
  for (const auto& [i, val] : e_) {
    if (i > n) fail(Errc::ShapeMismatch, "exponent support exceeds rank");
    v[i - 1] = val;
  }
  return v;
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r = *this;
  for (const auto& [i, v] : o.e_) r.set(i, r.at(i) + v);
  return r;
}

Exponent Exponent::operator-() const {
  Exponent r;
  for (const auto& [i, v] : e_) r.e_[i] = -v;
  return r;
}

int Exponent::lex_cmp(const Exponent& a, const Exponent& b) {
  constexpr int kEnd = std::numeric_limits<int>::max();
  auto ia = a.e_.begin();
  auto ib = b.e_.begin();
  while (ia != a.e_.end() || ib != b.e_.end()) {
    int idx_a = ia == a.e_.end() ? kEnd : ia->first;
    int idx_b = ib == b.e_.end() ? kEnd : ib->first;
    if (idx_a == idx_b) {
      if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
      ++ia;
      ++ib;
    } else if (idx_a < idx_b) {
      // b is zero at idx_a
      if (ia->second != 0) return ia->second < 0 ? -1 : 1;
      ++ia;
    } else {
      if (ib->second != 0) return ib->second < 0 ? 1 : -1;
      ++ib;
    }
  }
  return 0;
}

Tangent Tangent::axis(int index, const Scalar& value) {
  Tangent t;
  t.set(index, value);
  return t;
}

Tangent Tangent::from_dense(const std::vector<Scalar>& v) {
  Tangent t;
  for (std::size_t i = 0; i < v.size(); ++i)
    t.set(static_cast<int>(i) + 1, v[i]);
  return t;
}

Scalar Tangent::at(int index, Field f) const {
  auto it = t_.find(index);
  return it == t_.end() ? Scalar::zero(f) : it->second;
}

void Tangent::set(int index, const Scalar& value) {
  if (index < 1) fail(Errc::ShapeMismatch, "coordinate indices are 1-based");
  if (value.is_zero())
    t_.erase(index);
  else
    t_[index] = value;
}

std::vector<Scalar> Tangent::dense(int m, Field f) const {
  std::vector<Scalar> v(m, Scalar::zero(f));
  for (const auto& [i, val] : t_) {
    if (i > m) fail(Errc::ShapeMismatch, "tangent support exceeds dim");
    v[i - 1] = val;
  }
  return v;
}

Tangent Tangent::operator+(const Tangent& o) const {
  Tangent r = *this;
  for (const auto& [i, v] : o.t_) {
    auto it = r.t_.find(i);
    if (it == r.t_.end()) {
      r.t_[i] = v;
    } else {
      Scalar s = it->second + v;
      if (s.is_zero())
        r.t_.erase(it);
      else
        it->second = s;
    }
  }
  return r;
}

Tangent Tangent::operator-() const {
  Tangent r;
  for (const auto& [i, v] : t_) r.t_[i] = -v;
  return r;
}

Tangent Tangent::scaled(const Scalar& c) const {
  Tangent r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : t_) r.t_[i] = v * c;
  return r;
}

int Tangent::cmp(const Tangent& a, const Tangent& b) {
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  while (ia != a.t_.end() && ib != b.t_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = Scalar::cmp(ia->second, ib->second);
    if (c != 0) return c;
    ++ia;
    ++ib;
  }
  if (ia != a.t_.end()) return 1;
  if (ib != b.t_.end()) return -1;
  return 0;
}

WittElement WittElement::monomial(const AlgebraDescriptor& alg, const Exponent& e,
                                  const Tangent& t) {
  WittElement x(alg);
  x.add_term(e, t);
  x.validate();
  return x;
}

void WittElement::add_term(const Exponent& e, const Tangent& t) {
  if (t.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, t);
    return;
  }
  Tangent sum = it->second + t;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

WittElement WittElement::operator+(const WittElement& o) const {
  if (alg_ != o.alg_) fail(Errc::AlgebraMismatch, "adding across algebras");
  WittElement r = *this;
  for (const auto& [e, t] : o.terms_) r.add_term(e, t);
  return r;
}

WittElement WittElement::operator-(const WittElement& o) const {
  return *this + (-o);
}

WittElement WittElement::operator-() const {
  WittElement r(alg_);
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, -t);
  return r;
}

WittElement WittElement::scaled(const Scalar& c) const {
  WittElement r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t.scaled(c));
  return r;
}

bool WittElement::operator==(const WittElement& o) const {
  return alg_ == o.alg_ && terms_ == o.terms_;
}

int WittElement::cmp(const WittElement& a, const WittElement& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() && ib != b.terms_.end()) {
    int c = Exponent::lex_cmp(ia->first, ib->first);
    if (c != 0) return c;
    c = Tangent::cmp(ia->second, ib->second);
    if (c != 0) return c;
    ++ia;
    ++ib;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

void WittElement::validate() const {
  for (const auto& [e, t] : terms_) {
    if (!alg_.is_infinite()) {
      if (e.max_index() > alg_.rank())
        fail(Errc::ShapeMismatch, "exponent support exceeds rank");
      if (t.max_index() > alg_.dim())
        fail(Errc::ShapeMismatch, "tangent support exceeds dim");
    }
    for (const auto& [i, v] : t.entries()) {
      (void)i;
      if (v.field() != alg_.field())
        fail(Errc::AlgebraMismatch, "tangent scalar from the wrong field");
    }
  }
}

Scalar phi_pair(const AlgebraDescriptor& alg, const Tangent& d, const Exponent& a) {
  Scalar sum = Scalar::zero(alg.field());
  if (alg.is_kronecker()) {
    for (const auto& [i, di] : d.entries()) {
      BigInt ai = a.at(i);
      if (ai != 0) sum = sum + di * Scalar::of_int(alg.field(), ai);
    }
    return sum;
  }
  for (const auto& [i, di] : d.entries())
    for (const auto& [j, aj] : a.entries())
      sum = sum + di * alg.pairing(i, j) * Scalar::of_int(alg.field(), aj);
  return sum;
}

WittElement bracket(const WittElement& x, const WittElement& y) {
  if (x.algebra() != y.algebra())
    fail(Errc::AlgebraMismatch, "bracket across algebras");
  const AlgebraDescriptor& alg = x.algebra();
  WittElement r(alg);
  for (const auto& [a, da] : x.terms()) {
    for (const auto& [b, db] : y.terms()) {
      Scalar left = phi_pair(alg, da, b);   // phi(d_a, b)
      Scalar right = phi_pair(alg, db, a);  // phi(d_b, a)
      Tangent t = db.scaled(left) + (-da.scaled(right));
      if (!t.is_zero()) r.add_term(a + b, t);
    }
  }
  return r;
}

std::vector<std::pair<Exponent, WittElement>> graded_components(
    const WittElement& x) {
  std::vector<std::pair<Exponent, WittElement>> out;
  for (const auto& [e, t] : x.terms()) {
    WittElement part(x.algebra());
    part.add_term(e, t);
    out.emplace_back(e, std::move(part));
  }
  return out;
}

std::vector<std::pair<Exponent, Scalar>> act(const WittElement& x,
                                             const Exponent& beta) {
  if (!x.algebra().is_kronecker())
    fail(Errc::NotKroneckerPairing, "monomial action needs the Kronecker pairing");
  std::map<Exponent, Scalar> acc;
  for (const auto& [a, d] : x.terms()) {
    Scalar c = phi_pair(x.algebra(), d, beta);
    if (c.is_zero()) continue;
    Exponent e = a + beta;
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, c);
    } else {
      Scalar s = it->second + c;
      if (s.is_zero())
        acc.erase(it);
      else
        it->second = s;
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace wittkit
