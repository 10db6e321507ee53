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

#include "wittkit/distinguished.hpp"

#include <algorithm>

#include "wittkit/errors.hpp"

namespace wittkit {

std::vector<BigInt> first_primes(int count) {
  std::vector<BigInt> out;
  BigInt p = 2;
  auto is_prime = [](const BigInt& v) {
    for (BigInt d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  while (static_cast<int>(out.size()) < count) {
    if (is_prime(p)) out.push_back(p);
    ++p;
  }
  return out;
}

DistinguishedElement build_distinguished(
    const AlgebraDescriptor& alg, int sign,
    const std::optional<std::vector<BigInt>>& constants) {
  if (alg.is_infinite())
    fail(Errc::ShapeMismatch, "anchor elements live in finite-rank algebras");
  if (sign != 1 && sign != -1) fail(Errc::ShapeMismatch, "sign must be +-1");
  int n = alg.rank(), m = alg.dim();
  if (n < 1 || m < 1) fail(Errc::ShapeMismatch, "rank and dim must be >= 1");
  std::vector<BigInt> cs =
      constants ? *constants : first_primes(2 * n);
  if (static_cast<int>(cs.size()) != 2 * n)
    fail(Errc::ShapeMismatch, "expected 2n constants");
  for (const auto& c : cs)
    if (c < 2) fail(Errc::TooSmallConstant, "constants must be >= 2");
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j)
      if (gcd(cs[i], cs[j]) != 1)
        fail(Errc::NotCoprime, "constants " + cs[i].str() + " and " +
                                   cs[j].str() + " share a factor");
  DistinguishedElement w;
  w.sign = sign;
  WittElement el(alg);
  for (int i = 1; i <= n; ++i) {
    BigInt ki = cs[2 * (i - 1)];
    BigInt kpi = cs[2 * (i - 1) + 1];
    w.k.push_back(ki);
    w.k_prime.push_back(kpi);
    Tangent d = Tangent::axis(std::min(i, m), Scalar::one(alg.field()));
    el.add_term(Exponent::axis(i, sign > 0 ? ki : -ki), d);
    el.add_term(Exponent::axis(i, sign > 0 ? kpi : -kpi), d);
  }
  el.validate();
  w.element = el;
  return w;
}

namespace {

void check_hypotheses(const std::vector<AxisVector>& s,
                      const std::vector<AxisVector>& s_prime,
                      AxisMapResult& out) {
  auto flag = [&](const std::string& msg) {
    if (out.hypotheses_ok) out.note = msg;
    out.hypotheses_ok = false;
  };
  for (const auto& v : s_prime)
    if (v.coeff < 2) {
      flag("constant " + v.coeff.str() + " is below 2");
      break;
    }
  for (std::size_t i = 0; i < s_prime.size() && out.hypotheses_ok; ++i)
    for (std::size_t j = i + 1; j < s_prime.size(); ++j) {
      BigInt a = boost::multiprecision::abs(s_prime[i].coeff);
      BigInt b = boost::multiprecision::abs(s_prime[j].coeff);
      if (gcd(a, b) != 1) {
        flag("constants " + s_prime[i].coeff.str() + " and " +
             s_prime[j].coeff.str() + " share a factor");
        break;
      }
    }
  for (const auto& v : s) {
    if (std::find(s_prime.begin(), s_prime.end(), v) == s_prime.end()) {
      flag("S is not contained in S'");
      break;
    }
  }
}

void validate_axis_vectors(int n, const std::vector<AxisVector>& vs,
                           const char* which) {
  for (const auto& v : vs) {
    if (v.axis < 1 || v.axis > n)
      fail(Errc::ShapeMismatch, std::string(which) + ": axis out of range");
    if (v.coeff == 0)
      fail(Errc::ShapeMismatch, std::string(which) + ": zero coefficient");
  }
}

void require_coverage(int n, const std::vector<AxisVector>& s) {
  std::vector<bool> covered(n + 1, false);
  for (const auto& v : s) covered[v.axis] = true;
  for (int i = 1; i <= n; ++i)
    if (!covered[i])
      fail(Errc::HypothesisViolated,
           "S does not involve axis " + std::to_string(i) +
               "; the solution set would be infinite");
}

void sort_unique(std::vector<IntMatrix>& ms) {
  std::sort(ms.begin(), ms.end(), [](const IntMatrix& a, const IntMatrix& b) {
    return IntMatrix::cmp(a, b) < 0;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

}  // namespace

AxisMapResult lemma23_decide(int n, const std::vector<AxisVector>& s,
                             const std::vector<AxisVector>& s_prime) {
  if (n < 1) fail(Errc::ShapeMismatch, "n must be >= 1");
  if (s.empty()) fail(Errc::ShapeMismatch, "S is empty");
  validate_axis_vectors(n, s, "S");
  validate_axis_vectors(n, s_prime, "S'");
  require_coverage(n, s);
  AxisMapResult out;
  check_hypotheses(s, s_prime, out);

  const std::size_t ns = s.size(), np = s_prime.size();
  if (np == 0) return out;
  std::vector<std::size_t> assign(ns, 0);
  for (;;) {
    // sigma(coeff * e_axis) = target forces column axis to
    // (target.coeff / coeff) * e_{target.axis}; all forcings must agree.
    std::vector<std::optional<std::pair<int, BigInt>>> col(n + 1);
    bool ok = true;
    for (std::size_t i = 0; i < ns && ok; ++i) {
      const AxisVector& src = s[i];
      const AxisVector& dst = s_prime[assign[i]];
      if (dst.coeff % src.coeff != 0) {
        ok = false;
        break;
      }
      std::pair<int, BigInt> forced{dst.axis, dst.coeff / src.coeff};
      if (col[src.axis] && *col[src.axis] != forced)
        ok = false;
      else
        col[src.axis] = forced;
    }
    if (ok) {
      IntMatrix sigma(n, n);
      for (int i = 1; i <= n; ++i)
        sigma.at(col[i]->first - 1, i - 1) = col[i]->second;
      if (sigma.is_unimodular()) out.solutions.push_back(std::move(sigma));
    }
    // next assignment
    std::size_t pos = 0;
    while (pos < ns) {
      if (++assign[pos] < np) break;
      assign[pos] = 0;
      ++pos;
    }
    if (pos == ns) break;
  }
  sort_unique(out.solutions);
  return out;
}

AxisMapResult lemma23_bruteforce(int n, const std::vector<AxisVector>& s,
                                 const std::vector<AxisVector>& s_prime,
                                 const BigInt& bound, std::uint64_t cap,
                                 const ProgressFn& progress) {
  if (n < 1) fail(Errc::ShapeMismatch, "n must be >= 1");
  if (bound < 0) fail(Errc::ShapeMismatch, "bound must be >= 0");
  validate_axis_vectors(n, s, "S");
  validate_axis_vectors(n, s_prime, "S'");
  AxisMapResult out;
  check_hypotheses(s, s_prime, out);

  const int cells = n * n;
  const BigInt width = 2 * bound + 1;
  BigInt total_big = 1;
  for (int i = 0; i < cells; ++i) {
    total_big *= width;
    if (total_big > cap)
      fail(Errc::SearchSpaceTooLarge,
           "(2*" + bound.str() + "+1)^" + std::to_string(cells) +
               " exceeds the enumeration cap " + std::to_string(cap));
  }
  const std::uint64_t total = total_big.convert_to<std::uint64_t>();
  constexpr std::uint64_t kChunk = 8192;

  std::vector<BigInt> entry(cells, -bound);
  IntMatrix sigma(n, n);
  std::uint64_t done = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sigma.at(i, j) = entry[i * n + j];
    bool ok = true;
    for (const auto& v : s) {
      // image of coeff * e_axis is coeff * column(axis)
      int hits = 0;
      int row = -1;
      for (int i = 0; i < n; ++i)
        if (sigma.at(i, v.axis - 1) != 0) {
          ++hits;
          row = i;
        }
      if (hits != 1) {
        ok = false;
        break;
      }
      AxisVector img{v.coeff * sigma.at(row, v.axis - 1), row + 1};
      if (std::find(s_prime.begin(), s_prime.end(), img) == s_prime.end()) {
        ok = false;
        break;
      }
    }
    if (ok && sigma.is_unimodular()) out.solutions.push_back(sigma);
    // odometer
    for (int c = 0; c < cells; ++c) {
      if (entry[c] < bound) {
        ++entry[c];
        break;
      }
      entry[c] = -bound;
    }
    if (++done % kChunk == 0 && progress) {
      if (!progress(done, total))
        fail(Errc::SearchSpaceTooLarge, "enumeration cancelled");
    }
  }
  if (progress && !progress(total, total))
    fail(Errc::SearchSpaceTooLarge, "enumeration cancelled");
  sort_unique(out.solutions);
  return out;
}

namespace {

/// The scalar c with c * a = b when the tangents are parallel.
std::optional<Scalar> tangent_ratio(const Tangent& a, const Tangent& b, Field f) {
  if (a.is_zero()) return std::nullopt;
  auto it = a.entries().begin();
  Scalar c = b.at(it->first, f) / it->second;
  if (a.scaled(c) == b) return c;
  return std::nullopt;
}

/// Units u with u^{c_j} = mu_j for every constraint, solved by folding the
/// constraints through Bezout and extracting one final root.
std::vector<Scalar> solve_power_constraints(
    Field f, const std::vector<std::pair<BigInt, Scalar>>& constraints) {
  BigInt g = constraints[0].first;
  Scalar s = constraints[0].second;
  for (std::size_t i = 1; i < constraints.size(); ++i) {
    BigInt a, b;
    BigInt g2 = ext_gcd(g, constraints[i].first, a, b);
    s = s.pow(a) * constraints[i].second.pow(b);
    g = g2;
  }
  if (g < 0) {
    g = -g;
    s = s.inverse();
  }
  if (g > 64) fail(Errc::SearchSpaceTooLarge, "root index too large");
  std::vector<Scalar> out;
  for (const Scalar& u : s.kth_roots(g.convert_to<unsigned>())) {
    bool all = true;
    for (const auto& [c, mu] : constraints)
      if (u.pow(c) != mu) {
        all = false;
        break;
      }
    if (all) out.push_back(u);
  }
  return out;
}

}  // namespace

std::vector<AutTriple> stabilizer_of_element(const AlgebraDescriptor& alg,
                                             const WittElement& w) {
  if (alg.is_infinite() || !is_simple(alg))
    fail(Errc::NotSimpleAmbient, "stabilizers are computed in finite simple algebras");
  if (w.algebra() != alg) fail(Errc::AlgebraMismatch, "element from another algebra");
  if (w.is_zero())
    fail(Errc::HypothesisViolated, "the zero element is fixed by everything");
  const int n = alg.rank(), m = alg.dim();
  const Field f = alg.field();

  std::vector<AxisVector> support;
  for (const auto& [e, t] : w.terms()) {
    (void)t;
    if (e.entries().size() != 1)
      fail(Errc::HypothesisViolated,
           "support exponents must be multiples of basis vectors");
    const auto& [axis, coeff] = *e.entries().begin();
    support.push_back({coeff, axis});
  }
  AxisMapResult sigmas = lemma23_decide(n, support, support);

  std::vector<AutTriple> found;
  for (const IntMatrix& sigma : sigmas.solutions) {
    // tau is pinned by tau^T phi sigma = phi (phi has full row rank).
    auto tau_opt = solve_tau(alg, sigma);
    if (!tau_opt) continue;
    const ScalarMatrix& tau = *tau_opt;

    // Per-axis power constraints chi(e_axis)^c = mu from the term match
    // chi(alpha) tau(d_alpha) = d'_{sigma(alpha)}.
    std::vector<std::vector<std::pair<BigInt, Scalar>>> constraints(n + 1);
    bool support_ok = true;
    for (const auto& [e, t] : w.terms()) {
      const auto& [axis, coeff] = *e.entries().begin();
      Exponent image;
      for (int r = 0; r < n; ++r) {
        BigInt v = coeff * sigma.at(r, axis - 1);
        if (v != 0) image.set(r + 1, v);
      }
      auto target = w.terms().find(image);
      if (target == w.terms().end()) {
        support_ok = false;
        break;
      }
      Tangent moved = Tangent::from_dense(tau.mul_vec(t.dense(m, f)));
      auto mu = tangent_ratio(moved, target->second, f);
      if (!mu) {
        support_ok = false;
        break;
      }
      constraints[axis].push_back({coeff, *mu});
    }
    if (!support_ok) continue;

    // Solve chi axis by axis, then take every combination.
    std::vector<std::vector<Scalar>> options(n + 1);
    bool any_empty = false;
    for (int i = 1; i <= n; ++i) {
      options[i] = solve_power_constraints(f, constraints[i]);
      if (options[i].empty()) any_empty = true;
    }
    if (any_empty) continue;
    std::vector<std::size_t> pick(n + 1, 0);
    for (;;) {
      AutTriple theta;
      theta.sigma = sigma;
      theta.tau = tau;
      theta.chi.reserve(n);
      for (int i = 1; i <= n; ++i) theta.chi.push_back(options[i][pick[i]]);
      if (check_triple(alg, theta).ok &&
          apply_aut_unchecked(theta, w) == w)
        found.push_back(std::move(theta));
      int pos = 1;
      while (pos <= n) {
        if (++pick[pos] < options[pos].size()) break;
        pick[pos] = 0;
        ++pos;
      }
      if (pos > n) break;
    }
  }
  std::sort(found.begin(), found.end(), [](const AutTriple& a, const AutTriple& b) {
    return AutTriple::cmp(a, b) < 0;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<AutTriple> stabilizer_of(const AlgebraDescriptor& alg,
                                     const DistinguishedElement& w) {
  return stabilizer_of_element(alg, w.element);
}

}  // namespace wittkit
