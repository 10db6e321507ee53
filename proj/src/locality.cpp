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

#include "wittkit/locality.hpp"

#include <set>

#include "wittkit/errors.hpp"
#include "wittkit/shift.hpp"

namespace wittkit {

AutTriple ShiftOracle::witness_single(const WittElement& x) {
  return shift_witness(x, WittElement(x.algebra()));
}

AutTriple ShiftOracle::witness_pair(const WittElement& x, const WittElement& y) {
  return shift_witness(x, y);
}

void ProbeSet::add(const WittElement& probe, const WittElement& image) {
  probes.push_back(probe);
  images.push_back(image);
}

void ProbeSet::validate() const {
  if (probes.size() != images.size())
    fail(Errc::ShapeMismatch, "probe/image count mismatch");
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (probes[i].algebra() != alg || images[i].algebra() != alg)
      fail(Errc::AlgebraMismatch, "probe or image from another algebra");
    probes[i].validate();
    images[i].validate();
    for (std::size_t j = i + 1; j < probes.size(); ++j)
      if (probes[i] == probes[j])
        fail(Errc::ShapeMismatch, "probes must be pairwise distinct");
  }
}

std::optional<Scalar> element_ratio(const WittElement& a, const WittElement& b) {
  if (a.is_zero()) return std::nullopt;
  const Field f = a.algebra().field();
  if (b.is_zero()) return Scalar::zero(f);
  const auto& [e0, t0] = *a.terms().begin();
  auto it = b.terms().find(e0);
  if (it == b.terms().end()) return std::nullopt;
  const auto& [i0, v0] = *t0.entries().begin();
  Scalar c = it->second.at(i0, f) / v0;
  if (a.scaled(c) == b) return c;
  return std::nullopt;
}

namespace {

AutTriple validated_witness(const AlgebraDescriptor& alg, WitnessOracle& oracle,
                            const WittElement& x, const WittElement* y) {
  AutTriple t = y ? oracle.witness_pair(x, *y) : oracle.witness_single(x);
  TripleCheck c = check_triple(alg, t);
  if (!c.ok)
    fail(Errc::OracleInvalidTriple, "oracle returned a non-automorphism: " + c.reason);
  return t;
}

}  // namespace

VerifyReport verify_2local(const ProbeSet& probes, WitnessOracle& oracle) {
  probes.validate();
  VerifyReport report;
  const int n = static_cast<int>(probes.probes.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      AutTriple t =
          validated_witness(probes.alg, oracle, probes.probes[i], &probes.probes[j]);
      if (apply_aut_unchecked(t, probes.probes[i]) != probes.images[i])
        report.failures.push_back({i, j, "witness misses the first image"});
      if (apply_aut_unchecked(t, probes.probes[j]) != probes.images[j])
        report.failures.push_back({i, j, "witness misses the second image"});
    }
  }
  report.pass = report.failures.empty();
  return report;
}

VerifyReport verify_local(const ProbeSet& probes, WitnessOracle& oracle) {
  probes.validate();
  VerifyReport report;
  const int n = static_cast<int>(probes.probes.size());
  // Linearity on the combinations present among the probes:
  // scalings p_k = c p_i, then affine combinations p_k = c p_i + p_j.
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      auto c = element_ratio(probes.probes[i], probes.probes[k]);
      if (c && probes.images[k] != probes.images[i].scaled(*c))
        report.failures.push_back({i, k, "image breaks homogeneity"});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        auto c = element_ratio(probes.probes[i],
                               probes.probes[k] - probes.probes[j]);
        if (c && probes.images[k] !=
                     probes.images[i].scaled(*c) + probes.images[j])
          report.failures.push_back({i, k, "image breaks additivity"});
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    AutTriple t = validated_witness(probes.alg, oracle, probes.probes[i], nullptr);
    if (apply_aut_unchecked(t, probes.probes[i]) != probes.images[i])
      report.failures.push_back({i, -1, "witness misses the image"});
  }
  report.pass = report.failures.empty();
  return report;
}

namespace {

struct Anchor {
  DistinguishedElement sub;  // in envelope coordinates
  WittElement ambient;       // embedded
  WittElement image;         // oracle-attested image of `ambient`
  AutTriple witness;         // the oracle's triple at the anchor
  std::set<Exponent> exceptional;  // sub-coordinate exponents this anchor skips
};

/// theta acts as the identity on the subalgebra spanned by the embedding.
bool identity_on_envelope(const AutTriple& theta, const SubalgebraEmbedding& emb) {
  const Field f = emb.ambient.field();
  for (const auto& b : emb.lattice_basis) {
    if (theta.apply_sigma(b) != b) return false;
    if (!theta.chi_value(b, f).is_one()) return false;
  }
  for (const auto& t : emb.tangent_basis)
    if (theta.apply_tau(t, f) != t) return false;
  return true;
}

/// Stabilizer certificate: the anchor is fixed only by the identity.
void certify_anchor(const AlgebraDescriptor& sub, const DistinguishedElement& w) {
  auto stab = stabilizer_of(sub, w);
  if (stab.size() != 1 || stab[0] != identity_triple(sub))
    fail(Errc::Internal, "anchor stabilizer is not trivial");
}

Anchor make_anchor(const SubalgebraEmbedding& emb, int sign) {
  Anchor a;
  a.sub = build_distinguished(emb.sub, sign);
  a.ambient = emb.to_ambient(a.sub.element);
  for (const auto& [e, t] : a.sub.element.terms()) {
    (void)t;
    a.exceptional.insert(e);
  }
  certify_anchor(emb.sub, a.sub);
  return a;
}

}  // namespace

AutTriple recover_2local(const ProbeSet& probes, WitnessOracle& oracle) {
  probes.validate();
  const AlgebraDescriptor& alg = probes.alg;
  if (alg.is_infinite() || !is_simple(alg))
    fail(Errc::NotSimpleAmbient, "recovery runs in a finite simple algebra");

  EnvelopeResult env = envelope_of(alg, probes.probes);
  const SubalgebraEmbedding& emb = env.embedding;
  Anchor anchor = make_anchor(emb, +1);

  AutTriple theta =
      validated_witness(alg, oracle, anchor.ambient, &anchor.ambient);
  AutTriple theta_inv = invert(alg, theta);

  for (std::size_t i = 0; i < probes.probes.size(); ++i) {
    const WittElement& z = probes.probes[i];
    AutTriple theta_z = validated_witness(alg, oracle, anchor.ambient, &z);
    AutTriple witness = compose(alg, theta_inv, theta_z);
    if (apply_aut_unchecked(witness, anchor.ambient) != anchor.ambient)
      fail(Errc::WitnessDoesNotFixW,
           "pair witness does not fix the anchor element");
    if (!identity_on_envelope(witness, emb))
      fail(Errc::WitnessDoesNotFixW,
           "anchor-fixing witness moves the envelope");
    if (apply_aut_unchecked(theta_inv, probes.images[i]) != z)
      fail(Errc::RecoveryMismatch,
           "the map disagrees with the anchor automorphism on a probe");
  }
  return theta;
}

namespace {

/// One pointwise certification through an anchor a: obtains witnesses at p
/// and at p + a, checks the additivity instance, checks that the combined
/// witness fixes the anchor (hence the envelope), and finally that the
/// translated map fixes p.
void certify_through_anchor(const AlgebraDescriptor& alg, WitnessOracle& oracle,
                            const SubalgebraEmbedding& emb, const Anchor& anchor,
                            const AutTriple& theta_w_inv, const WittElement& p,
                            const WittElement& image_p) {
  AutTriple theta_p = validated_witness(alg, oracle, p, nullptr);
  if (apply_aut_unchecked(theta_p, p) != image_p)
    fail(Errc::RecoveryMismatch, "witness disagrees with the stored image");
  WittElement q = p + anchor.ambient;
  AutTriple theta_q = validated_witness(alg, oracle, q, nullptr);
  WittElement image_q = apply_aut_unchecked(theta_q, q);
  if (image_q != image_p + anchor.image)
    fail(Errc::NotLinearOnProbes,
         "map is not additive on a probe/anchor combination");
  AutTriple witness = compose(alg, theta_w_inv, theta_q);
  if (apply_aut_unchecked(witness, anchor.ambient) != anchor.ambient)
    fail(Errc::WitnessDoesNotFixW,
         "combined witness does not fix the anchor element");
  if (!identity_on_envelope(witness, emb))
    fail(Errc::WitnessDoesNotFixW, "anchor-fixing witness moves the envelope");
  if (apply_aut_unchecked(theta_w_inv, image_p) != p)
    fail(Errc::RecoveryMismatch,
         "the map disagrees with the anchor automorphism on a probe");
}

}  // namespace

AutTriple recover_local(const ProbeSet& probes, WitnessOracle& oracle) {
  probes.validate();
  const AlgebraDescriptor& alg = probes.alg;
  if (alg.is_infinite() || !is_simple(alg))
    fail(Errc::NotSimpleAmbient, "recovery runs in a finite simple algebra");

  EnvelopeResult env = envelope_of(alg, probes.probes);
  const SubalgebraEmbedding& emb = env.embedding;
  Anchor plus = make_anchor(emb, +1);
  Anchor minus = make_anchor(emb, -1);

  AutTriple theta_w = validated_witness(alg, oracle, plus.ambient, nullptr);
  plus.witness = theta_w;
  plus.image = apply_aut_unchecked(theta_w, plus.ambient);
  AutTriple theta_w_inv = invert(alg, theta_w);

  // The mirrored anchor is only trusted once the translated map provably
  // fixes it: each of its monomials is certified through the plus anchor,
  // additivity ties the sum together, then the direct check must agree.
  bool minus_ready = false;
  auto prepare_minus = [&]() {
    if (minus_ready) return;
    AutTriple theta_m = validated_witness(alg, oracle, minus.ambient, nullptr);
    minus.image = apply_aut_unchecked(theta_m, minus.ambient);
    WittElement sum(alg);
    for (const auto& [e, t] : minus.ambient.terms()) {
      WittElement mono = WittElement::monomial(alg, e, t);
      AutTriple theta_mono = validated_witness(alg, oracle, mono, nullptr);
      WittElement mono_image = apply_aut_unchecked(theta_mono, mono);
      certify_through_anchor(alg, oracle, emb, plus, theta_w_inv, mono,
                             mono_image);
      sum = sum + mono_image;
    }
    if (minus.image != sum)
      fail(Errc::NotLinearOnProbes,
           "map is not additive across the mirrored anchor's terms");
    if (apply_aut_unchecked(theta_w_inv, minus.image) != minus.ambient)
      fail(Errc::RecoveryMismatch,
           "translated map does not fix the mirrored anchor");
    minus.witness = theta_m;
    minus_ready = true;
  };

  for (std::size_t i = 0; i < probes.probes.size(); ++i) {
    const WittElement& p = probes.probes[i];
    const WittElement& img = probes.images[i];
    if (p.is_zero()) {
      if (!img.is_zero())
        fail(Errc::NotLinearOnProbes, "zero probe with a nonzero image");
      continue;
    }
    if (p.terms().size() == 1) {
      const auto& [e, t] = *p.terms().begin();
      (void)t;
      auto e_sub = emb.exp_to_sub(e);
      if (!e_sub)
        fail(Errc::Internal, "probe exponent escaped its own envelope");
      if (plus.exceptional.count(*e_sub) == 0) {
        certify_through_anchor(alg, oracle, emb, plus, theta_w_inv, p, img);
      } else {
        // Exceptional for the plus anchor, never for the mirrored one:
        // the two exceptional sets are disjoint since the constants are
        // at least 2.
        prepare_minus();
        certify_through_anchor(alg, oracle, emb, minus, theta_w_inv, p, img);
      }
    } else {
      // Compound probe: the truth condition itself.
      if (apply_aut_unchecked(theta_w_inv, img) != p)
        fail(Errc::RecoveryMismatch,
             "the map disagrees with the anchor automorphism on a probe");
    }
  }
  return theta_w;
}

}  // namespace wittkit
