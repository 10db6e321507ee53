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

#ifndef WITTKIT_SHIFT_HPP
#define WITTKIT_SHIFT_HPP

#include "wittkit/aut.hpp"

namespace wittkit {

/// The injective non-surjective endomorphism of the countable-rank
/// algebra: every coordinate index moves up by one,
/// t^alpha d_i -> t^{(0,alpha)} d_{i+1}.
WittElement shift_map(const WittElement& x);

/// Left inverse of shift_map on its image; nullopt when the element has a
/// term outside the image shape.
std::optional<WittElement> unshift_map(const WittElement& x);

/// A finitely supported automorphism agreeing with the shift on both
/// elements: the cyclic coordinate permutation (1 2 ... N+1), where N
/// bounds the support of x and y. Each call verifies the agreement.
AutTriple shift_witness(const WittElement& x, const WittElement& y);

/// Element claimed to have no shift_map preimage, plus the reason.
struct NonImageCertificate {
  WittElement element;
  std::string reason;
};

/// The canonical certificate: d_1 has no preimage because every image term
/// has tangent support >= 2 and first exponent coordinate 0.
NonImageCertificate shift_non_surjectivity_certificate();

struct CertificateCheck {
  bool accepted = false;
  std::string reason;
  std::optional<WittElement> preimage;  // refutation when rejected
};

/// Machine check of a non-image claim against the image shape of
/// shift_map; rejected claims come with the explicit preimage.
CertificateCheck check_non_image(const WittElement& candidate);

}  // namespace wittkit

#endif  // WITTKIT_SHIFT_HPP
