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

#ifndef WITTKIT_JSON_IO_HPP
#define WITTKIT_JSON_IO_HPP

#include <json.hpp>

#include "wittkit/distinguished.hpp"
#include "wittkit/locality.hpp"
#include "wittkit/pairs.hpp"

namespace wittkit {

using Json = nlohmann::json;

// Big integers travel as decimal strings so no consumer ever rounds them;
// parsing accepts plain JSON numbers as well. nlohmann::json keeps object
// keys sorted, which makes every dump canonical byte-for-byte.

Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field f);

Json int_matrix_to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json descriptor_to_json(const AlgebraDescriptor& alg);
AlgebraDescriptor descriptor_from_json(const Json& j);

Json exponent_to_json(const Exponent& e, const AlgebraDescriptor& alg);
Exponent exponent_from_json(const Json& j, const AlgebraDescriptor& alg);

Json tangent_to_json(const Tangent& t, const AlgebraDescriptor& alg);
Tangent tangent_from_json(const Json& j, const AlgebraDescriptor& alg);

Json element_to_json(const WittElement& x);
/// Accepts {"algebra":..., "terms":...}; a missing algebra falls back to
/// the supplied default.
WittElement element_from_json(const Json& j,
                              const AlgebraDescriptor* fallback = nullptr);

Json triple_to_json(const AutTriple& t, const AlgebraDescriptor& alg);
AutTriple triple_from_json(const Json& j, const AlgebraDescriptor& alg);

Json distinguished_to_json(const DistinguishedElement& w);

Json axis_vector_to_json(const AxisVector& v);
AxisVector axis_vector_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& r);
Json defect_to_json(const AlgebraDescriptor& alg, const DefectResult& d);
Json completion_to_json(const AlgebraDescriptor& alg, const CompletionResult& c);
Json envelope_to_json(const EnvelopeResult& e);

Sublattice sublattice_from_json(const Json& j, const AlgebraDescriptor& alg);
std::vector<Tangent> subspace_from_json(const Json& j, const AlgebraDescriptor& alg);

/// Canonical one-line serialization with a trailing newline.
std::string canonical_dump(const Json& j);
Json parse_json(const std::string& text);

}  // namespace wittkit

#endif  // WITTKIT_JSON_IO_HPP
