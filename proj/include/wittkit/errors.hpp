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

#ifndef WITTKIT_ERRORS_HPP
#define WITTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wittkit {

enum class Errc {
  ZeroDenominator,
  NotSquare,
  NotUnimodular,
  RankMismatch,
  ShapeMismatch,
  AlgebraMismatch,
  NotKroneckerPairing,
  InvalidTriple,
  NotCoprime,
  TooSmallConstant,
  HypothesisViolated,
  SearchSpaceTooLarge,
  NotSimpleAmbient,
  OracleInvalidTriple,
  WitnessDoesNotFixW,
  RecoveryMismatch,
  NotLinearOnProbes,
  UnboundedSupport,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace wittkit

#endif  // WITTKIT_ERRORS_HPP
