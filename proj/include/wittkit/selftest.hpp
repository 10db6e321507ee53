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

#ifndef WITTKIT_SELFTEST_HPP
#define WITTKIT_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wittkit {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the full acceptance suite. The last criterion replays the golden
/// CLI corpus and needs the CLI binary plus the corpus directory; with
/// either missing it fails as unconfigured.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::string& cli_path,
                                            const std::string& golden_dir);

/// Prints one pass/fail line per criterion; returns true iff all passed.
bool report_acceptance(const std::vector<CriterionResult>& results,
                       std::ostream& out);

/// Byte-exact golden replay of the CLI corpus (also runs every case twice
/// to pin determinism). Returns an empty string on success, else the first
/// failure description.
std::string run_golden_corpus(const std::string& cli_path,
                              const std::string& golden_dir);

}  // namespace wittkit

#endif  // WITTKIT_SELFTEST_HPP
