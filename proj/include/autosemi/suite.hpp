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

#ifndef AUTOSEMI_SUITE_HPP_
#define AUTOSEMI_SUITE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "autosemi/cayley.hpp"

namespace autosemi {

struct OracleSuiteOptions {
  std::uint64_t seed = 1;
  std::size_t random_count = 200;
  std::size_t max_order = 6;
  bool check_rees = true;
};

struct OracleSuiteResult {
  std::size_t instances = 0;
  std::size_t rees_checked = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Runs every decision procedure against the brute-force table verdicts,
/// over the named instances plus seeded random transformation
/// subsemigroups of bounded order, and re-multiplies every completely
/// (zero-)simple instance through its Rees coordinates.
OracleSuiteResult run_oracle_suite(const OracleSuiteOptions& options, std::ostream* log = nullptr);

/// The named instances followed by the seeded random tables used by the
/// oracle suite.
std::vector<std::pair<std::string, CayleyTable>> suite_instances(
    const OracleSuiteOptions& options);

/// Checks one structure/table pair; returns human-readable mismatch
/// descriptions (empty = full agreement).
std::vector<std::string> check_against_table(const CayleyTable& t, const std::string& label);

/// Re-multiplies all element pairs of a completely (zero-)simple instance
/// through the Rees coordinates; `simple` selects the zero-free variant.
std::vector<std::string> check_rees_roundtrip(const InterpretedAutomaticStructure& s, bool simple,
                                              const std::string& label);

}  // namespace autosemi

#endif  // AUTOSEMI_SUITE_HPP_
