// Copyright 2026 The corrcap Authors
//
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corrcap {

struct SuiteSummary {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t failures = 0;
  /// Largest raw deviation seen by the suite's checks (0 when all exact).
  double max_violation = 0.0;
  /// Suite-specific diagnostics, in a fixed order.
  std::vector<std::pair<std::string, double>> metrics;
};

/// theorem1, nielsen-kempe, hierarchy, locc, corollary3, lattice-oracle,
/// conjecture-probe.
const std::vector<std::string_view>& suite_names();
std::size_t default_trials(std::string_view suite);

/// Throws BadInput for an unknown suite name.
SuiteSummary run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed,
                       bool parallel = false);

SuiteSummary theorem1_suite(std::size_t trials, std::uint64_t seed, bool parallel);
SuiteSummary nielsen_kempe_suite(std::size_t trials, std::uint64_t seed, bool parallel);
SuiteSummary hierarchy_suite(std::size_t trials, std::uint64_t seed, bool parallel);
SuiteSummary locc_suite(std::size_t trials, std::uint64_t seed, bool parallel);
SuiteSummary corollary3_suite(std::size_t trials, std::uint64_t seed, bool parallel);
/// Exhaustive: every set of 1-3 sorted distributions with denominator 12 and
/// at most 4 entries. `trials` in the summary is the number of sets.
SuiteSummary lattice_oracle_suite(bool parallel);
/// Qutrit (3, 3, 3) states: asserts only f monotonicity and f >= C[sigma];
/// capacity violations are reported as metrics.
SuiteSummary conjecture_probe_suite(std::size_t trials, std::uint64_t seed, bool parallel);

}  // namespace corrcap
