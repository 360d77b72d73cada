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

#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/locc.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/qstate.hpp"
#include "corrcap/suites.hpp"
#include "corrcap/twoqubit.hpp"

namespace corrcap::io {

using nlohmann::json;

/// Rounds to 9 significant digits.
double round9(double x);
/// round9, with magnitudes below 1e-13 printed as 0. For reported
/// quantities, never for violations.
double quantity(double x);

/// {"probs": [...]}, canonicalized on load. Malformed input throws BadInput,
/// an invalid distribution throws NotADistribution.
ProbVector distribution_from_json(const json& doc);
/// Entries below 1e-13 print as 0 unless `rounded` is false.
json distribution_to_json(const ProbVector& p, bool rounded = true);

/// {"dims": [...], "matrix": [[[re, im], ...], ...]}.
DensityMatrix state_from_json(const json& doc);
/// Full precision, so a written state always validates when read back.
json state_to_json(const DensityMatrix& rho);

/// {"dims": [...], "vector": [[re, im], ...]}; normalized on load.
PureState pure_state_from_json(const json& doc);

/// {"marginals": [state, ...]}.
std::vector<DensityMatrix> marginals_from_json(const json& doc);
json marginals_to_json(std::span<const DensityMatrix> marginals);

json report_to_json(const CompositeReport& report);
json summary_to_json(const SuiteSummary& summary);
json monotonicity_to_json(const MonotonicityReport& report);

/// Header p_b,C_classical,C_separable,C_entangled; 9 significant digits.
void write_fig1_csv(std::ostream& os, std::span<const Fig1Row> rows);

/// Parses a whole file; throws BadInput when missing or not valid JSON.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace corrcap::io
