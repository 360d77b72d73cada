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
#include <optional>
#include <vector>

#include "corrcap/qstate.hpp"
#include "corrcap/sampling.hpp"

namespace corrcap {

/// Slack allowed for monotonicity and identity checks.
inline constexpr double kMonotoneTol = 1e-10;

struct Outcome {
  double probability;
  PureState state;
};

struct MeasuredEnsemble {
  std::vector<Outcome> outcomes;
};

/// f(psi) = sum of marginal entropies minus the largest one, in bits.
/// Evaluated both as sum - max and as min over b of the sum without b; the
/// two must agree within 1e-10 (Internal otherwise).
double entropy_sum_minus_max(const PureState& psi);

/// sum of marginal entropies minus H(infimum of marginal spectra): the
/// correlation information of the least disordered separable state built
/// from psi's marginals. Defined for any local dimensions.
double marginal_capacity(const PureState& psi);

/// marginal_capacity restricted to all-qubit states, where it must equal
/// entropy_sum_minus_max within 1e-10. Throws NotQubits.
double separable_capacity(const PureState& psi);

/// Two-outcome local measurement with Kraus operators U0 sqrt(E) and
/// U1 sqrt(I - E) on subsystem `party`. Branches with probability below
/// 1e-12 are dropped. Throws BadEffect unless 0 <= E <= I (1e-10 slack)
/// and NotUnitary for non-unitary U0/U1.
MeasuredEnsemble local_measure(const PureState& psi, std::size_t party,
                               const CMatrix& effect, const CMatrix& u0,
                               const CMatrix& u1);

struct TrialRecord {
  std::size_t party = 0;
  std::size_t outcomes = 0;
  double f_before = 0.0;
  /// sum_i p_i f(psi_i)
  double f_after = 0.0;
  /// f_before - f_after; >= 0 by monotonicity.
  double margin = 0.0;
  /// min over parties of S(rho^a) - sum_i p_i S(rho^a_i).
  double entropy_margin = 0.0;
  /// Same margin for marginal_capacity.
  double capacity_margin = 0.0;
  /// Largest |separable_capacity - f| over psi and outcomes (qubits only).
  double identity_gap = 0.0;
  /// Smallest f - marginal_capacity over psi and outcomes.
  double bound_margin = 0.0;
  bool all_qubits = false;
};

/// One random local measurement on psi: random party, effect and unitaries
/// drawn from `stream`.
TrialRecord measurement_trial(const PureState& psi, const SeededStream& stream);

struct Violation {
  std::size_t trial;
  std::size_t party;
  double margin;
};

struct MonotonicityReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  bool all_qubits = false;
  /// max(0, -margin) over trials, for f.
  double max_violation = 0.0;
  double mean_margin = 0.0;
  /// Trials whose f margin is below -1e-10.
  std::vector<Violation> violations;
  double entropy_max_violation = 0.0;
  /// For qubit inputs this checks Corollary-3 style monotonicity; otherwise
  /// it is exploratory evidence only.
  double capacity_max_violation = 0.0;
  std::size_t capacity_violations = 0;
  double identity_max_gap = 0.0;
};

/// Runs `trials` independent measurement trials on psi. Trial t draws from
/// SeededStream(seed).child(t).
MonotonicityReport monotonicity_trial(const PureState& psi, std::size_t trials,
                                      std::uint64_t seed, bool parallel = false);

}  // namespace corrcap
