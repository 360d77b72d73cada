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

#include <optional>
#include <span>
#include <vector>

#include "corrcap/ensemble.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/qstate.hpp"

namespace corrcap {

inline constexpr double kPinchTol = 1e-8;
inline constexpr double kCommutatorTol = 1e-8;
inline constexpr double kPptTol = 1e-10;

struct CompositeReport {
  ProbVector spectrum;
  std::vector<ProbVector> marginal_spectra;
  double correlation_bits = 0.0;
  bool is_classical = false;
  /// Present only for dims (2, 2): true when the partial transpose is PSD.
  std::optional<bool> two_qubit_ppt;
  /// Present only for states built from an ensemble.
  std::optional<double> gram_offdiag_max;
};

/// Least disordered separable composite of a marginal set, together with
/// the ensembles used to assemble it.
struct OptimalSeparable {
  DensityMatrix state;
  /// Common weights: infimum of the marginal spectra.
  ProbVector weights;
  /// Product vectors, one per non-zero weight.
  Ensemble ensemble;
  /// Per-marginal ensembles sharing `weights`.
  std::vector<Ensemble> local;
};

/// Each marginal becomes one subsystem of the result (multipartite
/// marginals are flattened to their total dimension). Needs >= 2 marginals.
OptimalSeparable build_optimal_separable(std::span<const DensityMatrix> marginals);

/// G_ab = sqrt(w_a) <v_a|v_b> sqrt(w_b).
CMatrix gram_matrix(const Ensemble& ensemble);
double max_offdiag_abs(const CMatrix& m);

/// Sum of single-subsystem marginal entropies minus the global entropy, in
/// bits.
double correlation_information(const DensityMatrix& rho);

struct PartitionCorrelation {
  std::vector<double> block_terms;
  /// S(rho || rho_1 ⊗ ... ⊗ rho_M) over the blocks.
  double residual = 0.0;
};

/// Throws BadPartition unless `partition` covers every subsystem exactly once.
PartitionCorrelation partition_correlation(
    const DensityMatrix& rho, const std::vector<std::vector<std::size_t>>& partition);

/// sum_a H(lambda^a) - H(inf lambda^a): the largest correlation a separable
/// state with these marginal spectra can carry.
double max_separable_correlation(std::span<const ProbVector> spectra);

/// True iff rho is diagonal in some product of marginal eigenbases.
bool is_classically_correlated(const DensityMatrix& rho);

/// Joint probability table over several classical variables, row-major
/// (leftmost variable slowest).
struct JointPmf {
  Dims shape;
  std::vector<double> values;

  /// Classical marginal of one variable.
  std::vector<double> marginal(std::size_t variable) const;
  /// Diagonal density matrix carrying this distribution.
  DensityMatrix density() const;
};

/// sum_a H(marginal_a) - H(joint), in bits.
double classical_correlation(const JointPmf& pmf);

/// For a pure state, C is the sum of marginal entropies.
double correlation_information(const PureState& psi);

/// nullopt unless dims == (2, 2).
std::optional<bool> two_qubit_ppt(const DensityMatrix& rho);

CompositeReport analyze(const DensityMatrix& rho);
CompositeReport analyze(const OptimalSeparable& built);

}  // namespace corrcap
