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

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "corrcap/majorization.hpp"
#include "corrcap/qstate.hpp"

namespace corrcap {

/// Weighted pure-state decomposition: rho = sum_a w_a |v_a><v_a|.
/// Only non-zero weights are stored, in the order of the target vector.
struct Ensemble {
  std::vector<double> weights;
  std::vector<CVector> vectors;
  Dims dims;

  std::size_t size() const noexcept { return weights.size(); }
  /// sum_a w_a v_a v_a^dagger (not re-validated).
  CMatrix density() const;
};

/// Real orthogonal U with diag(U diag(lambda) U^T) = target, plus the number
/// of plane rotations used to build it.
struct SchurHorn {
  Eigen::MatrixXd rotation;
  std::size_t steps = 0;
};

/// Chain of two-level Givens rotations taking diag(lambda) to a matrix with
/// diagonal `target`. Both vectors are zero-padded to a common length d; at
/// most d - 1 rotations are used. Throws NotMajorized unless target ≺ lambda.
SchurHorn schur_horn_unitary(const ProbVector& lambda, const ProbVector& target);

/// Ensemble of rho with weights `target` (restricted to its support).
/// Throws NotMajorized unless target ≺ spectrum(rho).
Ensemble realize_ensemble(const DensityMatrix& rho, const ProbVector& target);

}  // namespace corrcap
