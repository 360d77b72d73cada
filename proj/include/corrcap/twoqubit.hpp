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
#include <optional>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/qstate.hpp"

namespace corrcap {

/// Larger eigenvalues of two qubit marginals, each in [1/2, 1].
class QubitPair {
 public:
  /// Throws BadInput if either value lies outside [1/2, 1].
  static QubitPair make(double p_a, double p_b);

  double p_a() const noexcept { return p_a_; }
  double p_b() const noexcept { return p_b_; }
  /// Canonical labels: hi() >= lo(); swapped() when p_b > p_a.
  double hi() const noexcept { return swapped_ ? p_b_ : p_a_; }
  double lo() const noexcept { return swapped_ ? p_a_ : p_b_; }
  bool swapped() const noexcept { return swapped_; }

 private:
  QubitPair(double a, double b) : p_a_(a), p_b_(b), swapped_(b > a) {}
  double p_a_;
  double p_b_;
  bool swapped_;
};

// All three states have qubit 0 with spectrum (p_a, 1 - p_a) and qubit 1
// with (p_b, 1 - p_b), whichever label is larger.

/// Least disordered separable composite.
DensityMatrix sigma_separable(const QubitPair& pair);
/// Least disordered composite of any kind; pure when p_a == p_b.
DensityMatrix sigma_entangled(const QubitPair& pair);
/// Least disordered classically correlated composite: sigma_entangled with
/// its coherences removed.
DensityMatrix sigma_classical(const QubitPair& pair);

struct Hierarchy {
  ProbVector classical;
  ProbVector separable;
  ProbVector entangled;
};

/// Closed-form spectra, ordered classical ≺ separable ≺ entangled.
Hierarchy hierarchy(const QubitPair& pair);

struct Fig1Row {
  double p_b = 0.0;
  double c_classical = 0.0;
  double c_separable = 0.0;
  double c_entangled = 0.0;
};

inline constexpr std::size_t kFig1DefaultSteps = 201;

/// Correlation information of the three optimal states as p_b sweeps
/// [1/2, 1] on `steps` uniform points. Throws BadInput for steps < 2.
std::vector<Fig1Row> fig1_curve(double p_a, std::size_t steps = kFig1DefaultSteps);

struct FelineStates {
  /// sum_k sqrt(lambda_k) |k k ... k>.
  PureState pure;
  /// Diagonal (decohered) version as a joint table.
  JointPmf decohered;
};

/// n isospectral qudits with the given spectrum. Throws BadInput for n < 2
/// and TooLarge when n * log2(d) > 20.
FelineStates feline_state(std::size_t n, const ProbVector& spectrum);

}  // namespace corrcap
