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

#include "corrcap/twoqubit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "corrcap/error.hpp"

namespace corrcap {

namespace {

constexpr double kRangeSlack = 1e-12;
constexpr double kFelineLog2Limit = 20.0;

// Builds in canonical labels (qubit 0 carries hi()), then swaps the qubits
// back if the caller's labels were reversed.
DensityMatrix finish(const CMatrix& canonical, const QubitPair& pair) {
  DensityMatrix rho = validate(canonical, {2, 2});
  if (!pair.swapped()) return rho;
  const std::array<std::size_t, 2> order{1, 0};
  return permute_subsystems(rho, order);
}

}  // namespace

QubitPair QubitPair::make(double p_a, double p_b) {
  for (double p : {p_a, p_b}) {
    if (!(p >= 0.5 - kRangeSlack && p <= 1.0 + kRangeSlack)) {
      std::ostringstream os;
      os << "marginal eigenvalue " << p << " outside [0.5, 1]";
      throw Error(ErrorCode::BadInput, os.str());
    }
  }
  return QubitPair(std::clamp(p_a, 0.5, 1.0), std::clamp(p_b, 0.5, 1.0));
}

DensityMatrix sigma_separable(const QubitPair& pair) {
  const double pa = pair.hi();
  const double pb = pair.lo();
  const double denom = pb * (1.0 - pb);
  // pb == 1 forces pa == 1, where theta = 0.
  const double cos2 = denom > 0.0 ? std::min(pa * (1.0 - pa) / denom, 1.0) : 1.0;
  CVector theta0 = CVector::Zero(4);
  theta0(0) = std::sqrt(cos2);
  theta0(2) = std::sqrt(1.0 - cos2);
  CMatrix m = pb * theta0 * theta0.adjoint();
  m(3, 3) += 1.0 - pb;
  return finish(m, pair);
}

DensityMatrix sigma_entangled(const QubitPair& pair) {
  const double pa = pair.hi();
  const double pb = pair.lo();
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = pb;
  m(1, 1) = pa - pb;
  m(3, 3) = 1.0 - pa;
  m(0, 3) = m(3, 0) = std::sqrt(pb * (1.0 - pa));
  return finish(m, pair);
}

DensityMatrix sigma_classical(const QubitPair& pair) {
  const double pa = pair.hi();
  const double pb = pair.lo();
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = pb;
  m(1, 1) = pa - pb;
  m(3, 3) = 1.0 - pa;
  return finish(m, pair);
}

Hierarchy hierarchy(const QubitPair& pair) {
  const double pa = pair.hi();
  const double pb = pair.lo();
  const double x = pa - pb;
  const double y = 1.0 - pa;
  return Hierarchy{
      canonicalize({pb, std::max(x, y), std::min(x, y), 0.0}),
      canonicalize({pb, 1.0 - pb, 0.0, 0.0}),
      canonicalize({1.0 + pb - pa, pa - pb, 0.0, 0.0}),
  };
}

std::vector<Fig1Row> fig1_curve(double p_a, std::size_t steps) {
  if (steps < 2) throw Error(ErrorCode::BadInput, "fig1 needs at least two grid points");
  QubitPair::make(p_a, 0.5);
  std::vector<Fig1Row> rows;
  rows.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    // Last point pinned to 1 exactly.
    const double p_b = k + 1 == steps
                           ? 1.0
                           : 0.5 + 0.5 * static_cast<double>(k) /
                                       static_cast<double>(steps - 1);
    const QubitPair pair = QubitPair::make(p_a, p_b);
    rows.push_back(Fig1Row{p_b, correlation_information(sigma_classical(pair)),
                           correlation_information(sigma_separable(pair)),
                           correlation_information(sigma_entangled(pair))});
  }
  return rows;
}

FelineStates feline_state(std::size_t n, const ProbVector& spectrum) {
  if (n < 2) throw Error(ErrorCode::BadInput, "feline states need n >= 2");
  const std::size_t d = spectrum.size();
  if (static_cast<double>(n) * std::log2(static_cast<double>(d)) > kFelineLog2Limit) {
    throw Error(ErrorCode::TooLarge,
                "n * log2(d) exceeds " + std::to_string(kFelineLog2Limit));
  }
  const Dims dims(n, d);
  const std::size_t total = total_dim(dims);

  // Flat index of |k k ... k>: k * (1 + d + d^2 + ... + d^(n-1)).
  std::size_t repunit = 0;
  for (std::size_t a = 0; a < n; ++a) repunit = repunit * d + 1;

  CVector v = CVector::Zero(static_cast<Eigen::Index>(total));
  JointPmf pmf{dims, std::vector<double>(total, 0.0)};
  for (std::size_t k = 0; k < d; ++k) {
    v(static_cast<Eigen::Index>(k * repunit)) = std::sqrt(spectrum[k]);
    pmf.values[k * repunit] = spectrum[k];
  }
  return FelineStates{PureState::normalized(std::move(v), dims), std::move(pmf)};
}

}  // namespace corrcap
