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

#include "corrcap/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "corrcap/error.hpp"

namespace corrcap {

namespace {

// Diagonal entries closer than this to their target need no rotation.
constexpr double kSettleTol = 1e-13;
// Target weights at or below this are dropped from ensembles.
constexpr double kZeroWeight = 1e-14;
constexpr double kDiagonalTol = 1e-10;

}  // namespace

CMatrix Ensemble::density() const {
  const Eigen::Index n = vectors.empty() ? 0 : vectors.front().size();
  CMatrix m = CMatrix::Zero(n, n);
  for (std::size_t a = 0; a < weights.size(); ++a) {
    m += weights[a] * vectors[a] * vectors[a].adjoint();
  }
  return m;
}

SchurHorn schur_horn_unitary(const ProbVector& lambda, const ProbVector& target) {
  if (!majorized_by(target, lambda)) {
    throw Error(ErrorCode::NotMajorized, "target is not majorized by lambda");
  }
  const std::size_t d = std::max(lambda.size(), target.size());
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<double> diag(d);
  std::vector<double> goal(d);
  for (std::size_t k = 0; k < d; ++k) {
    diag[k] = lambda.padded(k);
    goal[k] = target.padded(k);
  }

  // Targets are settled largest first. The current target lies between two
  // neighbouring values of the unsettled diagonal; one rotation of that pair
  // settles it, and what remains still majorizes the remaining targets.
  // slot[m] is the row that ends up carrying goal[m].
  Eigen::MatrixXd rot = Eigen::MatrixXd::Identity(n, n);
  std::vector<std::size_t> slot(d);
  std::vector<std::size_t> open(d);
  for (std::size_t k = 0; k < d; ++k) open[k] = k;
  std::size_t steps = 0;
  for (std::size_t m = 0; m + 1 < d; ++m) {
    std::sort(open.begin(), open.end(), [&](std::size_t x, std::size_t y) {
      return diag[x] > diag[y] || (diag[x] == diag[y] && x < y);
    });
    const double t = goal[m];
    // Last open slot with diag >= t (there is one: t <= the largest open value).
    std::size_t k = 0;
    while (k + 1 < open.size() && diag[open[k + 1]] >= t) ++k;
    std::size_t settled = open[k];
    if (std::abs(diag[open[k]] - t) > kSettleTol && k + 1 < open.size()) {
      const std::size_t p = open[k];
      const std::size_t q = open[k + 1];
      if (std::abs(diag[q] - t) <= kSettleTol) {
        settled = q;
      } else {
        const double c2 = std::clamp((t - diag[q]) / (diag[p] - diag[q]), 0.0, 1.0);
        const double c = std::sqrt(c2);
        const double s = std::sqrt(1.0 - c2);
        const auto pi = static_cast<Eigen::Index>(p);
        const auto qi = static_cast<Eigen::Index>(q);
        const Eigen::RowVectorXd row_p = rot.row(pi);
        const Eigen::RowVectorXd row_q = rot.row(qi);
        rot.row(pi) = c * row_p + s * row_q;
        rot.row(qi) = -s * row_p + c * row_q;
        diag[q] = diag[p] + diag[q] - t;
        diag[p] = t;
        ++steps;
      }
    }
    slot[m] = settled;
    open.erase(std::find(open.begin(), open.end(), settled));
  }
  slot[d - 1] = open.front();

  SchurHorn out{Eigen::MatrixXd(n, n), steps};
  for (std::size_t m = 0; m < d; ++m) {
    out.rotation.row(static_cast<Eigen::Index>(m)) = rot.row(static_cast<Eigen::Index>(slot[m]));
  }

  Eigen::VectorXd lam(n);
  for (std::size_t k = 0; k < d; ++k) lam(static_cast<Eigen::Index>(k)) = lambda.padded(k);
  const Eigen::VectorXd achieved =
      (out.rotation * lam.asDiagonal() * out.rotation.transpose()).diagonal();
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(achieved(static_cast<Eigen::Index>(k)) - goal[k]) > kDiagonalTol) {
      std::ostringstream os;
      os << "rotation chain missed diagonal entry " << k << " by "
         << achieved(static_cast<Eigen::Index>(k)) - goal[k];
      throw Error(ErrorCode::Internal, os.str());
    }
  }
  return out;
}

Ensemble realize_ensemble(const DensityMatrix& rho, const ProbVector& target) {
  const SpectralDecomp sd = spectral(rho);
  if (!majorized_by(target, sd.eigenvalues)) {
    throw Error(ErrorCode::NotMajorized,
                "target weights are not majorized by the spectrum");
  }
  const SchurHorn sh = schur_horn_unitary(sd.eigenvalues, target);
  const auto n = static_cast<Eigen::Index>(rho.dim());

  // Columns e_i * sqrt(lambda_i); padded indices beyond n carry no weight.
  CMatrix scaled = sd.eigenvectors;
  for (Eigen::Index i = 0; i < n; ++i) {
    scaled.col(i) *= std::sqrt(sd.eigenvalues[static_cast<std::size_t>(i)]);
  }

  Ensemble out;
  out.dims = rho.dims();
  for (std::size_t alpha = 0; alpha < target.size(); ++alpha) {
    const double w = target[alpha];
    if (w <= kZeroWeight) continue;
    const Eigen::VectorXd coeffs =
        sh.rotation.row(static_cast<Eigen::Index>(alpha)).head(n).transpose();
    CVector v = scaled * coeffs.cast<cplx>();
    v /= std::sqrt(w);
    v.normalize();
    out.weights.push_back(w);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace corrcap
