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
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "corrcap/majorization.hpp"

namespace corrcap {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
/// Subsystem dimensions; leftmost factor varies slowest in flat indices.
using Dims = std::vector<std::size_t>;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNegEigTol = 1e-9;
inline constexpr double kNormTol = 1e-12;
/// Relative gap (to the largest eigenvalue) below which eigenvalues cluster.
inline constexpr double kDegeneracyTol = 1e-9;
/// Eigenvalues at or below this count as outside the support.
inline constexpr double kSupportTol = 1e-9;
/// Largest total dimension for which dense density matrices are built from
/// larger objects (pure states, diagonal tables).
inline constexpr std::size_t kDenseLimit = 1024;

std::size_t total_dim(const Dims& dims);

/// Hermitian, positive semidefinite, unit-trace matrix with subsystem dims.
class DensityMatrix {
 public:
  const CMatrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(matrix_.rows());
  }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

 private:
  friend DensityMatrix validate(const CMatrix&, Dims);
  DensityMatrix(CMatrix m, Dims d) : matrix_(std::move(m)), dims_(std::move(d)) {}
  CMatrix matrix_;
  Dims dims_;
};

/// Unit-norm state vector with subsystem dims.
class PureState {
 public:
  /// Throws NotNormalized if the norm is off by more than 1e-12.
  static PureState make(CVector v, Dims dims);
  /// Normalizes first; throws NotNormalized for a zero vector.
  static PureState normalized(CVector v, Dims dims);

  const CVector& vector() const noexcept { return vector_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(vector_.size());
  }
  std::size_t num_subsystems() const noexcept { return dims_.size(); }

  DensityMatrix density() const;

 private:
  PureState(CVector v, Dims d) : vector_(std::move(v)), dims_(std::move(d)) {}
  CVector vector_;
  Dims dims_;
};

struct SpectralDecomp {
  ProbVector eigenvalues;
  /// Column i belongs to eigenvalues[i].
  CMatrix eigenvectors;
  /// Index ranges [first, last) of clusters of equal eigenvalues.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;

  /// Orthogonal projector onto the span of one cluster.
  CMatrix block_projector(std::size_t block) const;
};

/// Checks shape, Hermiticity, unit trace, and positivity (eigenvalues
/// >= -1e-9). The stored matrix is the Hermitian part of the input.
DensityMatrix validate(const CMatrix& matrix, Dims dims);

SpectralDecomp spectral(const DensityMatrix& rho);

/// Eigenvalues of a Hermitian matrix, descending.
RVector hermitian_eigenvalues(const CMatrix& h);

/// Frobenius norm of the difference.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

DensityMatrix tensor(std::span<const DensityMatrix> states);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on the `keep` subsystems (sorted, deduplicated).
/// Throws BadSubsystemIndex for an empty set or an out-of-range index.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::vector<std::size_t> keep);
DensityMatrix partial_trace(const PureState& psi,
                            std::vector<std::size_t> keep);

/// All single-subsystem marginals, in subsystem order.
std::vector<DensityMatrix> marginals(const DensityMatrix& rho);
std::vector<DensityMatrix> marginals(const PureState& psi);

/// Reorders subsystems: factor k of the result is factor order[k] of rho.
DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                 std::span<const std::size_t> order);

double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho || sigma) in bits, or +inf when supp(rho) is not inside supp(sigma).
/// Throws DimensionMismatch.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sum_k (P_k on subsystem `party`) rho (P_k on subsystem `party`).
/// Throws ProjectorsNotResolution unless the P_k are orthogonal projectors
/// summing to the identity.
DensityMatrix pinch(const DensityMatrix& rho, std::span<const CMatrix> projectors,
                    std::size_t party);

/// Embeds a local operator acting on subsystem `party` into the full space.
CMatrix embed_local(const CMatrix& op, const Dims& dims, std::size_t party);

/// Applies a local operator to one subsystem of a state vector (no
/// normalization).
CVector apply_local(const CVector& psi, const Dims& dims, std::size_t party,
                    const CMatrix& op);

/// Transpose on the second qubit. Throws WrongDims unless dims == (2, 2).
CMatrix partial_transpose(const DensityMatrix& rho);

}  // namespace corrcap
