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

#include "corrcap/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "corrcap/error.hpp"

namespace corrcap {

std::size_t total_dim(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

namespace {

void check_dims(const Dims& dims, std::size_t side) {
  if (dims.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "no subsystem dimensions given");
  }
  for (std::size_t d : dims) {
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "zero subsystem dimension");
  }
  if (total_dim(dims) != side) {
    std::ostringstream os;
    os << "product of dims is " << total_dim(dims) << " but the side is " << side;
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

// Splits flat indices of a multipartite space into (kept, traced) parts.
// table[t * kept_dim + k] is the flat index with kept digits k, traced t.
struct IndexSplit {
  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  std::vector<std::size_t> table;
};

IndexSplit split_indices(const Dims& dims, const std::vector<bool>& kept) {
  IndexSplit s;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    (kept[a] ? s.kept_dim : s.traced_dim) *= dims[a];
  }
  const std::size_t n = s.kept_dim * s.traced_dim;
  s.table.resize(n);
  std::vector<std::size_t> digits(dims.size(), 0);
  for (std::size_t flat = 0; flat < n; ++flat) {
    std::size_t k = 0;
    std::size_t t = 0;
    for (std::size_t a = 0; a < dims.size(); ++a) {
      if (kept[a]) {
        k = k * dims[a] + digits[a];
      } else {
        t = t * dims[a] + digits[a];
      }
    }
    s.table[t * s.kept_dim + k] = flat;
    for (std::size_t a = dims.size(); a-- > 0;) {
      if (++digits[a] < dims[a]) break;
      digits[a] = 0;
    }
  }
  return s;
}

std::vector<bool> keep_mask(const Dims& dims, std::vector<std::size_t>& keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) {
    throw Error(ErrorCode::BadSubsystemIndex, "nothing to keep");
  }
  std::vector<bool> mask(dims.size(), false);
  for (std::size_t a : keep) {
    if (a >= dims.size()) {
      throw Error(ErrorCode::BadSubsystemIndex,
                  "subsystem " + std::to_string(a) + " out of range");
    }
    mask[a] = true;
  }
  return mask;
}

}  // namespace

PureState PureState::make(CVector v, Dims dims) {
  check_dims(dims, static_cast<std::size_t>(v.size()));
  if (std::abs(v.norm() - 1.0) > kNormTol) {
    std::ostringstream os;
    os.precision(17);
    os << "norm is " << v.norm();
    throw Error(ErrorCode::NotNormalized, os.str());
  }
  return PureState(std::move(v), std::move(dims));
}

PureState PureState::normalized(CVector v, Dims dims) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::NotNormalized, "cannot normalize a zero vector");
  }
  v /= n;
  return make(std::move(v), std::move(dims));
}

DensityMatrix PureState::density() const {
  return validate(vector_ * vector_.adjoint(), dims_);
}

CMatrix SpectralDecomp::block_projector(std::size_t block) const {
  const auto [first, last] = blocks.at(block);
  const auto cols = eigenvectors.middleCols(
      static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(last - first));
  return cols * cols.adjoint();
}

DensityMatrix validate(const CMatrix& matrix, Dims dims) {
  if (matrix.rows() != matrix.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  check_dims(dims, static_cast<std::size_t>(matrix.rows()));
  if (!matrix.allFinite()) {
    throw Error(ErrorCode::BadInput, "matrix has non-finite entries");
  }
  const double asym = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    std::ostringstream os;
    os << "max |M - M^dagger| = " << asym;
    throw Error(ErrorCode::NotHermitian, os.str());
  }
  const cplx tr = matrix.trace();
  if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << tr.real();
    throw Error(ErrorCode::NotUnitTrace, os.str());
  }
  CMatrix herm = 0.5 * (matrix + matrix.adjoint());
  const RVector eig = hermitian_eigenvalues(herm);
  if (eig.size() > 0 && eig(eig.size() - 1) < -kNegEigTol) {
    std::ostringstream os;
    os << "eigenvalue " << eig(eig.size() - 1);
    throw Error(ErrorCode::NotPositive, os.str());
  }
  return DensityMatrix(std::move(herm), std::move(dims));
}

RVector hermitian_eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

SpectralDecomp spectral(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "eigensolver did not converge");
  }
  const Eigen::Index n = solver.eigenvalues().size();
  std::vector<double> vals(static_cast<std::size_t>(n));
  CMatrix vecs(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    vals[static_cast<std::size_t>(i)] = solver.eigenvalues()(n - 1 - i);
    vecs.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  SpectralDecomp out{canonicalize(vals), std::move(vecs), {}};

  const double scale = out.eigenvalues[0];
  std::size_t first = 0;
  for (std::size_t i = 1; i <= out.eigenvalues.size(); ++i) {
    if (i == out.eigenvalues.size() ||
        out.eigenvalues[i - 1] - out.eigenvalues[i] >= kDegeneracyTol * scale) {
      out.blocks.emplace_back(first, i);
      first = i;
    }
  }
  return out;
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

DensityMatrix tensor(std::span<const DensityMatrix> states) {
  if (states.empty()) {
    throw Error(ErrorCode::EmptySet, "tensor product of no states");
  }
  CMatrix m = states.front().matrix();
  Dims dims = states.front().dims();
  for (const auto& s : states.subspan(1)) {
    m = kron(m, s.matrix());
    dims.insert(dims.end(), s.dims().begin(), s.dims().end());
  }
  return validate(m, std::move(dims));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const DensityMatrix pair[] = {a, b};
  return tensor(pair);
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            std::vector<std::size_t> keep) {
  const auto mask = keep_mask(rho.dims(), keep);
  const IndexSplit s = split_indices(rho.dims(), mask);
  const auto kd = static_cast<Eigen::Index>(s.kept_dim);
  CMatrix out = CMatrix::Zero(kd, kd);
  for (std::size_t t = 0; t < s.traced_dim; ++t) {
    const std::size_t* row = &s.table[t * s.kept_dim];
    for (Eigen::Index k1 = 0; k1 < kd; ++k1) {
      for (Eigen::Index k2 = 0; k2 < kd; ++k2) {
        out(k1, k2) += rho.matrix()(static_cast<Eigen::Index>(row[k1]),
                                    static_cast<Eigen::Index>(row[k2]));
      }
    }
  }
  Dims dims;
  for (std::size_t a : keep) dims.push_back(rho.dims()[a]);
  return validate(out, std::move(dims));
}

DensityMatrix partial_trace(const PureState& psi, std::vector<std::size_t> keep) {
  const auto mask = keep_mask(psi.dims(), keep);
  const IndexSplit s = split_indices(psi.dims(), mask);
  CMatrix m(static_cast<Eigen::Index>(s.kept_dim),
            static_cast<Eigen::Index>(s.traced_dim));
  for (std::size_t t = 0; t < s.traced_dim; ++t) {
    for (std::size_t k = 0; k < s.kept_dim; ++k) {
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(t)) =
          psi.vector()(static_cast<Eigen::Index>(s.table[t * s.kept_dim + k]));
    }
  }
  Dims dims;
  for (std::size_t a : keep) dims.push_back(psi.dims()[a]);
  return validate(m * m.adjoint(), std::move(dims));
}

std::vector<DensityMatrix> marginals(const DensityMatrix& rho) {
  std::vector<DensityMatrix> out;
  out.reserve(rho.num_subsystems());
  for (std::size_t a = 0; a < rho.num_subsystems(); ++a) {
    out.push_back(partial_trace(rho, {a}));
  }
  return out;
}

std::vector<DensityMatrix> marginals(const PureState& psi) {
  std::vector<DensityMatrix> out;
  out.reserve(psi.num_subsystems());
  for (std::size_t a = 0; a < psi.num_subsystems(); ++a) {
    out.push_back(partial_trace(psi, {a}));
  }
  return out;
}

DensityMatrix permute_subsystems(const DensityMatrix& rho,
                                 std::span<const std::size_t> order) {
  const Dims& dims = rho.dims();
  const std::size_t n = dims.size();
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted.size() != n || sorted[k] != k) {
      throw Error(ErrorCode::BadSubsystemIndex, "order is not a permutation");
    }
  }
  Dims new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = dims[order[k]];

  const std::size_t side = rho.dim();
  std::vector<std::size_t> remap(side);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t flat = 0; flat < side; ++flat) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < n; ++k) idx = idx * new_dims[k] + digits[order[k]];
    remap[flat] = idx;
    for (std::size_t a = n; a-- > 0;) {
      if (++digits[a] < dims[a]) break;
      digits[a] = 0;
    }
  }
  CMatrix out(rho.matrix().rows(), rho.matrix().cols());
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      out(static_cast<Eigen::Index>(remap[i]), static_cast<Eigen::Index>(remap[j])) =
          rho.matrix()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return validate(out, std::move(new_dims));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return shannon_entropy(spectral(rho).eigenvalues);
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states of dimension " + std::to_string(rho.dim()) + " and " +
                    std::to_string(sigma.dim()));
  }
  const SpectralDecomp r = spectral(rho);
  const SpectralDecomp s = spectral(sigma);
  // overlap(i, j) = |<r_i|s_j>|^2
  const Eigen::MatrixXd overlap =
      (r.eigenvectors.adjoint() * s.eigenvectors).cwiseAbs2();
  double value = 0.0;
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    const double ri = r.eigenvalues[i];
    if (ri <= 0.0) continue;
    double cross = 0.0;
    double outside = 0.0;
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      const double w = overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const double sj = s.eigenvalues[j];
      if (sj > kSupportTol) {
        cross += w * std::log2(sj);
      } else {
        outside += w;
      }
    }
    if (ri > kSupportTol && outside > kSupportTol) {
      return std::numeric_limits<double>::infinity();
    }
    value += ri * (std::log2(ri) - cross);
  }
  return value;
}

CMatrix embed_local(const CMatrix& op, const Dims& dims, std::size_t party) {
  if (party >= dims.size()) {
    throw Error(ErrorCode::BadSubsystemIndex,
                "subsystem " + std::to_string(party) + " out of range");
  }
  if (static_cast<std::size_t>(op.rows()) != dims[party] ||
      static_cast<std::size_t>(op.cols()) != dims[party]) {
    throw Error(ErrorCode::DimensionMismatch,
                "local operator does not match the subsystem dimension");
  }
  std::size_t left = 1;
  std::size_t right = 1;
  for (std::size_t a = 0; a < party; ++a) left *= dims[a];
  for (std::size_t a = party + 1; a < dims.size(); ++a) right *= dims[a];
  const CMatrix il = CMatrix::Identity(static_cast<Eigen::Index>(left),
                                       static_cast<Eigen::Index>(left));
  const CMatrix ir = CMatrix::Identity(static_cast<Eigen::Index>(right),
                                       static_cast<Eigen::Index>(right));
  return kron(il, kron(op, ir));
}

CVector apply_local(const CVector& psi, const Dims& dims, std::size_t party,
                    const CMatrix& op) {
  if (party >= dims.size()) {
    throw Error(ErrorCode::BadSubsystemIndex,
                "subsystem " + std::to_string(party) + " out of range");
  }
  const auto d = static_cast<Eigen::Index>(dims[party]);
  if (op.rows() != d || op.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch,
                "local operator does not match the subsystem dimension");
  }
  Eigen::Index left = 1;
  Eigen::Index right = 1;
  for (std::size_t a = 0; a < party; ++a) left *= static_cast<Eigen::Index>(dims[a]);
  for (std::size_t a = party + 1; a < dims.size(); ++a) {
    right *= static_cast<Eigen::Index>(dims[a]);
  }
  CVector out = CVector::Zero(psi.size());
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const cplx k = op(i, j);
        if (k == cplx(0.0, 0.0)) continue;
        out.segment((l * d + i) * right, right) += k * psi.segment((l * d + j) * right, right);
      }
    }
  }
  return out;
}

DensityMatrix pinch(const DensityMatrix& rho, std::span<const CMatrix> projectors,
                    std::size_t party) {
  if (party >= rho.num_subsystems()) {
    throw Error(ErrorCode::BadSubsystemIndex,
                "subsystem " + std::to_string(party) + " out of range");
  }
  const auto d = static_cast<Eigen::Index>(rho.dims()[party]);
  if (projectors.empty()) {
    throw Error(ErrorCode::ProjectorsNotResolution, "no projectors given");
  }
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& p : projectors) {
    if (p.rows() != d || p.cols() != d) {
      throw Error(ErrorCode::ProjectorsNotResolution,
                  "projector does not match the subsystem dimension");
    }
    if ((p - p.adjoint()).norm() > 1e-8 || (p * p - p).norm() > 1e-8) {
      throw Error(ErrorCode::ProjectorsNotResolution, "not an orthogonal projector");
    }
    sum += p;
  }
  if ((sum - CMatrix::Identity(d, d)).norm() > 1e-8) {
    throw Error(ErrorCode::ProjectorsNotResolution,
                "projectors do not sum to the identity");
  }
  CMatrix out = CMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
  for (const auto& p : projectors) {
    const CMatrix e = embed_local(p, rho.dims(), party);
    out += e * rho.matrix() * e;
  }
  return validate(out, rho.dims());
}

CMatrix partial_transpose(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) {
    throw Error(ErrorCode::WrongDims, "partial transpose needs dims (2, 2)");
  }
  CMatrix out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out(i * 2 + j, k * 2 + l) = rho.matrix()(i * 2 + l, k * 2 + j);
  return out;
}

}  // namespace corrcap
