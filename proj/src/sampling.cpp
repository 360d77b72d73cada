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

#include "corrcap/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "corrcap/error.hpp"

namespace corrcap {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CVector gaussian_vector(Rng& rng, std::size_t n) {
  CVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  return v;
}

CVector random_unit_vector(Rng& rng, std::size_t n) {
  CVector v = gaussian_vector(rng, n);
  v.normalize();
  return v;
}

}  // namespace

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::size_t Rng::index(std::size_t n) {
  const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return std::min(k, n - 1);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) * std::numbers::sqrt2 * 0.5;
}

SeededStream SeededStream::child(std::uint64_t index) const {
  auto p = path_;
  p.push_back(index);
  return SeededStream(seed_, std::move(p));
}

std::uint64_t SeededStream::key() const {
  std::uint64_t h = splitmix64(seed_);
  for (std::uint64_t p : path_) h = splitmix64(h ^ splitmix64(p + 0x632be59bd9b4e019ULL));
  return h;
}

PureState haar_pure(const Dims& dims, const SeededStream& stream) {
  const std::size_t n = total_dim(dims);
  if (n > kMaxSampledDim) {
    throw Error(ErrorCode::TooLarge, "state dimension " + std::to_string(n));
  }
  Rng rng = stream.rng();
  return PureState::normalized(gaussian_vector(rng, n), dims);
}

CMatrix haar_unitary(std::size_t n, const SeededStream& stream) {
  Rng rng = stream.rng();
  const auto m = static_cast<Eigen::Index>(n);
  CMatrix z(m, m);
  for (Eigen::Index j = 0; j < m; ++j)
    for (Eigen::Index i = 0; i < m; ++i) z(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < m; ++j) {
    const cplx d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= a > 0.0 ? d / a : cplx(1.0, 0.0);
  }
  return q;
}

DensityMatrix random_density(std::size_t dim, std::size_t rank,
                             const SeededStream& stream) {
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::BadRank, "rank " + std::to_string(rank) +
                                        " not in [1, " + std::to_string(dim) + "]");
  }
  Rng rng = stream.rng();
  const auto d = static_cast<Eigen::Index>(dim);
  const auto k = static_cast<Eigen::Index>(rank);
  CMatrix g(d, k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index i = 0; i < d; ++i) g(i, j) = rng.complex_normal();
  // tr_2 |g><g| for the vector g on dim x rank.
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return validate(rho, {dim});
}

DensityMatrix random_separable(const Dims& dims, std::size_t terms,
                               const SeededStream& stream) {
  if (terms < 1) throw Error(ErrorCode::BadInput, "need at least one term");
  Rng rng = stream.rng();
  std::vector<double> w(terms);
  for (double& x : w) x = -std::log(1.0 - rng.uniform());
  double total = 0.0;
  for (double x : w) total += x;

  const auto n = static_cast<Eigen::Index>(total_dim(dims));
  CMatrix rho = CMatrix::Zero(n, n);
  for (std::size_t t = 0; t < terms; ++t) {
    CVector v = random_unit_vector(rng, dims.front());
    for (std::size_t a = 1; a < dims.size(); ++a) {
      v = kron(v, random_unit_vector(rng, dims[a]));
    }
    rho += (w[t] / total) * v * v.adjoint();
  }
  return validate(rho, dims);
}

CMatrix random_effect(std::size_t dim, const SeededStream& stream) {
  const CMatrix v = haar_unitary(dim, stream.child(0));
  Rng rng = stream.child(1).rng();
  Eigen::VectorXd u(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = rng.uniform();
  return v * u.cast<cplx>().asDiagonal() * v.adjoint();
}

ProbVector random_spectrum(std::size_t d, const SeededStream& stream) {
  Rng rng = stream.rng();
  std::vector<double> w(d);
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  for (double& x : w) x /= total;
  return canonicalize(w);
}

std::size_t default_rectangle_moves(std::span<const ProbVector> marginal_spectra) {
  std::size_t cells = 1;
  for (const auto& m : marginal_spectra) cells *= m.size();
  return 50 * cells;
}

JointPmf random_classical_joint(std::span<const ProbVector> marginal_spectra,
                                std::size_t iterations, const SeededStream& stream) {
  JointPmf pmf;
  for (const auto& m : marginal_spectra) pmf.shape.push_back(m.size());
  const std::size_t n = pmf.shape.size();
  if (n == 0) throw Error(ErrorCode::EmptySet, "no marginals given");
  const std::size_t cells = total_dim(pmf.shape);
  if (cells > kMaxSampledDim) throw Error(ErrorCode::TooLarge, "joint table too large");

  std::vector<std::size_t> stride(n, 1);
  for (std::size_t a = n - 1; a-- > 0;) stride[a] = stride[a + 1] * pmf.shape[a + 1];

  pmf.values.assign(cells, 1.0);
  for (std::size_t flat = 0; flat < cells; ++flat) {
    for (std::size_t a = 0; a < n; ++a) {
      pmf.values[flat] *= marginal_spectra[a][(flat / stride[a]) % pmf.shape[a]];
    }
  }
  if (n < 2) return pmf;

  Rng rng = stream.rng();
  auto distinct_pair = [&rng](std::size_t size) {
    const std::size_t x = rng.index(size);
    std::size_t y = rng.index(size - 1);
    if (y >= x) ++y;
    return std::pair{x, y};
  };
  for (std::size_t it = 0; it < iterations; ++it) {
    const auto [a, b] = distinct_pair(n);
    if (pmf.shape[a] < 2 || pmf.shape[b] < 2) continue;
    const auto [i0, i1] = distinct_pair(pmf.shape[a]);
    const auto [j0, j1] = distinct_pair(pmf.shape[b]);
    std::size_t base = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != a && c != b) base += rng.index(pmf.shape[c]) * stride[c];
    }
    const std::size_t c00 = base + i0 * stride[a] + j0 * stride[b];
    const std::size_t c11 = base + i1 * stride[a] + j1 * stride[b];
    const std::size_t c01 = base + i0 * stride[a] + j1 * stride[b];
    const std::size_t c10 = base + i1 * stride[a] + j0 * stride[b];
    const double lo = -std::min(pmf.values[c00], pmf.values[c11]);
    const double hi = std::min(pmf.values[c01], pmf.values[c10]);
    const double delta = lo + (hi - lo) * rng.uniform();
    pmf.values[c00] = std::max(pmf.values[c00] + delta, 0.0);
    pmf.values[c11] = std::max(pmf.values[c11] + delta, 0.0);
    pmf.values[c01] = std::max(pmf.values[c01] - delta, 0.0);
    pmf.values[c10] = std::max(pmf.values[c10] - delta, 0.0);
  }
  return pmf;
}

}  // namespace corrcap
