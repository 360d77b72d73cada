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

#include "corrcap/composite.hpp"

#include <algorithm>
#include <numeric>

#include "corrcap/error.hpp"

namespace corrcap {

OptimalSeparable build_optimal_separable(std::span<const DensityMatrix> marginals) {
  if (marginals.size() < 2) {
    throw Error(ErrorCode::BadInput, "need at least two marginals");
  }
  std::vector<ProbVector> spectra;
  spectra.reserve(marginals.size());
  for (const auto& m : marginals) spectra.push_back(spectral(m).eigenvalues);
  ProbVector weights = infimum(spectra);

  std::vector<Ensemble> local;
  local.reserve(marginals.size());
  try {
    for (const auto& m : marginals) local.push_back(realize_ensemble(m, weights));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotMajorized) throw;
    throw Error(ErrorCode::Internal,
                std::string("infimum not majorized by a marginal: ") + e.what());
  }

  Ensemble product;
  for (const auto& m : marginals) product.dims.push_back(m.dim());
  product.weights = local.front().weights;
  for (std::size_t alpha = 0; alpha < product.weights.size(); ++alpha) {
    CVector v = local.front().vectors[alpha];
    for (std::size_t a = 1; a < local.size(); ++a) v = kron(v, local[a].vectors[alpha]);
    product.vectors.push_back(std::move(v));
  }
  DensityMatrix state = validate(product.density(), product.dims);
  return OptimalSeparable{std::move(state), std::move(weights), std::move(product),
                          std::move(local)};
}

CMatrix gram_matrix(const Ensemble& ensemble) {
  const auto n = static_cast<Eigen::Index>(ensemble.size());
  CMatrix g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const auto ua = static_cast<std::size_t>(a);
      const auto ub = static_cast<std::size_t>(b);
      g(a, b) = std::sqrt(ensemble.weights[ua] * ensemble.weights[ub]) *
                ensemble.vectors[ua].dot(ensemble.vectors[ub]);
    }
  }
  return g;
}

double max_offdiag_abs(const CMatrix& m) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j) best = std::max(best, std::abs(m(i, j)));
    }
  }
  return best;
}

double correlation_information(const DensityMatrix& rho) {
  double sum = 0.0;
  for (const auto& m : marginals(rho)) sum += von_neumann_entropy(m);
  return sum - von_neumann_entropy(rho);
}

PartitionCorrelation partition_correlation(
    const DensityMatrix& rho, const std::vector<std::vector<std::size_t>>& partition) {
  const std::size_t n = rho.num_subsystems();
  std::vector<int> seen(n, 0);
  for (const auto& block : partition) {
    if (block.empty()) throw Error(ErrorCode::BadPartition, "empty block");
    for (std::size_t a : block) {
      if (a >= n) {
        throw Error(ErrorCode::BadPartition,
                    "subsystem " + std::to_string(a) + " out of range");
      }
      ++seen[a];
    }
  }
  if (partition.empty() ||
      std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw Error(ErrorCode::BadPartition,
                "blocks must cover every subsystem exactly once");
  }

  PartitionCorrelation out;
  std::vector<DensityMatrix> blocks;
  std::vector<std::size_t> order;
  for (auto block : partition) {
    std::sort(block.begin(), block.end());
    blocks.push_back(partial_trace(rho, block));
    out.block_terms.push_back(correlation_information(blocks.back()));
    order.insert(order.end(), block.begin(), block.end());
  }
  out.residual = relative_entropy(permute_subsystems(rho, order), tensor(blocks));
  return out;
}

double max_separable_correlation(std::span<const ProbVector> spectra) {
  double sum = 0.0;
  for (const auto& s : spectra) sum += shannon_entropy(s);
  return sum - shannon_entropy(infimum(spectra));
}

namespace {

// Operators B_lk(i, j) = rho((i, l), (j, k)) on subsystem `party`, with l, k
// running over the remaining subsystems. rho is diagonal in a product basis
// exactly when, for every party, these form a commuting family.
bool conditional_operators_commute(const DensityMatrix& rho, std::size_t party) {
  std::vector<std::size_t> order{party};
  for (std::size_t a = 0; a < rho.num_subsystems(); ++a) {
    if (a != party) order.push_back(a);
  }
  const CMatrix m = permute_subsystems(rho, order).matrix();
  const auto d = static_cast<Eigen::Index>(rho.dims()[party]);
  const Eigen::Index rest = m.rows() / d;

  std::vector<CMatrix> family;
  family.reserve(static_cast<std::size_t>(rest * rest));
  for (Eigen::Index l = 0; l < rest; ++l) {
    for (Eigen::Index k = 0; k < rest; ++k) {
      CMatrix b(d, d);
      for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) b(i, j) = m(i * rest + l, j * rest + k);
      }
      if (b.norm() > kCommutatorTol) family.push_back(std::move(b));
    }
  }
  for (std::size_t x = 0; x < family.size(); ++x) {
    for (std::size_t y = x + 1; y < family.size(); ++y) {
      if ((family[x] * family[y] - family[y] * family[x]).norm() > kCommutatorTol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_classically_correlated(const DensityMatrix& rho) {
  const std::size_t n = rho.num_subsystems();
  DensityMatrix pinched = rho;
  std::vector<bool> degenerate(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    const SpectralDecomp sd = spectral(partial_trace(rho, {a}));
    std::vector<CMatrix> projectors;
    for (std::size_t b = 0; b < sd.blocks.size(); ++b) {
      projectors.push_back(sd.block_projector(b));
      if (sd.blocks[b].second - sd.blocks[b].first > 1) degenerate[a] = true;
    }
    pinched = pinch(pinched, projectors, a);
  }
  if (frobenius_distance(pinched.matrix(), rho.matrix()) > kPinchTol) return false;

  for (std::size_t a = 0; a < n; ++a) {
    if (degenerate[a] && !conditional_operators_commute(rho, a)) return false;
  }
  return true;
}

std::vector<double> JointPmf::marginal(std::size_t variable) const {
  if (variable >= shape.size()) {
    throw Error(ErrorCode::BadSubsystemIndex,
                "variable " + std::to_string(variable) + " out of range");
  }
  std::size_t right = 1;
  for (std::size_t a = variable + 1; a < shape.size(); ++a) right *= shape[a];
  const std::size_t d = shape[variable];
  std::vector<double> out(d, 0.0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    out[(flat / right) % d] += values[flat];
  }
  return out;
}

DensityMatrix JointPmf::density() const {
  if (values.size() > kDenseLimit) {
    throw Error(ErrorCode::TooLarge, "diagonal state too large for a dense matrix");
  }
  Eigen::VectorXd diag(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) {
    diag(static_cast<Eigen::Index>(k)) = values[k];
  }
  return validate(diag.cast<cplx>().asDiagonal().toDenseMatrix(), shape);
}

double classical_correlation(const JointPmf& pmf) {
  double sum = 0.0;
  for (std::size_t a = 0; a < pmf.shape.size(); ++a) {
    sum += shannon_entropy(pmf.marginal(a));
  }
  return sum - shannon_entropy(pmf.values);
}

double correlation_information(const PureState& psi) {
  double sum = 0.0;
  for (const auto& m : marginals(psi)) sum += von_neumann_entropy(m);
  return sum;
}

std::optional<bool> two_qubit_ppt(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) return std::nullopt;
  const RVector eig = hermitian_eigenvalues(partial_transpose(rho));
  return eig(eig.size() - 1) >= -kPptTol;
}

CompositeReport analyze(const DensityMatrix& rho) {
  CompositeReport r;
  r.spectrum = spectral(rho).eigenvalues;
  double marginal_entropy = 0.0;
  for (const auto& m : marginals(rho)) {
    r.marginal_spectra.push_back(spectral(m).eigenvalues);
    marginal_entropy += shannon_entropy(r.marginal_spectra.back());
  }
  r.correlation_bits = marginal_entropy - shannon_entropy(r.spectrum);
  r.is_classical = is_classically_correlated(rho);
  r.two_qubit_ppt = two_qubit_ppt(rho);
  return r;
}

CompositeReport analyze(const OptimalSeparable& built) {
  CompositeReport r = analyze(built.state);
  r.gram_offdiag_max = max_offdiag_abs(gram_matrix(built.ensemble));
  return r;
}

}  // namespace corrcap
