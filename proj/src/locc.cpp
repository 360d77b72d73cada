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

#include "corrcap/locc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "corrcap/error.hpp"
#include "corrcap/parallel.hpp"

namespace corrcap {

namespace {

constexpr double kDropProbability = 1e-12;
constexpr double kEffectTol = 1e-10;
constexpr double kUnitaryTol = 1e-10;

struct MarginalData {
  std::vector<ProbVector> spectra;
  std::vector<double> entropies;
};

MarginalData marginal_data(const PureState& psi) {
  if (psi.num_subsystems() < 2) {
    throw Error(ErrorCode::BadInput, "need at least two subsystems");
  }
  MarginalData m;
  for (const auto& rho : marginals(psi)) {
    m.spectra.push_back(spectral(rho).eigenvalues);
    m.entropies.push_back(shannon_entropy(m.spectra.back()));
  }
  return m;
}

double sum_minus_max(const MarginalData& m) {
  const double sum = std::accumulate(m.entropies.begin(), m.entropies.end(), 0.0);
  const double max = *std::max_element(m.entropies.begin(), m.entropies.end());
  const double f = sum - max;

  double min_without = std::numeric_limits<double>::infinity();
  for (std::size_t b = 0; b < m.entropies.size(); ++b) {
    double s = 0.0;
    for (std::size_t a = 0; a < m.entropies.size(); ++a) {
      if (a != b) s += m.entropies[a];
    }
    min_without = std::min(min_without, s);
  }
  if (std::abs(f - min_without) > kMonotoneTol) {
    throw Error(ErrorCode::Internal, "sum-minus-max and min-of-partial-sums disagree");
  }
  return f;
}

double capacity(const MarginalData& m) {
  const double sum = std::accumulate(m.entropies.begin(), m.entropies.end(), 0.0);
  return sum - shannon_entropy(infimum(m.spectra));
}

bool all_qubits(const PureState& psi) {
  return std::all_of(psi.dims().begin(), psi.dims().end(),
                     [](std::size_t d) { return d == 2; });
}

void check_unitary(const CMatrix& u, Eigen::Index d) {
  if (u.rows() != d || u.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "unitary does not match the subsystem");
  }
  if ((u.adjoint() * u - CMatrix::Identity(d, d)).norm() > kUnitaryTol) {
    throw Error(ErrorCode::NotUnitary, "U^dagger U differs from the identity");
  }
}

}  // namespace

double entropy_sum_minus_max(const PureState& psi) {
  return sum_minus_max(marginal_data(psi));
}

double marginal_capacity(const PureState& psi) {
  return capacity(marginal_data(psi));
}

double separable_capacity(const PureState& psi) {
  if (!all_qubits(psi)) throw Error(ErrorCode::NotQubits, "every subsystem must be a qubit");
  const MarginalData m = marginal_data(psi);
  const double c = capacity(m);
  if (std::abs(c - sum_minus_max(m)) > kMonotoneTol) {
    throw Error(ErrorCode::Internal, "qubit capacity differs from sum-minus-max");
  }
  return c;
}

MeasuredEnsemble local_measure(const PureState& psi, std::size_t party,
                               const CMatrix& effect, const CMatrix& u0,
                               const CMatrix& u1) {
  if (party >= psi.num_subsystems()) {
    throw Error(ErrorCode::BadSubsystemIndex,
                "subsystem " + std::to_string(party) + " out of range");
  }
  const auto d = static_cast<Eigen::Index>(psi.dims()[party]);
  if (effect.rows() != d || effect.cols() != d) {
    throw Error(ErrorCode::DimensionMismatch, "effect does not match the subsystem");
  }
  if ((effect - effect.adjoint()).cwiseAbs().maxCoeff() > kEffectTol) {
    throw Error(ErrorCode::BadEffect, "effect is not Hermitian");
  }
  check_unitary(u0, d);
  check_unitary(u1, d);

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (effect + effect.adjoint()));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolverFailure, "eigensolver did not converge");
  }
  const RVector& e = solver.eigenvalues();
  if (e.minCoeff() < -kEffectTol || e.maxCoeff() > 1.0 + kEffectTol) {
    std::ostringstream os;
    os << "effect eigenvalues span [" << e.minCoeff() << ", " << e.maxCoeff() << "]";
    throw Error(ErrorCode::BadEffect, os.str());
  }
  const RVector clipped = e.cwiseMax(0.0).cwiseMin(1.0);
  const CMatrix& v = solver.eigenvectors();
  const CMatrix sqrt_e = v * clipped.cwiseSqrt().cast<cplx>().asDiagonal() * v.adjoint();
  const CMatrix sqrt_rest =
      v * (RVector::Ones(d) - clipped).cwiseSqrt().cast<cplx>().asDiagonal() * v.adjoint();
  const CMatrix k0 = u0 * sqrt_e;
  const CMatrix k1 = u1 * sqrt_rest;
  if ((k0.adjoint() * k0 + k1.adjoint() * k1 - CMatrix::Identity(d, d)).norm() > 1e-9) {
    throw Error(ErrorCode::Internal, "Kraus operators are not complete");
  }

  MeasuredEnsemble out;
  for (const CMatrix* k : {&k0, &k1}) {
    CVector branch = apply_local(psi.vector(), psi.dims(), party, *k);
    const double p = branch.squaredNorm();
    if (p < kDropProbability) continue;
    out.outcomes.push_back(
        Outcome{p, PureState::normalized(std::move(branch), psi.dims())});
  }
  return out;
}

TrialRecord measurement_trial(const PureState& psi, const SeededStream& stream) {
  TrialRecord r;
  r.all_qubits = all_qubits(psi);
  r.party = stream.child(0).rng().index(psi.num_subsystems());
  const std::size_t d = psi.dims()[r.party];
  const MeasuredEnsemble m =
      local_measure(psi, r.party, random_effect(d, stream.child(1)),
                    haar_unitary(d, stream.child(2)), haar_unitary(d, stream.child(3)));
  r.outcomes = m.outcomes.size();

  const MarginalData before = marginal_data(psi);
  r.f_before = sum_minus_max(before);
  const double cap_before = capacity(before);
  r.bound_margin = r.f_before - cap_before;
  if (r.all_qubits) r.identity_gap = std::abs(cap_before - r.f_before);

  const std::size_t n = psi.num_subsystems();
  std::vector<double> avg_entropy(n, 0.0);
  double cap_after = 0.0;
  for (const auto& o : m.outcomes) {
    const MarginalData after = marginal_data(o.state);
    const double f = sum_minus_max(after);
    const double cap = capacity(after);
    r.f_after += o.probability * f;
    cap_after += o.probability * cap;
    for (std::size_t a = 0; a < n; ++a) avg_entropy[a] += o.probability * after.entropies[a];
    r.bound_margin = std::min(r.bound_margin, f - cap);
    if (r.all_qubits) r.identity_gap = std::max(r.identity_gap, std::abs(cap - f));
  }
  r.margin = r.f_before - r.f_after;
  r.capacity_margin = cap_before - cap_after;
  r.entropy_margin = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    r.entropy_margin = std::min(r.entropy_margin, before.entropies[a] - avg_entropy[a]);
  }
  return r;
}

MonotonicityReport monotonicity_trial(const PureState& psi, std::size_t trials,
                                      std::uint64_t seed, bool parallel) {
  if (trials < 1) throw Error(ErrorCode::BadInput, "need at least one trial");
  const SeededStream root(seed);
  const auto records = run_indexed<TrialRecord>(
      trials, parallel, [&](std::size_t t) { return measurement_trial(psi, root.child(t)); });

  MonotonicityReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.all_qubits = all_qubits(psi);
  double margin_sum = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const TrialRecord& r = records[t];
    margin_sum += r.margin;
    rep.max_violation = std::max(rep.max_violation, -r.margin);
    if (r.margin < -kMonotoneTol) rep.violations.push_back({t, r.party, r.margin});
    rep.entropy_max_violation = std::max(rep.entropy_max_violation, -r.entropy_margin);
    rep.capacity_max_violation = std::max(rep.capacity_max_violation, -r.capacity_margin);
    if (r.capacity_margin < -kMonotoneTol) ++rep.capacity_violations;
    rep.identity_max_gap = std::max(rep.identity_max_gap, r.identity_gap);
  }
  rep.mean_margin = margin_sum / static_cast<double>(trials);
  return rep;
}

}  // namespace corrcap
