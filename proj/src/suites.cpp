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

#include "corrcap/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "corrcap/composite.hpp"
#include "corrcap/error.hpp"
#include "corrcap/locc.hpp"
#include "corrcap/parallel.hpp"
#include "corrcap/sampling.hpp"
#include "corrcap/twoqubit.hpp"

namespace corrcap {

namespace {

constexpr double kSpectrumTol = 1e-8;
constexpr double kMarginalTol = 1e-9;
constexpr double kGramTol = 1e-8;
constexpr double kCapacityTol = 1e-8;

// Per-trial outcome shared by the randomized suites.
struct Check {
  bool failed = false;
  double violation = 0.0;
  std::vector<double> metrics;
};

SuiteSummary aggregate(std::string name, std::uint64_t seed, const std::vector<Check>& checks,
                       const std::vector<std::string>& metric_names) {
  SuiteSummary s;
  s.suite = std::move(name);
  s.trials = checks.size();
  s.seed = seed;
  std::vector<double> worst(metric_names.size(), 0.0);
  for (const auto& c : checks) {
    if (c.failed) ++s.failures;
    s.max_violation = std::max(s.max_violation, c.violation);
    for (std::size_t k = 0; k < worst.size() && k < c.metrics.size(); ++k) {
      worst[k] = std::max(worst[k], c.metrics[k]);
    }
  }
  for (std::size_t k = 0; k < worst.size(); ++k) {
    s.metrics.emplace_back(metric_names[k], worst[k]);
  }
  return s;
}

std::vector<ProbVector> spectra_of(const std::vector<DensityMatrix>& states) {
  std::vector<ProbVector> out;
  for (const auto& s : states) out.push_back(spectral(s).eigenvalues);
  return out;
}

double larger_eigenvalue(const DensityMatrix& qubit) {
  return spectral(qubit).eigenvalues[0];
}

// ---- lattice oracle -------------------------------------------------------

constexpr int kGridLen = 4;
using Grid = std::array<long, kGridLen>;

std::vector<Grid> sorted_compositions(long total) {
  std::vector<Grid> out;
  for (long a = total; a >= 0; --a)
    for (long b = std::min(a, total - a); b >= 0; --b)
      for (long c = std::min(b, total - a - b); c >= 0; --c) {
        const long d = total - a - b - c;
        if (d <= c) out.push_back(Grid{a, b, c, d});
      }
  return out;
}

Grid prefix(const Grid& g) {
  Grid p{};
  long acc = 0;
  for (int j = 0; j < kGridLen; ++j) p[j] = acc += g[j];
  return p;
}

bool below(const Grid& px, const Grid& py) {
  for (int j = 0; j < kGridLen; ++j) {
    if (px[j] > py[j]) return false;
  }
  return true;
}

ProbVector to_distribution(const Grid& g, long denom) {
  std::vector<double> v;
  for (long x : g) v.push_back(static_cast<double>(x) / static_cast<double>(denom));
  while (v.size() > 1 && v.back() == 0.0) v.pop_back();
  return canonicalize(v);
}

// Deviation, in probability units, between prefix sums of `v` and the
// integer prefix sums `target` on the grid with denominator `denom`.
double prefix_deviation(const ProbVector& v, const Grid& target, long denom) {
  const auto p = v.prefix_sums(kGridLen);
  double dev = 0.0;
  for (int j = 0; j < kGridLen; ++j) {
    dev = std::max(dev, std::abs(p[static_cast<std::size_t>(j)] -
                                 static_cast<double>(target[j]) / static_cast<double>(denom)));
  }
  return v.size() > static_cast<std::size_t>(kGridLen) ? 1.0 : dev;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "theorem1", "nielsen-kempe", "hierarchy",       "locc",
      "corollary3", "lattice-oracle", "conjecture-probe"};
  return names;
}

std::size_t default_trials(std::string_view suite) {
  if (suite == "theorem1") return 500;
  if (suite == "conjecture-probe") return 200;
  return 1000;
}

SuiteSummary run_suite(std::string_view suite, std::size_t trials, std::uint64_t seed,
                       bool parallel) {
  if (suite == "theorem1") return theorem1_suite(trials, seed, parallel);
  if (suite == "nielsen-kempe") return nielsen_kempe_suite(trials, seed, parallel);
  if (suite == "hierarchy") return hierarchy_suite(trials, seed, parallel);
  if (suite == "locc") return locc_suite(trials, seed, parallel);
  if (suite == "corollary3") return corollary3_suite(trials, seed, parallel);
  if (suite == "lattice-oracle") return lattice_oracle_suite(parallel);
  if (suite == "conjecture-probe") return conjecture_probe_suite(trials, seed, parallel);
  throw Error(ErrorCode::BadInput, "unknown suite '" + std::string(suite) + "'");
}

SuiteSummary theorem1_suite(std::size_t trials, std::uint64_t seed, bool parallel) {
  const SeededStream root(seed);
  auto checks = run_indexed<Check>(trials, parallel, [&](std::size_t t) {
    const SeededStream s = root.child(t);
    Rng rng = s.child(0).rng();
    const std::size_t parties = 2 + rng.index(2);
    std::vector<DensityMatrix> margs;
    for (std::size_t a = 0; a < parties; ++a) {
      const std::size_t dim = 2 + rng.index(2);
      const std::size_t rank = 1 + rng.index(dim);
      margs.push_back(random_density(dim, rank, s.child(1 + a)));
    }
    const OptimalSeparable built = build_optimal_separable(margs);

    const ProbVector spec = spectral(built.state).eigenvalues;
    const std::size_t d = std::max(spec.size(), built.weights.size());
    double spec_dev = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      spec_dev = std::max(spec_dev, std::abs(spec.padded(i) - built.weights.padded(i)));
    }
    double marg_dev = 0.0;
    for (std::size_t a = 0; a < parties; ++a) {
      marg_dev = std::max(marg_dev, frobenius_distance(partial_trace(built.state, {a}).matrix(),
                                                       margs[a].matrix()));
    }
    const double gram = max_offdiag_abs(gram_matrix(built.ensemble));
    Check c;
    c.failed = spec_dev > kSpectrumTol || marg_dev > kMarginalTol || gram >= kGramTol;
    c.violation = std::max({spec_dev, marg_dev, gram});
    c.metrics = {spec_dev, marg_dev, gram};
    return c;
  });
  return aggregate("theorem1", seed, checks,
                   {"max_spectrum_deviation", "max_marginal_deviation", "max_gram_offdiag"});
}

SuiteSummary nielsen_kempe_suite(std::size_t trials, std::uint64_t seed, bool parallel) {
  static const std::array<Dims, 3> kDims{Dims{2, 2}, Dims{2, 3}, Dims{3, 3}};
  const SeededStream root(seed);
  auto checks = run_indexed<Check>(trials, parallel, [&](std::size_t t) {
    const SeededStream s = root.child(t);
    const std::size_t terms = 1 + s.child(0).rng().index(8);
    const DensityMatrix rho = random_separable(kDims[t % kDims.size()], terms, s.child(1));
    const ProbVector lam = spectral(rho).eigenvalues;
    const auto margs = spectra_of(marginals(rho));
    double excess = majorization_excess(lam, infimum(margs));
    for (const auto& m : margs) excess = std::max(excess, majorization_excess(lam, m));
    Check c;
    c.failed = excess > kPrefixTol;
    c.violation = excess;
    c.metrics = {excess};
    return c;
  });
  return aggregate("nielsen-kempe", seed, checks, {"max_prefix_excess"});
}

SuiteSummary hierarchy_suite(std::size_t trials, std::uint64_t seed, bool parallel) {
  const SeededStream root(seed);
  auto checks = run_indexed<Check>(trials, parallel, [&](std::size_t t) {
    const SeededStream s = root.child(t);
    Rng rng = s.child(0).rng();

    // Closed-form chain, and the constructed states carry those spectra.
    const QubitPair pair = QubitPair::make(0.5 + 0.5 * rng.uniform(), 0.5 + 0.5 * rng.uniform());
    const Hierarchy h = hierarchy(pair);
    const double chain = std::max(majorization_excess(h.classical, h.separable),
                                  majorization_excess(h.separable, h.entangled));
    double formula_dev = 0.0;
    const std::pair<DensityMatrix, const ProbVector*> built[] = {
        {sigma_classical(pair), &h.classical},
        {sigma_separable(pair), &h.separable},
        {sigma_entangled(pair), &h.entangled}};
    for (const auto& [state, expected] : built) {
      const ProbVector got = spectral(state).eigenvalues;
      for (std::size_t i = 0; i < 4; ++i) {
        formula_dev = std::max(formula_dev, std::abs(got.padded(i) - expected->padded(i)));
      }
    }

    // Any two-qubit state is majorized by the entangled bound of its marginals.
    const std::size_t rank = 1 + rng.index(4);
    const DensityMatrix rho =
        validate(random_density(4, rank, s.child(1)).matrix(), {2, 2});
    const auto rho_margs = marginals(rho);
    const QubitPair rho_pair =
        QubitPair::make(larger_eigenvalue(rho_margs[0]), larger_eigenvalue(rho_margs[1]));
    const double entangled_excess =
        majorization_excess(spectral(rho).eigenvalues, hierarchy(rho_pair).entangled);

    // Separable states: bounded by the separable optimum of their marginals.
    const DensityMatrix sep = random_separable({2, 2}, 1 + rng.index(8), s.child(2));
    const auto sep_margs = marginals(sep);
    const QubitPair sep_pair =
        QubitPair::make(larger_eigenvalue(sep_margs[0]), larger_eigenvalue(sep_margs[1]));
    const double separable_excess =
        majorization_excess(spectral(sep).eigenvalues, hierarchy(sep_pair).separable);

    // Classical joints with fixed marginals: bounded by the classical optimum.
    const double qa = 0.5 + 0.5 * rng.uniform();
    const double qb = 0.5 + 0.5 * rng.uniform();
    const std::vector<ProbVector> cm{canonicalize({qa, 1.0 - qa}), canonicalize({qb, 1.0 - qb})};
    const JointPmf joint =
        random_classical_joint(cm, default_rectangle_moves(cm), s.child(3));
    const double classical_excess = majorization_excess(
        canonicalize(joint.values), hierarchy(QubitPair::make(qa, qb)).classical);

    Check c;
    const double excess =
        std::max({chain, entangled_excess, separable_excess, classical_excess});
    c.failed = excess > kPrefixTol || formula_dev > 1e-10;
    c.violation = std::max(excess, formula_dev);
    c.metrics = {chain, entangled_excess, separable_excess, classical_excess, formula_dev};
    return c;
  });
  return aggregate("hierarchy", seed, checks,
                   {"chain_excess", "random_state_excess", "separable_excess",
                    "classical_joint_excess", "closed_form_spectrum_deviation"});
}

SuiteSummary locc_suite(std::size_t trials, std::uint64_t seed, bool parallel) {
  const SeededStream root(seed);
  auto checks = run_indexed<Check>(trials, parallel, [&](std::size_t t) {
    const SeededStream s = root.child(t);
    const Dims dims(3 + t % 2, 2);
    const PureState psi = haar_pure(dims, s.child(0));
    const TrialRecord r = measurement_trial(psi, s.child(1));
    Check c;
    const double viol = std::max({0.0, -r.margin, -r.entropy_margin, -r.capacity_margin,
                                  r.identity_gap});
    c.failed = r.margin < -kMonotoneTol || r.entropy_margin < -kMonotoneTol ||
               r.capacity_margin < -kMonotoneTol || r.identity_gap > kMonotoneTol;
    c.violation = viol;
    c.metrics = {-r.margin, -r.entropy_margin, -r.capacity_margin, r.identity_gap};
    return c;
  });
  return aggregate("locc", seed, checks,
                   {"max_f_increase", "max_marginal_entropy_increase",
                    "max_capacity_increase", "max_capacity_identity_gap"});
}

SuiteSummary corollary3_suite(std::size_t trials, std::uint64_t seed, bool parallel) {
  const SeededStream root(seed);
  auto checks = run_indexed<Check>(trials, parallel, [&](std::size_t t) {
    const SeededStream s = root.child(t);
    const Dims dims(2 + t % 4, 2);
    const PureState psi = haar_pure(dims, s.child(0));
    const double cap = separable_capacity(psi);
    const double f = entropy_sum_minus_max(psi);

    // The capacity is realized by the least disordered separable composite.
    const OptimalSeparable built = build_optimal_separable(marginals(psi));
    const double realized_gap = std::abs(correlation_information(built.state) - cap);

    const TrialRecord r = measurement_trial(psi, s.child(1));
    Check c;
    const double identity = std::max(std::abs(cap - f), r.identity_gap);
    c.failed = identity > kMonotoneTol || r.capacity_margin < -kMonotoneTol ||
               realized_gap > kCapacityTol;
    c.violation = std::max({identity, -r.capacity_margin, realized_gap, 0.0});
    c.metrics = {identity, -r.capacity_margin, realized_gap};
    return c;
  });
  return aggregate("corollary3", seed, checks,
                   {"max_identity_gap", "max_capacity_increase", "max_realized_gap"});
}

SuiteSummary lattice_oracle_suite(bool parallel) {
  constexpr long kInputDenom = 12;
  // Hull interpolation spans at most 4 steps, so suprema live on 1/144.
  constexpr long kSupDenom = 144;
  const auto inputs = sorted_compositions(kInputDenom);
  const auto fine = sorted_compositions(kSupDenom);

  std::vector<Grid> coarse_prefix;
  for (const auto& g : inputs) coarse_prefix.push_back(prefix(g));
  std::vector<Grid> fine_prefix;
  for (const auto& g : fine) fine_prefix.push_back(prefix(g));
  std::vector<ProbVector> dists;
  for (const auto& g : inputs) dists.push_back(to_distribution(g, kInputDenom));

  std::vector<std::vector<std::size_t>> sets;
  const std::size_t n = inputs.size();
  for (std::size_t i = 0; i < n; ++i) {
    sets.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j) {
      sets.push_back({i, j});
      for (std::size_t k = j + 1; k < n; ++k) sets.push_back({i, j, k});
    }
  }

  auto checks = run_indexed<Check>(sets.size(), parallel, [&](std::size_t t) {
    const auto& set = sets[t];
    Check c;

    // Greatest lower bound on the 1/12 grid.
    Grid glb{};
    bool any_lower = false;
    for (const auto& cand : coarse_prefix) {
      bool lower = true;
      for (std::size_t m : set) lower = lower && below(cand, coarse_prefix[m]);
      if (!lower) continue;
      for (int j = 0; j < kGridLen; ++j) glb[j] = any_lower ? std::max(glb[j], cand[j]) : cand[j];
      any_lower = true;
    }
    const bool glb_attained =
        std::find(coarse_prefix.begin(), coarse_prefix.end(), glb) != coarse_prefix.end();

    // Least upper bound on the 1/144 grid.
    Grid lub{};
    bool any_upper = false;
    for (const auto& cand : fine_prefix) {
      bool upper = true;
      for (std::size_t m : set) {
        Grid scaled = coarse_prefix[m];
        for (auto& x : scaled) x *= kSupDenom / kInputDenom;
        upper = upper && below(scaled, cand);
      }
      if (!upper) continue;
      for (int j = 0; j < kGridLen; ++j) lub[j] = any_upper ? std::min(lub[j], cand[j]) : cand[j];
      any_upper = true;
    }
    const bool lub_attained =
        std::find(fine_prefix.begin(), fine_prefix.end(), lub) != fine_prefix.end();

    std::vector<ProbVector> members;
    for (std::size_t m : set) members.push_back(dists[m]);
    const double inf_dev = prefix_deviation(infimum(members), glb, kInputDenom);
    const double sup_dev = prefix_deviation(supremum(members), lub, kSupDenom);
    c.failed = !glb_attained || !lub_attained || inf_dev > 1e-9 || sup_dev > 1e-9;
    c.violation = std::max(inf_dev, sup_dev);
    c.metrics = {inf_dev, sup_dev};
    return c;
  });
  return aggregate("lattice-oracle", 0, checks, {"max_infimum_deviation", "max_supremum_deviation"});
}

SuiteSummary conjecture_probe_suite(std::size_t trials, std::uint64_t seed, bool parallel) {
  const SeededStream root(seed);
  auto checks = run_indexed<Check>(trials, parallel, [&](std::size_t t) {
    const SeededStream s = root.child(t);
    const PureState psi = haar_pure({3, 3, 3}, s.child(0));
    const TrialRecord r = measurement_trial(psi, s.child(1));
    Check c;
    // Proven for every dimension: f is monotone and bounds the capacity.
    c.failed = r.margin < -kMonotoneTol || r.bound_margin < -kMonotoneTol;
    c.violation = std::max({0.0, -r.margin, -r.bound_margin});
    c.metrics = {-r.capacity_margin, r.capacity_margin < -kMonotoneTol ? 1.0 : 0.0};
    return c;
  });
  SuiteSummary s = aggregate("conjecture-probe", seed, checks,
                             {"max_capacity_increase", "any_capacity_increase"});
  double count = 0.0;
  for (const auto& c : checks) count += c.metrics[1];
  s.metrics.emplace_back("capacity_increase_trials", count);
  return s;
}

}  // namespace corrcap
