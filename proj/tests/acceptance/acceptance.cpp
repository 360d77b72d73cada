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

// Acceptance run: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/ensemble.hpp"
#include "corrcap/sampling.hpp"
#include "corrcap/suites.hpp"
#include "corrcap/twoqubit.hpp"

namespace {

using namespace corrcap;

constexpr std::uint64_t kSeed = 7;

// Reference values, evaluated independently with mpmath.
constexpr double kH65 = 0.934068055375491;
constexpr double kCc05 = 0.493422605760145;
constexpr double kCe05 = 1.324227750659091;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome from_suite(const SuiteSummary& s) {
  std::string detail = fmt("trials=%zu failures=%zu max_violation=%.3g", s.trials, s.failures,
                           s.max_violation);
  for (const auto& [k, v] : s.metrics) detail += fmt(" %s=%.3g", k.c_str(), v);
  return {s.failures == 0, detail};
}

Outcome lattice() { return from_suite(lattice_oracle_suite(true)); }
Outcome theorem1() { return from_suite(theorem1_suite(500, kSeed, true)); }
Outcome nielsen_kempe() { return from_suite(nielsen_kempe_suite(1000, kSeed, true)); }
Outcome hierarchy_check() { return from_suite(hierarchy_suite(1000, kSeed, true)); }
Outcome locc() { return from_suite(locc_suite(1000, kSeed, true)); }

Outcome fig1() {
  const auto rows = fig1_curve(0.65, 201);
  const auto& lo = rows.front();
  const auto& iso = rows[60];
  const double tol = 1e-5;
  double worst = 0.0;
  auto dev = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  dev(iso.c_entangled, 2 * kH65);
  dev(iso.c_separable, kH65);
  dev(iso.c_classical, kH65);
  dev(lo.c_classical, kCc05);
  dev(lo.c_separable, kH65);
  dev(lo.c_entangled, kCe05);
  bool ordered = true;
  for (const auto& r : rows) {
    ordered = ordered && r.c_classical <= r.c_separable + 1e-12 &&
              r.c_separable <= r.c_entangled + 1e-12;
  }
  const auto& end = rows.back();
  const double tail = std::max({std::abs(end.c_classical), std::abs(end.c_separable),
                                std::abs(end.c_entangled)});
  const bool grid_ok = rows.size() == 201 && std::abs(iso.p_b - 0.65) < 1e-12 &&
                       lo.p_b == 0.5 && end.p_b == 1.0;
  return {grid_ok && worst <= tol && ordered && tail <= tol,
          fmt("points=%zu p_b=0.5:(%.6f,%.6f,%.6f) p_b=0.65:(%.6f,%.6f,%.6f) max_dev=%.2g "
              "ordered=%d tail=%.2g",
              rows.size(), lo.c_classical, lo.c_separable, lo.c_entangled, iso.c_classical,
              iso.c_separable, iso.c_entangled, worst, ordered, tail)};
}

Outcome feline() {
  const auto cat = feline_state(3, canonicalize({0.65, 0.35}));
  const double pure = correlation_information(cat.pure);
  const double dec = classical_correlation(cat.decohered);
  const double dev = std::max(std::abs(pure - 3 * kH65), std::abs(dec - 2 * kH65));
  return {dev <= 1e-9, fmt("C(pure)=%.9f C(decohered)=%.9f max_dev=%.2g", pure, dec, dev)};
}

Outcome ensembles() {
  const SeededStream root(kSeed);
  double stoch = 0.0, recon = 0.0;
  std::size_t step_excess = 0;
  for (std::size_t t = 0; t < 1000; ++t) {
    const SeededStream s = root.child(t);
    Rng rng = s.child(0).rng();
    const std::size_t dim = 2 + rng.index(4);
    const auto rho = random_density(dim, 1 + rng.index(dim), s.child(1));
    const ProbVector lambda = spectral(rho).eigenvalues;
    std::vector<ProbVector> set{lambda};
    const std::size_t extra = 1 + rng.index(3);
    for (std::size_t k = 0; k < extra; ++k) {
      set.push_back(random_spectrum(1 + rng.index(2 * dim), s.child(2 + k)));
    }
    const ProbVector target = infimum(set);
    const SchurHorn sh = schur_horn_unitary(lambda, target);
    const Eigen::MatrixXd p = sh.rotation.cwiseAbs2();
    stoch = std::max({stoch, (p.rowwise().sum().array() - 1.0).abs().maxCoeff(),
                      (p.colwise().sum().array() - 1.0).abs().maxCoeff()});
    if (sh.steps + 1 > static_cast<std::size_t>(p.rows())) ++step_excess;
    const Ensemble e = realize_ensemble(rho, target);
    recon = std::max(recon, frobenius_distance(e.density(), rho.matrix()));
  }
  return {stoch <= 1e-12 && recon <= 1e-9 && step_excess == 0,
          fmt("pairs=1000 doubly_stochastic_gap=%.2g reconstruction=%.2g step_overruns=%zu",
              stoch, recon, step_excess)};
}

Outcome classifier() {
  const auto pair = QubitPair::make(0.65, 0.5);
  CMatrix half = CMatrix::Zero(4, 4);
  half(0, 0) = half(3, 3) = 0.5;
  const bool c = is_classically_correlated(sigma_classical(pair));
  const bool s = is_classically_correlated(sigma_separable(pair));
  const bool e = is_classically_correlated(sigma_entangled(pair));
  const bool d = is_classically_correlated(validate(half, {2, 2}));
  const int wrong = (!c) + s + e + (!d);
  return {wrong == 0, fmt("sigma_c=%d sigma_s=%d sigma_e=%d degenerate_mixture=%d "
                          "misclassified=%d",
                          c, s, e, d, wrong)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lattice oracle (denominator 12, d<=4, sets of size <=3)", lattice},
      {"optimal separable composite: spectrum, marginals, Gram", theorem1},
      {"separable states majorized by infimum of marginals", nielsen_kempe},
      {"two-qubit correlation curves at p_a=0.65", fig1},
      {"two-qubit disorder hierarchy", hierarchy_check},
      {"feline states n=3, (0.65, 0.35)", feline},
      {"LOCC monotonicity on 3- and 4-qubit states", locc},
      {"ensemble construction", ensembles},
      {"classically correlated classifier", classifier},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s | %s | %.1fs\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
