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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/error.hpp"
#include "corrcap/sampling.hpp"

namespace corrcap {
namespace {

// E[lambda_max] for a qubit drawn from the induced measure with rank 2,
// from the eigenvalue-gap density proportional to r^2 on [0, 1]
// (lambda_max = (1 + r) / 2), integrated with composite Simpson.
double qubit_mean_lambda_max() {
  const int n = 2000;
  const double h = 1.0 / n;
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double r = i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    num += w * r * r * 0.5 * (1.0 + r);
    den += w * r * r;
  }
  return num / den;
}

TEST(SeededStreamTest, DeterministicAndPathSensitive) {
  const SeededStream a(42);
  EXPECT_EQ(a.child(3).key(), SeededStream(42).child(3).key());
  EXPECT_NE(a.child(3).key(), a.child(4).key());
  EXPECT_NE(a.child(3).child(0).key(), a.child(3).key());
  EXPECT_NE(SeededStream(43).child(3).key(), a.child(3).key());
  Rng r1 = a.rng(), r2 = a.rng();
  for (int i = 0; i < 100; ++i) EXPECT_EQ(r1.uniform(), r2.uniform());
  std::set<std::uint64_t> keys;
  for (std::uint64_t i = 0; i < 10000; ++i) keys.insert(a.child(i).key());
  EXPECT_EQ(keys.size(), 10000u);
}

TEST(RngTest, Moments) {
  Rng rng = SeededStream(1).rng();
  double s = 0, s2 = 0, u = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    s += x;
    s2 += x * x;
    u += rng.uniform();
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
  EXPECT_NEAR(u / n, 0.5, 0.005);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.index(3), 3u);
}

TEST(HaarUnitaryTest, IsUnitary) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const CMatrix u = haar_unitary(n, SeededStream(n));
    EXPECT_LT((u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).norm(), 1e-12);
  }
}

TEST(HaarPureTest, NormalizedWithUniformWeights) {
  const SeededStream root(2);
  double first = 0.0;
  const int n = 20000;
  for (int t = 0; t < n; ++t) {
    const PureState psi = haar_pure({2, 2}, root.child(static_cast<std::uint64_t>(t)));
    EXPECT_NEAR(psi.vector().norm(), 1.0, 1e-12);
    first += std::norm(psi.vector()(0));
  }
  EXPECT_NEAR(first / n, 0.25, 0.005);
  EXPECT_THROW(haar_pure(Dims(21, 2), root), Error);
}

TEST(RandomDensityTest, RankAndInducedMeanLargestEigenvalue) {
  const double expected = qubit_mean_lambda_max();
  EXPECT_NEAR(expected, 0.875, 1e-9);
  const SeededStream root(3);
  double total = 0.0;
  const int n = 20000;
  for (int t = 0; t < n; ++t) {
    total += spectral(random_density(2, 2, root.child(static_cast<std::uint64_t>(t))))
                 .eigenvalues[0];
  }
  EXPECT_NEAR(total / n, expected, 0.01);

  const auto r1 = random_density(4, 1, root);
  EXPECT_NEAR(spectral(r1).eigenvalues[0], 1.0, 1e-10);
  const auto r2 = random_density(5, 2, root);
  EXPECT_EQ(spectral(r2).eigenvalues.support_size(1e-9), 2u);
  try {
    random_density(2, 3, root);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadRank);
  }
}

TEST(RandomSeparableTest, PptAndValid) {
  const SeededStream root(4);
  for (std::size_t t = 0; t < 200; ++t) {
    const auto rho = random_separable({2, 2}, 1 + t % 8, root.child(t));
    EXPECT_TRUE(*two_qubit_ppt(rho));
  }
}

TEST(RandomEffectTest, Spectrum) {
  const SeededStream root(5);
  for (std::size_t t = 0; t < 200; ++t) {
    const CMatrix e = random_effect(3, root.child(t));
    const RVector ev = hermitian_eigenvalues(e);
    EXPECT_GE(ev.minCoeff(), -1e-12);
    EXPECT_LE(ev.maxCoeff(), 1.0 + 1e-12);
  }
}

TEST(RandomClassicalJointTest, PreservesMarginals) {
  const SeededStream root(6);
  for (std::size_t t = 0; t < 200; ++t) {
    const std::vector<ProbVector> m{random_spectrum(2, root.child(t).child(0)),
                                    random_spectrum(3, root.child(t).child(1)),
                                    random_spectrum(2, root.child(t).child(2))};
    const JointPmf j = random_classical_joint(m, default_rectangle_moves(m), root.child(t));
    for (double v : j.values) EXPECT_GE(v, 0.0);
    for (std::size_t a = 0; a < m.size(); ++a) {
      const auto marg = j.marginal(a);
      for (std::size_t i = 0; i < marg.size(); ++i) EXPECT_NEAR(marg[i], m[a][i], 1e-12);
    }
  }
}

TEST(RandomClassicalJointTest, MovesAwayFromTheProduct) {
  const std::vector<ProbVector> m{canonicalize({0.6, 0.4}), canonicalize({0.7, 0.3})};
  const JointPmf j = random_classical_joint(m, 100, SeededStream(8));
  EXPECT_GT(classical_correlation(j), 1e-6);
}

}  // namespace
}  // namespace corrcap
