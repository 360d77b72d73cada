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
#include <vector>

#include "corrcap/error.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/sampling.hpp"
#include "oracles.hpp"

namespace corrcap {
namespace {

ProbVector from_grid(const std::vector<long>& v, long denom) {
  std::vector<double> x;
  for (long k : v) x.push_back(static_cast<double>(k) / static_cast<double>(denom));
  return canonicalize(x);
}

void expect_entries(const ProbVector& got, std::vector<double> want, double tol = 1e-12) {
  ASSERT_GE(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i], i < want.size() ? want[i] : 0.0, tol) << "entry " << i;
  }
}

TEST(Canonicalize, SortsClipsAndNormalizes) {
  expect_entries(canonicalize({0.3, 0.7}), {0.7, 0.3});
  expect_entries(canonicalize({1.0}), {1.0});
  const ProbVector p = canonicalize({0.5, 0.5 - 1e-13, 1e-13});
  expect_entries(p, {0.5, 0.5, 0.0});
  double sum = 0.0;
  for (double x : p.entries()) sum += x;
  EXPECT_EQ(sum, 1.0);
  expect_entries(canonicalize({0.6, 0.4, -1e-10}), {0.6, 0.4, 0.0});
}

TEST(Canonicalize, RejectsNonDistributions) {
  EXPECT_THROW(canonicalize(std::vector<double>{}), Error);
  EXPECT_THROW(canonicalize({0.6, 0.6}), Error);
  EXPECT_THROW(canonicalize({1.1, -0.1}), Error);
  try {
    canonicalize({0.2, 0.2});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotADistribution);
  }
}

TEST(Compare, Basics) {
  EXPECT_EQ(compare(canonicalize({0.5, 0.5}), canonicalize({0.7, 0.3})), MajOrder::MajorizedBy);
  EXPECT_EQ(compare(canonicalize({1.0, 0.0}), canonicalize({0.7, 0.3})), MajOrder::Majorizes);
  EXPECT_EQ(compare(canonicalize({1.0, 0.0}), canonicalize({1.0})), MajOrder::Equal);
  EXPECT_EQ(compare(canonicalize({0.5, 0.5, 0.0}), canonicalize({0.6, 0.2, 0.2})),
            MajOrder::Incomparable);
  EXPECT_EQ(to_string(MajOrder::MajorizedBy), "MAJORIZED_BY");
  EXPECT_EQ(to_string(MajOrder::Incomparable), "INCOMPARABLE");
}

TEST(Compare, TiesWithinToleranceCountAsEqual) {
  const ProbVector a = canonicalize({0.6, 0.4});
  const ProbVector b = canonicalize({0.6 + 5e-13, 0.4 - 5e-13});
  EXPECT_EQ(compare(a, b), MajOrder::Equal);
}

TEST(Infimum, Examples) {
  expect_entries(infimum(std::vector{canonicalize({0.7, 0.3}), canonicalize({0.6, 0.4})}),
                 {0.6, 0.4});
  expect_entries(infimum(std::vector{canonicalize({0.5, 0.5, 0.0}), canonicalize({0.6, 0.2, 0.2})}),
                 {0.5, 0.3, 0.2});
  const ProbVector v = canonicalize({0.5, 0.3, 0.2});
  EXPECT_EQ(compare(infimum(std::vector{v}), v), MajOrder::Equal);
  EXPECT_THROW(infimum(std::vector<ProbVector>{}), Error);
}

TEST(Infimum, MatchesBruteForceOnDenominator60) {
  const std::vector<std::vector<long>> set{{30, 30, 0}, {36, 12, 12}};
  const auto glb = testing::grid_glb(set, 60);
  ASSERT_TRUE(glb.has_value());
  const ProbVector got =
      infimum(std::vector{from_grid(set[0], 60), from_grid(set[1], 60)});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(got.padded(i), (*glb)[i] / 60.0, 1e-12);
}

TEST(Supremum, Examples) {
  expect_entries(supremum(std::vector{canonicalize({0.5, 0.5}), canonicalize({0.6, 0.2, 0.2})}),
                 {0.6, 0.4, 0.0});
  expect_entries(supremum(std::vector{canonicalize({0.6, 0.15, 0.15, 0.10}),
                                      canonicalize({0.5, 0.25, 0.25, 0.0})}),
                 {0.6, 0.2, 0.2, 0.0});
  const ProbVector v = canonicalize({0.5, 0.3, 0.2});
  EXPECT_EQ(compare(supremum(std::vector{v}), v), MajOrder::Equal);
  EXPECT_THROW(supremum(std::vector<ProbVector>{}), Error);
}

TEST(Supremum, MatchesBruteForceLeastUpperBound) {
  // Scale 1/20 inputs onto the 1/80 grid, where the hull interpolation lands.
  const std::vector<std::vector<long>> set{{48, 12, 12, 8}, {40, 20, 20, 0}};
  const auto lub = testing::grid_lub(set, 80);
  ASSERT_TRUE(lub.has_value());
  const ProbVector got = supremum(std::vector{from_grid(set[0], 80), from_grid(set[1], 80)});
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(got.padded(i), (*lub)[i] / 80.0, 1e-12);
}

TEST(Entropy, Values) {
  EXPECT_NEAR(shannon_entropy(canonicalize({1.0, 0.0})), 0.0, 1e-15);
  EXPECT_NEAR(shannon_entropy(canonicalize({0.5, 0.5})), 1.0, 1e-15);
  EXPECT_NEAR(shannon_entropy(canonicalize({0.65, 0.35})), 0.934068055375491, 1e-12);
  EXPECT_NEAR(shannon_entropy(canonicalize({0.65, 0.35})), testing::h2(0.65), 1e-14);
}

class LatticeProperties : public ::testing::TestWithParam<int> {};

TEST_P(LatticeProperties, RandomSets) {
  const SeededStream root(static_cast<std::uint64_t>(GetParam()));
  for (std::size_t t = 0; t < 2000; ++t) {
    const SeededStream s = root.child(t);
    Rng rng = s.child(0).rng();
    std::vector<ProbVector> set;
    const std::size_t k = 1 + rng.index(4);
    for (std::size_t m = 0; m < k; ++m) {
      set.push_back(random_spectrum(1 + rng.index(5), s.child(1 + m)));
    }
    const ProbVector inf = infimum(set);
    const ProbVector sup = supremum(set);
    for (const auto& v : set) {
      EXPECT_TRUE(majorized_by(inf, v));
      EXPECT_TRUE(majorized_by(v, sup));
      EXPECT_GE(shannon_entropy(inf) + 1e-12, shannon_entropy(v));
      EXPECT_LE(shannon_entropy(sup), shannon_entropy(v) + 1e-12);
    }
    // Concavity of the prefix sums: entries non-increasing.
    for (const ProbVector* p : {&inf, &sup}) {
      for (std::size_t i = 1; i < p->size(); ++i) EXPECT_GE((*p)[i - 1], (*p)[i]);
    }
    if (set.size() >= 2) {
      const std::vector<ProbVector> ab{set[0], set[1]};
      const std::vector<ProbVector> ba{set[1], set[0]};
      EXPECT_EQ(compare(infimum(ab), infimum(ba)), MajOrder::Equal);
      EXPECT_EQ(compare(supremum(ab), supremum(ba)), MajOrder::Equal);
    }
    if (set.size() >= 3) {
      const std::vector<ProbVector> first{set[0], set[1]};
      const std::vector<ProbVector> nested{infimum(first), set[2]};
      const std::vector<ProbVector> flat{set[0], set[1], set[2]};
      EXPECT_EQ(compare(infimum(nested), infimum(flat)), MajOrder::Equal);
      const std::vector<ProbVector> nested_sup{supremum(first), set[2]};
      EXPECT_EQ(compare(supremum(nested_sup), supremum(flat)), MajOrder::Equal);
    }
    const std::vector<ProbVector> twice{set[0], set[0]};
    EXPECT_EQ(compare(infimum(twice), set[0]), MajOrder::Equal);
    EXPECT_EQ(compare(supremum(twice), set[0]), MajOrder::Equal);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LatticeProperties, ::testing::Values(1, 2, 3, 4, 5));

TEST(Majorization, EntropyIsMonotoneUnderTheOrder) {
  const SeededStream root(99);
  for (std::size_t t = 0; t < 2000; ++t) {
    const ProbVector a = random_spectrum(4, root.child(2 * t));
    const ProbVector b = random_spectrum(4, root.child(2 * t + 1));
    if (compare(a, b) == MajOrder::MajorizedBy) {
      EXPECT_GE(shannon_entropy(a) + 1e-12, shannon_entropy(b));
    }
  }
}

}  // namespace
}  // namespace corrcap
