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
#include <limits>
#include <vector>

#include "corrcap/error.hpp"
#include "corrcap/qstate.hpp"
#include "corrcap/sampling.hpp"
#include "corrcap/twoqubit.hpp"
#include "oracles.hpp"

namespace corrcap {
namespace {

CMatrix diag(std::vector<double> d) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return m;
}

PureState bell() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return PureState::make(v, {2, 2});
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// Reduced matrix of qubit 0 in a two-qubit state, written out by index.
CMatrix reduce_first(const CMatrix& m) {
  CMatrix r = CMatrix::Zero(2, 2);
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b) r(a, ap) += m(2 * a + b, 2 * ap + b);
  return r;
}

TEST(Validate, AcceptsAndRejects) {
  EXPECT_NO_THROW(validate(CMatrix::Identity(2, 2) / 2.0, {2}));
  EXPECT_NO_THROW(validate(diag({0.7, 0.3, 0, 0}), {2, 2}));
  EXPECT_EQ(code_of([] { validate(diag({1.2, -0.2}), {2}); }), ErrorCode::NotPositive);
  EXPECT_EQ(code_of([] { validate(diag({0.6, 0.6}), {2}); }), ErrorCode::NotUnitTrace);
  CMatrix h = diag({0.5, 0.5});
  h(0, 1) = 0.1;
  EXPECT_EQ(code_of([&] { validate(h, {2}); }), ErrorCode::NotHermitian);
  EXPECT_EQ(code_of([] { validate(diag({0.5, 0.5}), {3}); }), ErrorCode::DimensionMismatch);
}

TEST(PureStateTest, Normalization) {
  CVector v = CVector::Zero(2);
  v(0) = 1.0 + 1e-9;
  EXPECT_EQ(code_of([&] { PureState::make(v, {2}); }), ErrorCode::NotNormalized);
  EXPECT_NO_THROW(PureState::normalized(v, {2}));
  EXPECT_EQ(code_of([] { PureState::normalized(CVector::Zero(2), {2}); }),
            ErrorCode::NotNormalized);
}

TEST(Spectral, Examples) {
  const auto s = spectral(validate(diag({0.3, 0.7}), {2}));
  EXPECT_NEAR(s.eigenvalues[0], 0.7, 1e-14);
  EXPECT_NEAR(s.eigenvalues[1], 0.3, 1e-14);
  CMatrix plus = CMatrix::Constant(2, 2, 0.5);
  const auto p = spectral(validate(plus, {2}));
  EXPECT_NEAR(p.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(p.eigenvalues[1], 0.0, 1e-14);
  const auto e = spectral(sigma_entangled(QubitPair::make(0.65, 0.5)));
  EXPECT_NEAR(e.eigenvalues[0], 0.85, 1e-12);
  EXPECT_NEAR(e.eigenvalues[1], 0.15, 1e-12);
}

TEST(Spectral, DegenerateBlocksAndRoundTrip) {
  const SeededStream root(11);
  for (std::size_t t = 0; t < 1000; ++t) {
    const std::size_t dim = 2 + t % 5;
    const auto rho = random_density(dim, 1 + t % dim, root.child(t));
    const auto s = spectral(rho);
    CMatrix rec = CMatrix::Zero(rho.matrix().rows(), rho.matrix().cols());
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
      const auto col = s.eigenvectors.col(static_cast<Eigen::Index>(i));
      rec += s.eigenvalues[i] * col * col.adjoint();
    }
    EXPECT_LT(frobenius_distance(rec, rho.matrix()), 1e-9);
    const CMatrix gram = s.eigenvectors.adjoint() * s.eigenvectors;
    EXPECT_LT((gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff(), 1e-10);
  }
  const auto flat = spectral(validate(CMatrix::Identity(3, 3) / 3.0, {3}));
  ASSERT_EQ(flat.blocks.size(), 1u);
  EXPECT_LT(frobenius_distance(flat.block_projector(0), CMatrix::Identity(3, 3)), 1e-12);
}

TEST(Tensor, Examples) {
  const auto half = validate(CMatrix::Identity(2, 2) / 2.0, {2});
  const auto t = tensor(half, half);
  EXPECT_EQ(t.dims(), (Dims{2, 2}));
  EXPECT_LT(frobenius_distance(t.matrix(), CMatrix::Identity(4, 4) / 4.0), 1e-15);
  const auto t2 = tensor(validate(diag({1, 0}), {2}), validate(diag({0.6, 0.4}), {2}));
  EXPECT_LT(frobenius_distance(t2.matrix(), diag({0.6, 0.4, 0, 0})), 1e-15);
  const std::vector<DensityMatrix> three{half, half, half};
  const auto t3 = tensor(three);
  EXPECT_EQ(t3.dims(), (Dims{2, 2, 2}));
  EXPECT_NEAR(t3.matrix().trace().real(), 1.0, 1e-14);
}

TEST(PartialTrace, Examples) {
  const auto b = partial_trace(bell(), {1});
  EXPECT_LT(frobenius_distance(b.matrix(), CMatrix::Identity(2, 2) / 2.0), 1e-14);

  const SeededStream root(5);
  const auto rho = random_density(2, 2, root.child(0));
  const auto gamma = random_density(3, 2, root.child(1));
  const auto prod = tensor(rho, gamma);
  EXPECT_LT(frobenius_distance(partial_trace(prod, {0}).matrix(), rho.matrix()), 1e-14);
  EXPECT_LT(frobenius_distance(partial_trace(prod, {1}).matrix(), gamma.matrix()), 1e-14);

  const auto sep = sigma_separable(QubitPair::make(0.65, 0.5));
  const CMatrix by_hand = reduce_first(sep.matrix());
  EXPECT_LT(frobenius_distance(partial_trace(sep, {0}).matrix(), by_hand), 1e-15);
  const auto ev = hermitian_eigenvalues(by_hand);
  EXPECT_NEAR(ev(0), 0.65, 1e-12);
  EXPECT_NEAR(ev(1), 0.35, 1e-12);

  EXPECT_EQ(code_of([&] { partial_trace(prod, {2}); }), ErrorCode::BadSubsystemIndex);
  EXPECT_EQ(code_of([&] { partial_trace(prod, {}); }), ErrorCode::BadSubsystemIndex);
}

TEST(PartialTrace, PureAndMixedPathsAgree) {
  const SeededStream root(8);
  for (std::size_t t = 0; t < 50; ++t) {
    const PureState psi = haar_pure({2, 3, 2}, root.child(t));
    const auto rho = psi.density();
    for (const std::vector<std::size_t>& keep :
         {std::vector<std::size_t>{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1, 2}}) {
      const auto a = partial_trace(psi, keep);
      const auto b = partial_trace(rho, keep);
      EXPECT_LT(frobenius_distance(a.matrix(), b.matrix()), 1e-12);
      EXPECT_NEAR(a.matrix().trace().real(), 1.0, 1e-12);
    }
  }
}

TEST(Permute, SwapsFactors) {
  const SeededStream root(3);
  const auto a = random_density(2, 2, root.child(0));
  const auto b = random_density(3, 3, root.child(1));
  const std::vector<std::size_t> order{1, 0};
  const auto swapped = permute_subsystems(tensor(a, b), order);
  EXPECT_EQ(swapped.dims(), (Dims{3, 2}));
  EXPECT_LT(frobenius_distance(swapped.matrix(), tensor(b, a).matrix()), 1e-14);
}

TEST(Entropy, VonNeumann) {
  EXPECT_NEAR(von_neumann_entropy(bell().density()), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann_entropy(validate(CMatrix::Identity(2, 2) / 2.0, {2})), 1.0, 1e-14);
  EXPECT_NEAR(von_neumann_entropy(validate(diag({0.65, 0.35}), {2})), testing::h2(0.65), 1e-14);
}

TEST(RelativeEntropy, Examples) {
  const SeededStream root(21);
  const auto rho = random_density(4, 3, root.child(0));
  EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-9);
  EXPECT_EQ(relative_entropy(validate(diag({1, 0}), {2}), validate(diag({0, 1}), {2})),
            std::numeric_limits<double>::infinity());
  // Diagonal states reduce to the classical divergence.
  const double kl = 0.3 * std::log2(0.3 / 0.6) + 0.7 * std::log2(0.7 / 0.4);
  EXPECT_NEAR(relative_entropy(validate(diag({0.3, 0.7}), {2}), validate(diag({0.6, 0.4}), {2})),
              kl, 1e-12);
  EXPECT_EQ(code_of([&] { relative_entropy(rho, validate(diag({0.5, 0.5}), {2})); }),
            ErrorCode::DimensionMismatch);
}

TEST(RelativeEntropy, EqualsMultiInformation) {
  const SeededStream root(22);
  for (std::size_t t = 0; t < 200; ++t) {
    const PureState psi = haar_pure({2, 2, 2}, root.child(t));
    const auto rho = partial_trace(psi, {0, 1});
    const auto m = marginals(rho);
    double sum = 0.0;
    for (const auto& x : m) sum += von_neumann_entropy(x);
    EXPECT_NEAR(relative_entropy(rho, tensor(m)), sum - von_neumann_entropy(rho), 1e-9);
  }
}

TEST(RelativeEntropy, NonNegativeOnRandomPairs) {
  const SeededStream root(23);
  for (std::size_t t = 0; t < 500; ++t) {
    const auto a = random_density(3, 3, root.child(2 * t));
    const auto b = random_density(3, 3, root.child(2 * t + 1));
    EXPECT_GE(relative_entropy(a, b), -1e-12);
  }
}

TEST(Pinch, Examples) {
  std::vector<CMatrix> z{diag({1, 0}), diag({0, 1})};
  const auto bell_rho = bell().density();
  const auto p0 = pinch(bell_rho, z, 0);
  const auto p01 = pinch(p0, z, 1);
  EXPECT_LT(frobenius_distance(p01.matrix(), diag({0.5, 0, 0, 0.5})), 1e-15);
  EXPECT_LT(frobenius_distance(pinch(p01, z, 1).matrix(), p01.matrix()), 1e-15);

  std::vector<CMatrix> bad{diag({1, 0})};
  EXPECT_EQ(code_of([&] { pinch(bell_rho, bad, 0); }), ErrorCode::ProjectorsNotResolution);
}

TEST(Pinch, NeverDecreasesEntropy) {
  const SeededStream root(31);
  for (std::size_t t = 0; t < 300; ++t) {
    const auto rho = validate(random_density(4, 1 + t % 4, root.child(t)).matrix(), {2, 2});
    const CMatrix u = haar_unitary(2, root.child(t).child(9));
    std::vector<CMatrix> proj{u.col(0) * u.col(0).adjoint(), u.col(1) * u.col(1).adjoint()};
    EXPECT_GE(von_neumann_entropy(pinch(rho, proj, t % 2)), von_neumann_entropy(rho) - 1e-10);
  }
}

TEST(PartialTranspose, Examples) {
  EXPECT_NEAR(hermitian_eigenvalues(partial_transpose(bell().density()))(3), -0.5, 1e-12);
  const auto sep = sigma_separable(QubitPair::make(0.65, 0.5));
  EXPECT_GE(hermitian_eigenvalues(partial_transpose(sep)).minCoeff(), -1e-10);
  const auto prod = tensor(validate(diag({0.7, 0.3}), {2}), validate(diag({0.6, 0.4}), {2}));
  EXPECT_LT((hermitian_eigenvalues(partial_transpose(prod)) -
             hermitian_eigenvalues(prod.matrix())).norm(), 1e-14);
  EXPECT_EQ(code_of([] { partial_transpose(validate(CMatrix::Identity(3, 3) / 3.0, {3})); }),
            ErrorCode::WrongDims);
}

TEST(Local, ApplyMatchesEmbed) {
  const SeededStream root(41);
  const PureState psi = haar_pure({2, 3, 2}, root.child(0));
  const CMatrix u = haar_unitary(3, root.child(1));
  const CVector direct = apply_local(psi.vector(), psi.dims(), 1, u);
  const CVector embedded = embed_local(u, psi.dims(), 1) * psi.vector();
  EXPECT_LT((direct - embedded).norm(), 1e-13);
}

}  // namespace
}  // namespace corrcap
