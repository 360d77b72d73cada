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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "corrcap/composite.hpp"
#include "corrcap/majorization.hpp"
#include "corrcap/qstate.hpp"

namespace corrcap {

/// Deterministic random source. Uniforms take the top 53 bits of
/// std::mt19937_64 (whose output sequence is fixed by the standard) and
/// normals use Box-Muller, so draws are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : engine_(key) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal.
  double normal();
  /// Uniform on {0, ..., n - 1}.
  std::size_t index(std::size_t n);
  /// Circularly symmetric complex Gaussian with E|z|^2 = 1.
  cplx complex_normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/**
 * Splittable seed: a master seed plus a derivation path. The engine key is
 * obtained by folding the path into the seed with SplitMix64, so a child
 * stream depends only on (seed, path) and never on what other streams drew.
 * Parallel trials use child(trial_index).
 */
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t master_seed, std::vector<std::uint64_t> path = {})
      : seed_(master_seed), path_(std::move(path)) {}

  SeededStream child(std::uint64_t index) const;
  std::uint64_t key() const;
  Rng rng() const { return Rng(key()); }

  std::uint64_t master_seed() const noexcept { return seed_; }
  const std::vector<std::uint64_t>& path() const noexcept { return path_; }

 private:
  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
};

inline constexpr std::size_t kMaxSampledDim = std::size_t{1} << 20;

/// Haar-random pure state. Throws TooLarge above 2^20 amplitudes.
PureState haar_pure(const Dims& dims, const SeededStream& stream);
/// Haar-random n x n unitary (QR of a Ginibre matrix with phase fix).
CMatrix haar_unitary(std::size_t n, const SeededStream& stream);
/// Induced-measure mixed state: partial trace of a Haar state on dim x rank.
/// Throws BadRank unless 1 <= rank <= dim.
DensityMatrix random_density(std::size_t dim, std::size_t rank,
                             const SeededStream& stream);
/// Dirichlet-weighted mixture of `terms` Haar product states.
DensityMatrix random_separable(const Dims& dims, std::size_t terms,
                               const SeededStream& stream);
/// Effect V diag(u) V^dagger with u_i uniform on [0, 1] and V Haar.
CMatrix random_effect(std::size_t dim, const SeededStream& stream);
/// Flat-Dirichlet probability vector of length d (canonicalized).
ProbVector random_spectrum(std::size_t d, const SeededStream& stream);

/// 50 moves per cell of the table.
std::size_t default_rectangle_moves(std::span<const ProbVector> marginal_spectra);

/// Random joint table whose classical marginals equal `marginal_spectra`:
/// starts from the product table and applies `iterations` random 2x2
/// rectangle moves, each preserving every marginal.
JointPmf random_classical_joint(std::span<const ProbVector> marginal_spectra,
                                std::size_t iterations, const SeededStream& stream);

}  // namespace corrcap
