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
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace corrcap {

/// Tolerance used for all prefix-sum comparisons. Ties count as <=.
inline constexpr double kPrefixTol = 1e-12;
/// Input slack accepted by canonicalize() for negativity and unit sum.
inline constexpr double kInputTol = 1e-9;

/**
 * A probability spectrum: non-negative, sorted in non-increasing order and
 * summing to one. Only constructible through canonicalize(), so every
 * instance satisfies the invariants.
 *
 * Trailing zeros are significant for size() but never for comparisons:
 * vectors of different length are zero-padded before any prefix sum.
 */
class ProbVector {
 public:
  ProbVector() = default;

  std::span<const double> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

  /// Entry i, or 0 past the end (implicit zero padding).
  double padded(std::size_t i) const noexcept {
    return i < entries_.size() ? entries_[i] : 0.0;
  }

  /// Number of entries above `threshold`.
  std::size_t support_size(double threshold = 0.0) const noexcept;

  /// Copy zero-padded (or truncated, if the dropped tail is zero) to length d.
  ProbVector resized(std::size_t d) const;

  /// Cumulative sums mu_1..mu_d (mu_0 = 0 omitted), zero-padded to length d.
  std::vector<double> prefix_sums(std::size_t d) const;

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  friend ProbVector canonicalize(std::span<const double> raw);
  explicit ProbVector(std::vector<double> e) : entries_(std::move(e)) {}
  std::vector<double> entries_;
};

enum class MajOrder { MajorizedBy, Majorizes, Equal, Incomparable };

std::string_view to_string(MajOrder order);

/// Sort descending, clip small negatives, renormalize to an exact unit sum.
/// Throws NotADistribution for empty input, entries < -1e-9, or a sum more
/// than 1e-9 away from one.
ProbVector canonicalize(std::span<const double> raw);
inline ProbVector canonicalize(std::initializer_list<double> raw) {
  return canonicalize(std::span<const double>(raw.begin(), raw.size()));
}

/// Result is relative to `a`: MajorizedBy means a ≺ b.
MajOrder compare(const ProbVector& a, const ProbVector& b);

/// a ≺ b or a = b.
inline bool majorized_by(const ProbVector& a, const ProbVector& b) {
  auto o = compare(a, b);
  return o == MajOrder::MajorizedBy || o == MajOrder::Equal;
}

/// Largest amount by which a prefix sum of `a` exceeds that of `b`
/// (0 when a ≺ b exactly).
double majorization_excess(const ProbVector& a, const ProbVector& b);

/// Greatest lower bound: successive differences of the pointwise minimum of
/// prefix sums. Throws EmptySet.
ProbVector infimum(std::span<const ProbVector> set);

/// Least upper bound: pointwise maximum of prefix sums, lifted to its least
/// concave majorant (upper hull over the integer grid). Throws EmptySet.
ProbVector supremum(std::span<const ProbVector> set);

/// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const ProbVector& v);
double shannon_entropy(std::span<const double> probs);

}  // namespace corrcap
