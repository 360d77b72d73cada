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

#include "corrcap/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "corrcap/error.hpp"

namespace corrcap {

std::size_t ProbVector::support_size(double threshold) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(),
      [threshold](double x) { return x > threshold; }));
}

ProbVector ProbVector::resized(std::size_t d) const {
  std::vector<double> e(d, 0.0);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i < d) {
      e[i] = entries_[i];
    } else if (entries_[i] > kInputTol) {
      throw Error(ErrorCode::BadInput,
                  "cannot truncate a distribution with mass past index " +
                      std::to_string(d));
    }
  }
  return canonicalize(e);
}

std::vector<double> ProbVector::prefix_sums(std::size_t d) const {
  std::vector<double> mu(d);
  double acc = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    acc += padded(i);
    mu[i] = acc;
  }
  return mu;
}

std::string_view to_string(MajOrder order) {
  switch (order) {
    case MajOrder::MajorizedBy:
      return "MAJORIZED_BY";
    case MajOrder::Majorizes:
      return "MAJORIZES";
    case MajOrder::Equal:
      return "EQUAL";
    case MajOrder::Incomparable:
      return "INCOMPARABLE";
  }
  return "?";
}

ProbVector canonicalize(std::span<const double> raw) {
  if (raw.empty()) {
    throw Error(ErrorCode::NotADistribution, "empty probability vector");
  }
  double sum = 0.0;
  for (double x : raw) {
    if (!std::isfinite(x) || x < -kInputTol) {
      std::ostringstream os;
      os << "entry " << x << " is negative or not finite";
      throw Error(ErrorCode::NotADistribution, os.str());
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kInputTol) {
    std::ostringstream os;
    os.precision(17);
    os << "entries sum to " << sum;
    throw Error(ErrorCode::NotADistribution, os.str());
  }
  std::vector<double> e(raw.begin(), raw.end());
  for (double& x : e) x = std::max(x, 0.0);
  std::sort(e.begin(), e.end(), std::greater<>());
  const double clipped_sum = std::accumulate(e.begin(), e.end(), 0.0);
  for (double& x : e) x /= clipped_sum;
  return ProbVector(std::move(e));
}

namespace {

std::size_t common_length(std::span<const ProbVector> set) {
  std::size_t d = 0;
  for (const auto& v : set) d = std::max(d, v.size());
  return d;
}

}  // namespace

double majorization_excess(const ProbVector& a, const ProbVector& b) {
  const std::size_t d = std::max(a.size(), b.size());
  const auto pa = a.prefix_sums(d);
  const auto pb = b.prefix_sums(d);
  double excess = 0.0;
  for (std::size_t j = 0; j < d; ++j) excess = std::max(excess, pa[j] - pb[j]);
  return excess;
}

MajOrder compare(const ProbVector& a, const ProbVector& b) {
  const std::size_t d = std::max(a.size(), b.size());
  const auto pa = a.prefix_sums(d);
  const auto pb = b.prefix_sums(d);
  bool a_below = true;
  bool b_below = true;
  for (std::size_t j = 0; j < d; ++j) {
    if (pa[j] > pb[j] + kPrefixTol) a_below = false;
    if (pb[j] > pa[j] + kPrefixTol) b_below = false;
  }
  if (a_below && b_below) return MajOrder::Equal;
  if (a_below) return MajOrder::MajorizedBy;
  if (b_below) return MajOrder::Majorizes;
  return MajOrder::Incomparable;
}

ProbVector infimum(std::span<const ProbVector> set) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "infimum of an empty set");
  const std::size_t d = common_length(set);
  std::vector<double> mu = set.front().prefix_sums(d);
  for (const auto& v : set.subspan(1)) {
    const auto p = v.prefix_sums(d);
    for (std::size_t j = 0; j < d; ++j) mu[j] = std::min(mu[j], p[j]);
  }
  // Prefix sums of non-negative entries are non-decreasing in floating
  // point, so these differences are never negative.
  std::vector<double> out(d);
  double prev = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    out[j] = mu[j] - prev;
    prev = mu[j];
  }
  return canonicalize(out);
}

ProbVector supremum(std::span<const ProbVector> set) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "supremum of an empty set");
  const std::size_t d = common_length(set);
  std::vector<double> nu(d + 1, 0.0);
  for (const auto& v : set) {
    const auto p = v.prefix_sums(d);
    for (std::size_t j = 0; j < d; ++j) nu[j + 1] = std::max(nu[j + 1], p[j]);
  }

  // Upper hull of (j, nu_j), monotone chain over increasing j.
  std::vector<std::size_t> hull;
  hull.reserve(d + 1);
  for (std::size_t c = 0; c <= d; ++c) {
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      const double cross =
          static_cast<double>(b - a) * (nu[c] - nu[a]) -
          (nu[b] - nu[a]) * static_cast<double>(c - a);
      if (cross < 0.0) break;
      hull.pop_back();
    }
    hull.push_back(c);
  }

  std::vector<double> lifted(d + 1);
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const std::size_t a = hull[k];
    const std::size_t b = hull[k + 1];
    for (std::size_t j = a; j <= b; ++j) {
      const double t = static_cast<double>(j - a) / static_cast<double>(b - a);
      lifted[j] = nu[a] + t * (nu[b] - nu[a]);
    }
  }
  std::vector<double> out(d);
  for (std::size_t j = 0; j < d; ++j) {
    out[j] = std::max(lifted[j + 1] - lifted[j], 0.0);
  }
  return canonicalize(out);
}

double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double shannon_entropy(const ProbVector& v) {
  return shannon_entropy(v.entries());
}

}  // namespace corrcap
