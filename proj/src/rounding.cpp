// Copyright 2026 The laa Authors.
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

#include "laa/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace laa {

BinaryVector round_once(const Eigen::VectorXd& y, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BinaryVector z(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!(y(i) >= -1e-9 && y(i) <= 1.0 + 1e-9)) throw std::invalid_argument("round_once: y outside [0,1]");
    // Draw even for integral entries so that z_i depends only on (seed, i).
    const double u = unit(rng);
    z(i) = u < y(i) ? 1 : 0;
  }
  return z;
}

MonitoredForm linear_form(const Eigen::VectorXd& a, const Eigen::VectorXd& y, double budget) {
  if (a.size() != y.size()) throw DimensionError("linear_form: length mismatch");
  return {[a](const BinaryVector& z) { return a.dot(z.cast<double>()); }, a.dot(y), budget};
}

MonitoredForm polynomial_form(const SmoothPolynomial& p, const Eigen::VectorXd& y, double budget) {
  return {[p](const BinaryVector& z) { return evaluate_exact(p, z); }, evaluate_exact(p, y), budget};
}

namespace {

struct Score {
  int satisfied = 0;
  double worst_ratio = 0.0;

  bool better_than(const Score& o) const {
    if (satisfied != o.satisfied) return satisfied > o.satisfied;
    return worst_ratio < o.worst_ratio;
  }
};

Score score(const std::vector<DeviationCheck>& checks) {
  Score s;
  for (const auto& c : checks) {
    if (c.within()) ++s.satisfied;
    const double ratio = c.budget > 0.0 ? c.deviation / c.budget : (c.deviation > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    s.worst_ratio = std::max(s.worst_ratio, ratio);
  }
  return s;
}

}  // namespace

RoundingOutcome round_with_retries(const Eigen::VectorXd& y, const std::vector<MonitoredForm>& forms,
                                   int max_trials, std::uint64_t seed) {
  if (max_trials < 1) throw std::invalid_argument("round_with_retries: max_trials must be positive");
  RoundingOutcome best;
  Score best_score;
  int trials = 0;
  for (int trial = 0; trial < max_trials; ++trial) {
    RoundingOutcome current;
    current.z = round_once(y, derive_seed(seed, static_cast<std::uint64_t>(trial)));
    ++trials;
    for (const auto& f : forms) current.checks.push_back({std::abs(f.eval(current.z) - f.target), f.budget});
    const Score s = score(current.checks);
    current.within_budget = s.satisfied == static_cast<int>(forms.size());
    if (trial == 0 || s.better_than(best_score)) {
      best = std::move(current);
      best_score = s;
    }
    if (best.within_budget) break;
  }
  best.trials_used = trials;
  return best;
}

double linear_rounding_budget(double c, int n, double f) {
  return c * std::sqrt(f * n * std::log(static_cast<double>(std::max(n, 1))));
}

double polynomial_rounding_budget(double c, int d, int n, double f) {
  const double nn = std::max(n, 1);
  return 2.0 * c * std::numbers::e * std::sqrt(f) * d * std::pow(nn, d - 0.5) * std::sqrt(std::log(nn));
}

double pip_failure_exponent(int m, int n, int d) {
  const double nn = std::max(n, 2);
  return std::log(2.0 * std::max(m, 1) * (nn + 4.0 * d) * std::pow(nn, d - 1)) / std::log(nn);
}

BinaryVector repair_cardinality(const BinaryVector& z, int k, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(z.size());
  if (k < 0 || k > n) throw std::invalid_argument("repair_cardinality: k outside [0, n]");
  if (y.size() != z.size()) throw DimensionError("repair_cardinality: length mismatch");
  BinaryVector out = z;
  int ones = z.sum();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (ones > k) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return y(a) < y(b); });
    for (int i : order) {
      if (ones == k) break;
      if (out(i) == 1) {
        out(i) = 0;
        --ones;
      }
    }
  } else if (ones < k) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return y(a) > y(b); });
    for (int i : order) {
      if (ones == k) break;
      if (out(i) == 0) {
        out(i) = 1;
        ++ones;
      }
    }
  }
  return out;
}

}  // namespace laa
