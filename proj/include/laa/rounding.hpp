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

#ifndef LAA_ROUNDING_HPP
#define LAA_ROUNDING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "laa/common.hpp"
#include "laa/polynomial.hpp"

namespace laa {

/// z_i = 1 with probability y_i, independently; deterministic per seed.
/// Throws std::invalid_argument if y leaves [0,1] by more than 1e-9.
BinaryVector round_once(const Eigen::VectorXd& y, std::uint64_t seed);

/// A quantity whose rounded value should stay within `budget` of `target`
/// (its value at the fractional point).
struct MonitoredForm {
  std::function<double(const BinaryVector&)> eval;
  double target = 0.0;
  double budget = 0.0;
};

/// a^T z against a^T y.
MonitoredForm linear_form(const Eigen::VectorXd& a, const Eigen::VectorXd& y, double budget);
/// p(z) against the multilinear extension p(y).
MonitoredForm polynomial_form(const SmoothPolynomial& p, const Eigen::VectorXd& y, double budget);

struct DeviationCheck {
  double deviation = 0.0;
  double budget = 0.0;
  bool within() const { return deviation <= budget; }
};

struct RoundingOutcome {
  BinaryVector z;
  /// Trials actually drawn (the returned z may come from an earlier one).
  int trials_used = 0;
  std::vector<DeviationCheck> checks;
  /// False when no trial met every budget; z is then the best attempt.
  bool within_budget = false;
};

/// Rounds until every form is within budget or max_trials is reached. Trial
/// k uses derive_seed(seed, k). The best attempt maximizes the number of
/// satisfied budgets, then minimizes the largest deviation/budget ratio.
RoundingOutcome round_with_retries(const Eigen::VectorXd& y, const std::vector<MonitoredForm>& forms,
                                   int max_trials, std::uint64_t seed);

/// c sqrt(f n ln n).
double linear_rounding_budget(double c, int n, double f = 3.0);
/// 2 c e sqrt(f) d n^{d - 1/2} sqrt(ln n).
double polynomial_rounding_budget(double c, int d, int n, double f);
/// f with n^f = 2 m (n + 4d) n^{d-1}.
double pip_failure_exponent(int m, int n, int d);

/// Forces exactly k ones: drops the ones with smallest y_i or adds the zeros
/// with largest y_i, ties to the lowest index. Throws std::invalid_argument
/// if k is outside [0, n].
BinaryVector repair_cardinality(const BinaryVector& z, int k, const Eigen::VectorXd& y);

}  // namespace laa

#endif  // LAA_ROUNDING_HPP
