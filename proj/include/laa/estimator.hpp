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

#ifndef LAA_ESTIMATOR_HPP
#define LAA_ESTIMATOR_HPP

#include <map>

#include <Eigen/Dense>

#include "laa/instances.hpp"
#include "laa/polynomial.hpp"
#include "laa/prediction.hpp"

namespace laa {

/// Max-CUT neighbourhood-sum estimates.
struct CutEstimates {
  Eigen::VectorXd e_hat;  // (n/|S|) sum_{j in S, j in N(i)} a_hat_j, clamped to [0, n]
  double slack = 0.0;     // (2 eps' + error_guess/|S|) n
};

/// Each occurrence of j in the multiset S with j in N(i) contributes a_hat_j.
CutEstimates estimate_cut_coefficients(const Graph& g, const PredictionBundle& bundle, double epsilon_prime,
                                       int error_guess = 0);

struct EvalEstimate {
  double value = 0.0;
  int degree = 0;
  double slack_bound = 0.0;
};

/// ((2ce+1) d eps + 2ced error/|S|) n^d; zero for d = 0.
double estimate_slack(int d, double c, double epsilon, double error_guess, int sample_size, int n);

/// Recursive sampled evaluation of every sub-polynomial p_{prefix} of one
/// root polynomial. Estimates are memoized by prefix, so the estimate of a
/// given sub-polynomial is identical wherever it is used.
class PolynomialEstimator {
 public:
  PolynomialEstimator(const SmoothPolynomial& p, const PredictionBundle& bundle);

  /// Estimate of p_{prefix}(a); the empty prefix estimates p(a).
  double estimate(const Monomial& prefix);

  const SmoothPolynomial& polynomial() const { return p_; }
  int sample_size() const { return sample_size_; }

 private:
  const SmoothPolynomial& p_;
  int sample_size_;
  double scale_;                      // n / |S|
  std::map<int, int> positive_hits_;  // sampled j with a_hat_j = 1 -> multiplicity
  std::map<Monomial, double> memo_;
};

/// Sampled estimate of p(a); slack_bound is the accuracy bound for the given
/// eps and error guess using p's own smoothness certificate.
EvalEstimate evaluate_recursive(const SmoothPolynomial& p, const PredictionBundle& bundle, double epsilon = 0.0,
                                double error_guess = 0.0);

}  // namespace laa

#endif  // LAA_ESTIMATOR_HPP
