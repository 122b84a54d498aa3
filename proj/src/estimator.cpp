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

#include "laa/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace laa {

CutEstimates estimate_cut_coefficients(const Graph& g, const PredictionBundle& bundle, double epsilon_prime,
                                       int error_guess) {
  const int s = bundle.sample.size();
  if (s == 0) throw std::invalid_argument("estimate_cut_coefficients: empty sample");
  const int n = g.n();
  const double scale = static_cast<double>(n) / s;
  CutEstimates est{Eigen::VectorXd::Zero(n), (2.0 * epsilon_prime + static_cast<double>(error_guess) / s) * n};
  for (int j : bundle.sample.indices) {
    if (j < 0 || j >= n) throw DimensionError("estimate_cut_coefficients: sampled index out of range");
    if (bundle.bit(j) == 0) continue;
    for (int i : g.neighbors(j)) est.e_hat(i) += scale;
  }
  est.e_hat = est.e_hat.cwiseMax(0.0).cwiseMin(static_cast<double>(n));
  return est;
}

double estimate_slack(int d, double c, double epsilon, double error_guess, int sample_size, int n) {
  if (d <= 0) return 0.0;
  const double ce = c * std::numbers::e;
  return ((2.0 * ce + 1.0) * d * epsilon + 2.0 * ce * d * error_guess / sample_size) * std::pow(n, d);
}

PolynomialEstimator::PolynomialEstimator(const SmoothPolynomial& p, const PredictionBundle& bundle)
    : p_(p), sample_size_(bundle.sample.size()) {
  if (sample_size_ == 0) throw std::invalid_argument("PolynomialEstimator: empty sample");
  scale_ = static_cast<double>(p.n()) / sample_size_;
  for (int j : bundle.sample.indices) {
    if (j < 0 || j >= p.n()) throw DimensionError("PolynomialEstimator: sampled index out of range");
    if (bundle.bit(j) == 1) ++positive_hits_[j];
  }
}

double PolynomialEstimator::estimate(const Monomial& prefix) {
  if (auto it = memo_.find(prefix); it != memo_.end()) return it->second;

  const auto& terms = p_.monomials();
  double constant = prefix.empty() ? p_.constant() : 0.0;
  bool has_higher = false;
  for (auto it = terms.lower_bound(prefix); it != terms.end(); ++it) {
    const Monomial& m = it->first;
    if (m.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), m.begin())) break;
    if (m.size() == prefix.size()) {
      constant = it->second;
    } else {
      has_higher = true;
      break;
    }
  }
  // A key equal to the prefix sorts first, so a longer key seen first means
  // the prefix itself carries no coefficient.

  double value = constant;
  if (has_higher) {
    const int last = prefix.empty() ? -1 : prefix.back();
    double sum = 0.0;
    Monomial child = prefix;
    child.push_back(0);
    for (auto it = positive_hits_.upper_bound(last); it != positive_hits_.end(); ++it) {
      child.back() = it->first;
      sum += it->second * estimate(child);
    }
    value += scale_ * sum;
  }
  memo_.emplace(prefix, value);
  return value;
}

EvalEstimate evaluate_recursive(const SmoothPolynomial& p, const PredictionBundle& bundle, double epsilon,
                                double error_guess) {
  PolynomialEstimator est(p, bundle);
  const int d = p.degree();
  const double c = smoothness(p).c;
  return {est.estimate({}), d, estimate_slack(d, c, epsilon, error_guess, bundle.sample.size(), p.n())};
}

}  // namespace laa
