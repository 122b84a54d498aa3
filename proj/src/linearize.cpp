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

#include "laa/linearize.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace laa {

namespace {

using RowKey = std::tuple<std::vector<std::pair<Eigen::Index, double>>, double, double>;

class Linearizer {
 public:
  Linearizer(const SmoothPolynomial& root, const PredictionBundle& bundle, const LinearizeParams& params)
      : estimator_(root, bundle),
        n_(root.n()),
        s_(bundle.sample.size()),
        c_(params.c >= 0.0 ? params.c : smoothness(root).c),
        params_(params) {}

  void run(const SmoothPolynomial& p, Monomial& prefix, int degree, double lower, double upper) {
    if (params_.clamp) {
      lower = std::max(lower, p.lower_bound());
      upper = std::min(upper, p.upper_bound());
    }
    const double t = p.constant();
    if (p.degree() == 0) {
      // Nothing varies; only an interval that excludes t matters.
      if (t < lower - 1e-12 || t > upper + 1e-12) emit(Eigen::VectorXd::Zero(n_), lower - t, upper - t);
      if (prefix.empty()) surrogate_ = Eigen::VectorXd::Zero(n_);
      return;
    }
    if (p.degree() == 1) {
      const Eigen::VectorXd a = p.linear_part();
      emit(a, lower - t, upper - t);
      if (prefix.empty()) {
        surrogate_ = a;
        surrogate_constant_ = t;
      }
      return;
    }

    const Decomposition dec = decompose(p);
    const double child_slack = slack(degree - 1);
    Eigen::VectorXd e_hat = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < n_; ++i) {
      const SmoothPolynomial& part = dec.parts[i];
      if (part.is_zero()) continue;
      prefix.push_back(i);
      e_hat(i) = estimator_.estimate(prefix);
      run(part, prefix, degree - 1, e_hat(i) - child_slack, e_hat(i) + child_slack);
      prefix.pop_back();
    }
    const double own_slack = slack(degree);
    emit(e_hat, lower - own_slack - t, upper + own_slack - t);
    if (prefix.empty()) {
      surrogate_ = e_hat;
      surrogate_constant_ = t;
    }
  }

  LinearizeResult result() && { return {std::move(rows_), std::move(surrogate_), surrogate_constant_}; }

 private:
  double slack(int degree) const { return estimate_slack(degree, c_, params_.epsilon, params_.error_guess, s_, n_); }

  void emit(const Eigen::VectorXd& a, double lower, double upper) {
    LinearConstraint row = make_constraint(a, lower, upper);
    std::vector<std::pair<Eigen::Index, double>> entries;
    for (Eigen::SparseVector<double>::InnerIterator it(row.coeffs); it; ++it) entries.emplace_back(it.index(), it.value());
    if (!seen_.emplace(std::move(entries), lower, upper).second) return;
    rows_.push_back(std::move(row));
  }

  PolynomialEstimator estimator_;
  int n_;
  int s_;
  double c_;
  LinearizeParams params_;
  std::vector<LinearConstraint> rows_;
  std::set<RowKey> seen_;
  Eigen::VectorXd surrogate_;
  double surrogate_constant_ = 0.0;
};

}  // namespace

LinearizeResult linearize(const PolyConstraint& constraint, const PredictionBundle& bundle,
                          const LinearizeParams& params) {
  Linearizer lin(constraint.p, bundle, params);
  Monomial prefix;
  lin.run(constraint.p, prefix, constraint.p.degree(), constraint.lower, constraint.upper);
  return std::move(lin).result();
}

int one_sided_count(const std::vector<LinearConstraint>& rows) {
  int count = 0;
  for (const auto& r : rows) count += std::isfinite(r.lower) + std::isfinite(r.upper);
  return count;
}

LinearSystem assemble_dip(const SmoothPolynomial& p, double M, const PredictionBundle& bundle,
                          const LinearizeParams& params, const std::vector<PolyConstraint>& side) {
  if (p.degree() < 1) throw std::invalid_argument("assemble_dip: objective must have degree >= 1");
  LinearSystem sys;
  sys.n = p.n();
  sys.target = M;
  LinearizeResult top = linearize({p, M, kInf}, bundle, params);
  sys.objective = top.surrogate;
  sys.constraints = std::move(top.constraints);
  for (const auto& c : side) {
    if (c.p.n() != p.n()) throw DimensionError("assemble_dip: side constraint over a different variable count");
    LinearizeResult r = linearize(c, bundle, params);
    for (auto& row : r.constraints) sys.constraints.push_back(std::move(row));
  }
  return sys;
}

SearchResult binary_search_M(double upper, double eta, const std::function<bool(double)>& oracle) {
  if (!(upper > 0.0) || !(eta > 0.0)) throw std::invalid_argument("binary_search_M: need upper > 0 and eta > 0");
  // Candidates k * eta for k = 1..K-1, then `upper` itself as candidate K.
  const long long count = std::max<long long>(1, static_cast<long long>(std::ceil(upper / eta - 1e-9)));
  auto candidate = [&](long long k) { return k >= count ? upper : static_cast<double>(k) * eta; };

  SearchResult result;
  long long lo = 0;  // index of the best accepted candidate, 0 = none
  long long hi = count;
  while (lo < hi) {
    const long long mid = lo + (hi - lo + 1) / 2;
    ++result.probes;
    if (oracle(candidate(mid)))
      lo = mid;
    else
      hi = mid - 1;
  }
  result.found = lo > 0;
  result.value = result.found ? candidate(lo) : 0.0;
  return result;
}

}  // namespace laa
