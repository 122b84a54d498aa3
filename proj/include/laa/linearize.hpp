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

#ifndef LAA_LINEARIZE_HPP
#define LAA_LINEARIZE_HPP

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "laa/estimator.hpp"
#include "laa/lp.hpp"
#include "laa/polynomial.hpp"
#include "laa/prediction.hpp"

namespace laa {

/// lower <= p(x) <= upper.
struct PolyConstraint {
  SmoothPolynomial p;
  double lower = -kInf;
  double upper = kInf;
};

/// Accuracy parameters shared by every level of the recursion.
struct LinearizeParams {
  double epsilon = 0.0;
  double error_guess = 0.0;
  /// Smoothness constant used in the slack terms; < 0 means "use p's own
  /// certificate".
  double c = -1.0;
  /// Floor/cap each interval at the range of its polynomial over [0,1]^n.
  bool clamp = true;
};

struct LinearizeResult {
  std::vector<LinearConstraint> constraints;
  /// Top-level linear surrogate t + sum_i x_i e_hat_i of p (p itself when
  /// p is linear).
  Eigen::VectorXd surrogate;
  double surrogate_constant = 0.0;
};

/// Replaces a degree-d constraint by linear constraints: p's decomposition
/// parts p_i are estimated as e_hat_i, each l_i <= p_i <= u_i is linearized
/// recursively with slack estimate_slack(d-1, ...), and the surrogate
/// t + sum x_i e_hat_i is bounded by [L, U] widened by estimate_slack(d, ...).
/// Identical rows are emitted once; zero parts emit nothing.
LinearizeResult linearize(const PolyConstraint& constraint, const PredictionBundle& bundle,
                          const LinearizeParams& params);

/// Number of one-sided rows (a two-sided row counts twice).
int one_sided_count(const std::vector<LinearConstraint>& rows);

/// Linear relaxation of a (degree-d) integer program over [0,1]^n.
struct LinearSystem {
  int n = 0;
  /// Linear objective to maximize (surrogate of p for the general path).
  Eigen::VectorXd objective;
  /// Feasibility target M when built by assemble_dip.
  double target = 0.0;
  std::vector<LinearConstraint> constraints;

  LpProblem to_lp() const { return {n, objective, constraints}; }
  int one_sided_rows() const { return one_sided_count(constraints); }
};

/// Encodes p(x) >= M plus the side constraints. Every polynomial is
/// linearized against the same bundle; side constraints use their own
/// certificates unless params.c is set.
LinearSystem assemble_dip(const SmoothPolynomial& p, double M, const PredictionBundle& bundle,
                          const LinearizeParams& params, const std::vector<PolyConstraint>& side = {});

struct SearchResult {
  double value = 0.0;
  int probes = 0;
  /// False when even the smallest probe failed; value is then 0.
  bool found = false;
};

/// Largest M in the grid {eta, 2 eta, ...} ∪ {upper} (clipped to (0, upper])
/// accepted by a monotone oracle. Uses at most ceil(log2(ceil(upper/eta)+1))
/// oracle calls.
SearchResult binary_search_M(double upper, double eta, const std::function<bool(double)>& oracle);

}  // namespace laa

#endif  // LAA_LINEARIZE_HPP
