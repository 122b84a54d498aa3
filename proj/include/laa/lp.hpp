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

#ifndef LAA_LP_HPP
#define LAA_LP_HPP

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace laa {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// lower <= coeffs . x <= upper; either side may be infinite.
struct LinearConstraint {
  Eigen::SparseVector<double> coeffs;
  double lower = -kInf;
  double upper = kInf;

  double activity(const Eigen::VectorXd& x) const;
};

/// Builds a constraint from a dense coefficient vector, dropping exact zeros.
LinearConstraint make_constraint(const Eigen::VectorXd& dense, double lower, double upper);

/// maximize objective . x  s.t. constraints, x in [0,1]^n.
struct LpProblem {
  int n = 0;
  Eigen::VectorXd objective;
  std::vector<LinearConstraint> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kSolverFailure };

std::string to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kSolverFailure;
  Eigen::VectorXd x;
  double objective_value = 0.0;
  int iterations = 0;
};

struct LpOptions {
  double feasibility_tolerance = 1e-7;
  /// Pivots between fresh factorizations of the basis.
  int refactor_interval = 64;
  int max_iterations = 0;  // 0: derived from problem size
};

/// Bounded-variable revised simplex with Bland's rule. Two-sided rows carry
/// a logical variable bounded by [lower, upper]; infeasibility is certified
/// by a positive phase-1 optimum. A basis that fails the final feasibility
/// check is reported as kSolverFailure, never as optimal.
LpSolution solve_lp(const LpProblem& problem, const LpOptions& options = {});

/// True iff 0 <= x <= 1 and every constraint holds, all within tolerance.
bool check_feasible(const LpProblem& problem, const Eigen::VectorXd& x, double tolerance);

/// CPLEX LP text (subset): Maximize / Subject To / Bounds / End. Two-sided
/// rows are written as a pair of one-sided rows.
std::string write_lp_text(const LpProblem& problem);
/// Reads the subset emitted by write_lp_text (variables named x<k>).
LpProblem read_lp_text(std::string_view text);

}  // namespace laa

#endif  // LAA_LP_HPP
