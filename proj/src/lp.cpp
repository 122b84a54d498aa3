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

#include "laa/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/LU>

namespace laa {

double LinearConstraint::activity(const Eigen::VectorXd& x) const {
  double sum = 0.0;
  for (Eigen::SparseVector<double>::InnerIterator it(coeffs); it; ++it) sum += it.value() * x(it.index());
  return sum;
}

LinearConstraint make_constraint(const Eigen::VectorXd& dense, double lower, double upper) {
  LinearConstraint c;
  c.coeffs.resize(dense.size());
  for (Eigen::Index i = 0; i < dense.size(); ++i)
    if (dense(i) != 0.0) c.coeffs.insert(i) = dense(i);
  c.lower = lower;
  c.upper = upper;
  return c;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kSolverFailure: return "solver_failure";
  }
  return "unknown";
}

bool check_feasible(const LpProblem& problem, const Eigen::VectorXd& x, double tolerance) {
  if (x.size() != problem.n) return false;
  if ((x.array() < -tolerance).any() || (x.array() > 1.0 + tolerance).any()) return false;
  for (const auto& c : problem.constraints) {
    const double v = c.activity(x);
    if (v < c.lower - tolerance || v > c.upper + tolerance) return false;
  }
  return true;
}

namespace {

enum class VarState : std::uint8_t { kBasic, kAtLower, kAtUpper };
enum class RunResult { kOptimal, kUnbounded, kIterationLimit, kNumerical };

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-9;

// Variables: n structurals (columns of `a_`), one logical per row (column
// -e_i, bounded by the row range) and one artificial per row whose start
// activity lies outside its range (column sign * e_row).
class BoundedSimplex {
 public:
  BoundedSimplex(Eigen::MatrixXd a, std::vector<double> row_lo, std::vector<double> row_hi, const LpOptions& options)
      : a_(std::move(a)), m_(static_cast<int>(a_.rows())), n_(static_cast<int>(a_.cols())), options_(options) {
    const int total_guess = n_ + 2 * m_;
    lo_.reserve(total_guess);
    hi_.reserve(total_guess);
    for (int j = 0; j < n_; ++j) {
      lo_.push_back(0.0);
      hi_.push_back(1.0);
    }
    for (int i = 0; i < m_; ++i) {
      lo_.push_back(row_lo[i]);
      hi_.push_back(row_hi[i]);
    }
    value_.assign(n_ + m_, 0.0);
    state_.assign(n_ + m_, VarState::kAtLower);
    head_.assign(m_, -1);

    for (int i = 0; i < m_; ++i) {
      const int logical = n_ + i;
      if (lo_[logical] <= 0.0 && 0.0 <= hi_[logical]) {
        head_[i] = logical;
        state_[logical] = VarState::kBasic;
        continue;
      }
      const bool below = lo_[logical] > 0.0;
      const double v = below ? lo_[logical] : hi_[logical];
      state_[logical] = below ? VarState::kAtLower : VarState::kAtUpper;
      value_[logical] = v;
      // row: a.x - s + sign * w = 0 with x = 0 gives w = v / sign = |v|.
      art_row_.push_back(i);
      art_sign_.push_back(v > 0.0 ? 1.0 : -1.0);
      lo_.push_back(0.0);
      hi_.push_back(kInf);
      value_.push_back(std::abs(v));
      state_.push_back(VarState::kBasic);
      head_[i] = static_cast<int>(lo_.size()) - 1;
    }
    total_ = static_cast<int>(lo_.size());
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    for (int r = 0; r < m_; ++r) {
      const int j = head_[r];
      if (j >= n_ + m_) binv_(r, r) = art_sign_[j - n_ - m_];
      else binv_(r, r) = -1.0;
    }
    max_iterations_ = options_.max_iterations > 0 ? options_.max_iterations : 200 * (m_ + total_) + 1000;
  }

  bool has_artificials() const { return total_ > n_ + m_; }

  double artificial_sum() const {
    double sum = 0.0;
    for (int j = n_ + m_; j < total_; ++j) sum += value_[j];
    return sum;
  }

  double max_abs_row_bound() const {
    double b = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (std::isfinite(lo_[n_ + i])) b = std::max(b, std::abs(lo_[n_ + i]));
      if (std::isfinite(hi_[n_ + i])) b = std::max(b, std::abs(hi_[n_ + i]));
    }
    return b;
  }

  void fix_artificials() {
    for (int j = n_ + m_; j < total_; ++j) {
      hi_[j] = 0.0;
      if (state_[j] != VarState::kBasic) {
        state_[j] = VarState::kAtLower;
        value_[j] = 0.0;
      }
    }
  }

  // Minimizes cost . v over the current feasible basis.
  RunResult run(const Eigen::VectorXd& cost) {
    int since_refactor = 0;
    while (true) {
      if (iterations_ >= max_iterations_) return RunResult::kIterationLimit;
      Eigen::VectorXd cb(m_);
      for (int r = 0; r < m_; ++r) cb(r) = cost(head_[r]);
      const Eigen::VectorXd y = binv_.transpose() * cb;

      int entering = -1;
      double direction = 0.0;
      for (int j = 0; j < total_ && entering < 0; ++j) {
        if (state_[j] == VarState::kBasic || hi_[j] <= lo_[j]) continue;
        const double d = cost(j) - column_dot(j, y);
        if (state_[j] == VarState::kAtLower && d < -kCostTol) {
          entering = j;
          direction = 1.0;
        } else if (state_[j] == VarState::kAtUpper && d > kCostTol) {
          entering = j;
          direction = -1.0;
        }
      }
      if (entering < 0) return RunResult::kOptimal;
      ++iterations_;

      const Eigen::VectorXd alpha = binv_times_column(entering);
      // Basic values move by -direction * t * alpha.
      double best = kInf;
      int leave_row = -1;
      for (int r = 0; r < m_; ++r) {
        const double rate = direction * alpha(r);
        if (std::abs(alpha(r)) <= kPivotTol) continue;
        const int b = head_[r];
        double limit;
        if (rate > 0.0) {
          if (!std::isfinite(lo_[b])) continue;
          limit = (value_[b] - lo_[b]) / rate;
        } else {
          if (!std::isfinite(hi_[b])) continue;
          limit = (hi_[b] - value_[b]) / -rate;
        }
        limit = std::max(limit, 0.0);
        if (leave_row < 0) {
          best = limit;
          leave_row = r;
          continue;
        }
        // Bland: among tied ratios the lowest variable index leaves.
        const double tie = 1e-12 * std::max(1.0, best);
        if (limit < best - tie || (limit <= best + tie && b < head_[leave_row])) {
          best = std::min(best, limit);
          leave_row = r;
        }
      }
      const double flip = hi_[entering] - lo_[entering];
      if (flip <= best) {
        if (!std::isfinite(flip)) return RunResult::kUnbounded;
        move_basics(alpha, direction * flip);
        state_[entering] = direction > 0 ? VarState::kAtUpper : VarState::kAtLower;
        value_[entering] = direction > 0 ? hi_[entering] : lo_[entering];
        continue;
      }
      if (leave_row < 0) return RunResult::kUnbounded;

      move_basics(alpha, direction * best);
      const int leaving = head_[leave_row];
      const bool to_lower = direction * alpha(leave_row) > 0.0;
      state_[leaving] = to_lower ? VarState::kAtLower : VarState::kAtUpper;
      value_[leaving] = to_lower ? lo_[leaving] : hi_[leaving];
      value_[entering] += direction * best;
      state_[entering] = VarState::kBasic;
      head_[leave_row] = entering;

      const double pivot = alpha(leave_row);
      const Eigen::RowVectorXd pivot_row = binv_.row(leave_row) / pivot;
      binv_.noalias() -= alpha * pivot_row;
      binv_.row(leave_row) = pivot_row;

      if (++since_refactor >= options_.refactor_interval) {
        since_refactor = 0;
        if (!refactor()) return RunResult::kNumerical;
      }
    }
  }

  bool refactor() {
    Eigen::MatrixXd basis(m_, m_);
    for (int r = 0; r < m_; ++r) basis.col(r) = column(head_[r]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (!lu.isInvertible()) return false;
    binv_ = lu.inverse();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m_);
    for (int j = 0; j < total_; ++j)
      if (state_[j] != VarState::kBasic && value_[j] != 0.0) rhs -= value_[j] * column(j);
    const Eigen::VectorXd xb = binv_ * rhs;
    for (int r = 0; r < m_; ++r) value_[head_[r]] = xb(r);
    return true;
  }

  Eigen::VectorXd structural_values() const {
    Eigen::VectorXd x(n_);
    for (int j = 0; j < n_; ++j) x(j) = value_[j];
    return x;
  }

  int iterations() const { return iterations_; }
  int structurals() const { return n_; }
  int total() const { return total_; }

 private:
  Eigen::VectorXd column(int j) const {
    if (j < n_) return a_.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m_);
    if (j < n_ + m_) e(j - n_) = -1.0;
    else e(art_row_[j - n_ - m_]) = art_sign_[j - n_ - m_];
    return e;
  }

  double column_dot(int j, const Eigen::VectorXd& y) const {
    if (j < n_) return a_.col(j).dot(y);
    if (j < n_ + m_) return -y(j - n_);
    const int k = j - n_ - m_;
    return art_sign_[k] * y(art_row_[k]);
  }

  Eigen::VectorXd binv_times_column(int j) const {
    if (j < n_) return binv_ * a_.col(j);
    if (j < n_ + m_) return -binv_.col(j - n_);
    const int k = j - n_ - m_;
    return art_sign_[k] * binv_.col(art_row_[k]);
  }

  void move_basics(const Eigen::VectorXd& alpha, double step) {
    for (int r = 0; r < m_; ++r) value_[head_[r]] -= step * alpha(r);
  }

  Eigen::MatrixXd a_;
  int m_;
  int n_;
  LpOptions options_;
  std::vector<double> lo_, hi_, value_;
  std::vector<VarState> state_;
  std::vector<int> head_;
  std::vector<int> art_row_;
  std::vector<double> art_sign_;
  int total_ = 0;
  Eigen::MatrixXd binv_;
  int iterations_ = 0;
  int max_iterations_ = 0;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const LpOptions& options) {
  const int n = problem.n;
  if (n < 1 || problem.objective.size() != n) throw std::invalid_argument("solve_lp: malformed problem");
  if (!problem.objective.allFinite()) throw std::invalid_argument("solve_lp: non-finite objective");

  LpSolution out;
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(problem.constraints.size()); ++i) {
    const auto& c = problem.constraints[i];
    if (c.coeffs.size() != n) throw std::invalid_argument("solve_lp: constraint dimension mismatch");
    if (std::isnan(c.lower) || std::isnan(c.upper)) throw std::invalid_argument("solve_lp: NaN bound");
    const double tol = options.feasibility_tolerance * (1.0 + std::min(std::abs(c.lower), std::abs(c.upper)));
    if (c.lower > c.upper + tol) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    if (c.coeffs.nonZeros() == 0) {
      if (c.lower > tol || c.upper < -tol) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
      continue;
    }
    if (!std::isfinite(c.lower) && !std::isfinite(c.upper)) continue;
    kept.push_back(i);
  }

  const int m = static_cast<int>(kept.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, n);
  std::vector<double> lo(m), hi(m);
  for (int r = 0; r < m; ++r) {
    const auto& c = problem.constraints[kept[r]];
    for (Eigen::SparseVector<double>::InnerIterator it(c.coeffs); it; ++it) a(r, it.index()) = it.value();
    lo[r] = c.lower;
    hi[r] = std::max(c.upper, c.lower);
  }

  BoundedSimplex simplex(std::move(a), lo, hi, options);
  if (simplex.has_artificials()) {
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(simplex.total());
    phase1.tail(simplex.total() - simplex.structurals() - m).setOnes();
    const RunResult r = simplex.run(phase1);
    if (r != RunResult::kOptimal || !simplex.refactor()) {
      out.status = LpStatus::kSolverFailure;
      out.iterations = simplex.iterations();
      return out;
    }
    if (simplex.artificial_sum() > options.feasibility_tolerance * (1.0 + simplex.max_abs_row_bound())) {
      out.status = LpStatus::kInfeasible;
      out.iterations = simplex.iterations();
      return out;
    }
    simplex.fix_artificials();
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(simplex.total());
  phase2.head(n) = -problem.objective;
  const RunResult r = simplex.run(phase2);
  out.iterations = simplex.iterations();
  if (r == RunResult::kUnbounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  if (r != RunResult::kOptimal || !simplex.refactor()) {
    out.status = LpStatus::kSolverFailure;
    return out;
  }
  Eigen::VectorXd x = simplex.structural_values().cwiseMax(0.0).cwiseMin(1.0);
  if (!check_feasible(problem, x, options.feasibility_tolerance)) {
    out.status = LpStatus::kSolverFailure;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.objective_value = problem.objective.dot(x);
  out.x = std::move(x);
  return out;
}

}  // namespace laa
