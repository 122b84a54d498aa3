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

#include "laa/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "laa/estimator.hpp"
#include "laa/linearize.hpp"
#include "laa/lp.hpp"
#include "laa/oracle.hpp"
#include "laa/pipelines.hpp"
#include "laa/reductions.hpp"
#include "laa/rounding.hpp"

namespace laa {

namespace {

BinaryVector bits_of(unsigned mask, int n) {
  BinaryVector x(n);
  for (int i = 0; i < n; ++i) x(i) = (mask >> i) & 1u;
  return x;
}

std::string check_encodings(std::uint64_t seed) {
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint64_t s = derive_seed(seed, trial);
    const int n = 4 + trial % 5;
    std::vector<Problem> problems{
        {ProblemKind::kMaxCut, generate_dense_graph(n, 0.6, s), 0},
        {ProblemKind::kMaxDicut, generate_dense_digraph(n, 0.4, s), 0},
        {ProblemKind::kHypercut, generate_uniform_hypergraph(n, 3, n, s), 0},
        {ProblemKind::kDensest, generate_dense_graph(n, 0.5, s), n / 2},
        {ProblemKind::kMaxKSat, generate_random_cnf(n, 3, 2 * n, s), 0},
    };
    for (const auto& prob : problems) {
      const SmoothPolynomial p = to_pip(prob).objective;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const BinaryVector x = bits_of(mask, n);
        if (evaluate_exact(p, x) != native_value(prob, x)) return to_string(prob.kind) + " encoding mismatch";
      }
    }
  }
  return "";
}

std::string check_decomposition(std::uint64_t seed) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    const SmoothPolynomial p = random_polynomial(n, 1 + trial % 3, 6, derive_seed(seed, trial));
    if (!(reassemble(decompose(p), n) == p)) return "reassembly differs from the original polynomial";
  }
  return "";
}

std::string check_evaluate(std::uint64_t seed) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    const SmoothPolynomial p = random_polynomial(n, 1 + trial % 3, 6, derive_seed(seed, trial));
    const BinaryVector a = bits_of(static_cast<unsigned>(derive_seed(seed, 100 + trial)) & ((1u << n) - 1), n);
    const PredictionBundle b = perfect_predictor(a, full_coverage_sample(n));
    const double exact = evaluate_exact(p, a);
    const double est = evaluate_recursive(p, b).value;
    if (std::abs(est - exact) > 1e-9 * std::max(1.0, std::abs(exact))) return "estimate differs from exact value";
  }
  return "";
}

std::string check_linearize(std::uint64_t seed) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 4;
    const SmoothPolynomial p = random_polynomial(n, 1 + trial % 3, 8, derive_seed(seed, trial));
    const BinaryVector a = bits_of(static_cast<unsigned>(derive_seed(seed, 200 + trial)) & ((1u << n) - 1), n);
    const PredictionBundle b = perfect_predictor(a, full_coverage_sample(n));
    const double v = evaluate_exact(p, a);
    const LinearizeResult r = linearize({p, v - 0.5, v + 0.5}, b, {});
    const Eigen::VectorXd x = a.cast<double>();
    for (const auto& row : r.constraints) {
      const double act = row.activity(x);
      if (act < row.lower - 1e-9 || act > row.upper + 1e-9) return "planted optimum violates a linearized row";
    }
  }
  return "";
}

std::string check_lp(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    LpProblem lp;
    lp.n = n;
    lp.objective.resize(n);
    for (int j = 0; j < n; ++j) lp.objective(j) = coef(rng);
    for (int r = 0; r < 3; ++r) {
      Eigen::VectorXd a(n);
      for (int j = 0; j < n; ++j) a(j) = coef(rng);
      lp.constraints.push_back(make_constraint(a, -1.0 - trial % 3, 1.0 + trial % 2));
    }
    const LpSolution sol = solve_lp(lp);
    // The origin is always feasible, so the LP must be solved; no binary
    // feasible point may beat it.
    if (sol.status != LpStatus::kOptimal) return "feasible LP reported " + to_string(sol.status);
    if (!check_feasible(lp, sol.x, 1e-7)) return "LP solution violates a constraint";
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const Eigen::VectorXd x = bits_of(mask, n).cast<double>();
      if (check_feasible(lp, x, 1e-9) && lp.objective.dot(x) > sol.objective_value + 1e-7)
        return "binary point beats the LP optimum";
    }
  }
  LpProblem bad;
  bad.n = 2;
  bad.objective = Eigen::VectorXd::Zero(2);
  bad.constraints.push_back(make_constraint(Eigen::Vector2d(1, 1), 2.5, kInf));
  if (solve_lp(bad).status != LpStatus::kInfeasible) return "infeasible LP not detected";
  return "";
}

std::string check_rounding(std::uint64_t seed) {
  const int n = 2000;
  const Eigen::VectorXd y = Eigen::VectorXd::Constant(n, 0.5);
  int within = 0;
  for (int t = 0; t < 100; ++t)
    within += std::abs(round_once(y, derive_seed(seed, t)).sum() - n / 2.0) <= 3.0 * std::sqrt(n / 4.0);
  if (within < 95) return "rounding concentration: " + std::to_string(within) + "/100 within 3 sigma";
  for (int t = 0; t < 50; ++t) {
    const BinaryVector z = round_once(y.head(20), derive_seed(seed, 1000 + t));
    if (repair_cardinality(z, 7, y.head(20)).sum() != 7) return "cardinality repair missed k";
  }
  return "";
}

std::string check_oracle(std::uint64_t seed) {
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + trial % 6;
    const SmoothPolynomial p = random_polynomial(n, 3, 10, derive_seed(seed, trial));
    const OracleResult r = brute_force_max(p, {}, 2);
    double best = -kInf;
    for (unsigned mask = 0; mask < (1u << n); ++mask) best = std::max(best, evaluate_exact(p, bits_of(mask, n)));
    if (std::abs(best - r.value) > 1e-9) return "oracle value differs from naive enumeration";
  }
  return "";
}

std::string check_fallback(std::uint64_t seed) {
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = generate_dense_graph(12, 0.6, derive_seed(seed, trial));
    const OracleResult opt = solve_exact({ProblemKind::kMaxCut, g, 0}, 1);
    const SampleSet s = draw_sample(12, 12, derive_seed(seed, 50 + trial));
    const PredictionBundle bad = noisy_predictor(opt.x, s, 1.0, derive_seed(seed, 60 + trial));
    CutOptions o;
    o.seed = derive_seed(seed, 70 + trial);
    const RunReport r = laa_cut(g, bad, 0.2, o);
    if (2.0 * r.value < static_cast<double>(g.edge_count())) return "laa_cut below |E|/2";
    if (r.value > opt.value) return "laa_cut above the optimum";
  }
  return "";
}

}  // namespace

std::vector<CheckResult> run_self_checks(std::uint64_t seed) {
  const std::vector<std::pair<std::string, std::function<std::string(std::uint64_t)>>> suites{
      {"encodings", check_encodings}, {"decomposition", check_decomposition}, {"evaluate", check_evaluate},
      {"linearize", check_linearize}, {"lp", check_lp},                      {"rounding", check_rounding},
      {"oracle", check_oracle},       {"fallback", check_fallback},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : suites) {
    CheckResult r{name, false, ""};
    try {
      r.detail = fn(seed);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace laa
