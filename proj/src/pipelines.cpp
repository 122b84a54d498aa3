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

#include "laa/pipelines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "laa/estimator.hpp"
#include "laa/linearize.hpp"
#include "laa/rounding.hpp"

namespace laa {

std::string to_string(RunStatus status) {
  return status == RunStatus::kOk ? "ok" : "pipeline_failure";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t rounding_seed(std::uint64_t base, int guess, int repeat) {
  const std::uint64_t s = derive_seed(base, static_cast<std::uint64_t>(guess));
  return repeat == 0 ? s : derive_seed(s, static_cast<std::uint64_t>(repeat));
}

}  // namespace

std::vector<int> error_guesses(int sample_size, bool geometric) {
  std::vector<int> out;
  if (!geometric) {
    out.resize(sample_size + 1);
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  out.push_back(0);
  for (long long g = 1; g < sample_size; g *= 2) out.push_back(static_cast<int>(g));
  if (sample_size > 0) out.push_back(sample_size);
  return out;
}

RunReport la_ptas_cut(const Graph& g, const PredictionBundle& bundle, double epsilon, const CutOptions& options) {
  const auto start = Clock::now();
  if (g.directed()) throw std::invalid_argument("la_ptas_cut: graph must be undirected");
  if (!(epsilon > 0.0)) throw std::invalid_argument("la_ptas_cut: epsilon must be positive");
  const int n = g.n();
  const int s = bundle.sample.size();
  if (s == 0) throw std::invalid_argument("la_ptas_cut: empty sample");
  const double delta = options.delta >= 0.0 ? options.delta : density(g).delta;
  const double eps_prime = epsilon * delta / 16.0;

  RunReport report;
  report.epsilon = epsilon;
  report.sample_size = s;
  report.seed = options.seed;
  report.status = RunStatus::kPipelineFailure;
  report.z = BinaryVector::Zero(n);

  const std::vector<int> guesses =
      options.fixed_error_guess ? std::vector<int>{*options.fixed_error_guess} : error_guesses(s, options.geometric_guesses);
  const CutEstimates base = estimate_cut_coefficients(g, bundle, eps_prime);
  const double budget = linear_rounding_budget(1.0, n, options.f);

  LpProblem lp;
  lp.n = n;
  lp.objective.resize(n);
  for (int i = 0; i < n; ++i) lp.objective(i) = g.degree(i) - base.e_hat(i);
  std::vector<Eigen::VectorXd> rows(n, Eigen::VectorXd::Zero(n));
  for (int i = 0; i < n; ++i)
    for (int j : g.neighbors(i)) rows[i](j) = 1.0;

  int best_cut = -1;
  for (int guess : guesses) {
    ++report.guesses_tried;
    const double slack = (2.0 * eps_prime + static_cast<double>(guess) / s) * n;
    lp.constraints.clear();
    for (int i = 0; i < n; ++i) {
      if (g.degree(i) == 0) continue;
      const double lower = std::max(0.0, base.e_hat(i) - slack);
      const double upper = std::min<double>(g.degree(i), base.e_hat(i) + slack);
      lp.constraints.push_back(make_constraint(rows[i], lower, upper));
    }
    const LpSolution sol = solve_lp(lp, options.lp);
    ++report.lp_solves;
    if (sol.status != LpStatus::kOptimal) continue;
    ++report.feasible_guesses;

    std::vector<MonitoredForm> forms;
    for (int i = 0; i < n; ++i)
      if (g.degree(i) > 0) forms.push_back(linear_form(rows[i], sol.x, budget));
    forms.push_back(linear_form(lp.objective, sol.x, n * budget));
    for (int r = 0; r < std::max(1, options.repeats); ++r) {
      const RoundingOutcome out =
          round_with_retries(sol.x, forms, options.max_round_trials, rounding_seed(options.seed, guess, r));
      const int cut = cut_size(g, out.z);
      if (cut > best_cut) {
        best_cut = cut;
        report.z = out.z;
        report.error_guess_used = guess;
        report.rounding_within_budget = out.within_budget;
        report.status = RunStatus::kOk;
      }
    }
  }
  if (report.status == RunStatus::kOk) {
    report.value = best_cut;
    report.pipeline_value = best_cut;
    report.slack_claimed =
        2.0 * (2.0 * eps_prime + static_cast<double>(report.error_guess_used) / s) * static_cast<double>(n) * n;
  }
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

BinaryVector greedy_local_search_cut(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("greedy_local_search_cut: graph must be undirected");
  const int n = g.n();
  BinaryVector x = BinaryVector::Zero(n);
  auto gain = [&](int v) {
    int same = 0;
    for (int u : g.neighbors(v)) same += x(u) == x(v);
    return 2 * same - g.degree(v);
  };
  for (bool improved = true; improved;) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      if (gain(v) > 0) {
        x(v) = 1 - x(v);
        improved = true;
        break;
      }
    }
  }
  return x;
}

RunReport laa_cut(const Graph& g, const PredictionBundle& bundle, double epsilon, const CutOptions& options) {
  const auto start = Clock::now();
  RunReport report = la_ptas_cut(g, bundle, epsilon, options);
  const BinaryVector fb = greedy_local_search_cut(g);
  const int fb_value = cut_size(g, fb);
  report.fallback_value = fb_value;
  if (report.status != RunStatus::kOk || fb_value > report.value) {
    report.z = fb;
    report.value = fb_value;
    report.fallback_used = true;
  }
  report.status = RunStatus::kOk;
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

namespace {

double combined_smoothness(const PipSpec& pip) {
  double c = smoothness(pip.objective).c;
  for (const auto& con : pip.constraints)
    if (con.p.degree() >= 1) c = std::max(c, smoothness(con.p).c);
  return c;
}

// Recursion slack of a linearized degree-d constraint for a feasible LP point.
double soundness_slack(int d, double c, double eps, double guess, int s, int n) {
  if (d < 2) return 0.0;
  const double ce = c * std::numbers::e;
  return ((4.0 * ce + 2.0) * d * (d - 1) * eps + 4.0 * ce * d * (d - 1) * guess / s) * std::pow(n, d);
}

}  // namespace

RunReport la_ptas(const PipSpec& pip, const PredictionBundle& bundle, double epsilon, const PipOptions& options) {
  const auto start = Clock::now();
  if (!pip.maximize) throw std::invalid_argument("la_ptas: only maximization is supported");
  if (!(epsilon > 0.0)) throw std::invalid_argument("la_ptas: epsilon must be positive");
  const SmoothPolynomial& p = pip.objective;
  const int n = p.n();
  const int s = bundle.sample.size();
  if (s == 0) throw std::invalid_argument("la_ptas: empty sample");
  for (const auto& con : pip.constraints)
    if (con.p.n() != n) throw DimensionError("la_ptas: constraint over a different variable count");

  RunReport report;
  report.epsilon = epsilon;
  report.sample_size = s;
  report.seed = options.seed;
  report.status = RunStatus::kPipelineFailure;
  report.z = BinaryVector::Zero(n);

  const int d = p.degree();
  if (d == 0) {
    if (pip.cardinality) report.z = repair_cardinality(report.z, *pip.cardinality, Eigen::VectorXd::Zero(n));
    report.value = p.constant();
    report.pipeline_value = report.value;
    report.status = RunStatus::kOk;
    report.wall_time_ms = elapsed_ms(start);
    return report;
  }

  int max_degree = d;
  for (const auto& con : pip.constraints) max_degree = std::max(max_degree, con.p.degree());
  const double c = combined_smoothness(pip);
  const double eps_prime = max_degree >= 2 ? epsilon / ((4.0 * c * std::numbers::e + 2.0) * max_degree * (max_degree - 1))
                                           : epsilon;
  const double f = pip_failure_exponent(pip.m() + 1, n, max_degree);
  const double upper = 2.0 * smoothness(p).c * std::numbers::e * std::pow(n, d);
  const std::vector<int> guesses =
      options.fixed_error_guess ? std::vector<int>{*options.fixed_error_guess} : error_guesses(s, options.geometric_guesses);

  double best_value = -kInf;
  int probe = 0;
  auto probe_oracle = [&](double M) {
    bool feasible = false;
    for (int guess : guesses) {
      ++report.guesses_tried;
      const LinearizeParams params{eps_prime, static_cast<double>(guess), c, true};
      const LinearSystem sys = assemble_dip(p, M, bundle, params, pip.constraints);
      const LpSolution sol = solve_lp(sys.to_lp(), options.lp);
      ++report.lp_solves;
      if (sol.status != LpStatus::kOptimal) continue;
      feasible = true;
      ++report.feasible_guesses;

      std::vector<MonitoredForm> forms{polynomial_form(p, sol.x, polynomial_rounding_budget(c, d, n, f))};
      for (const auto& con : pip.constraints)
        forms.push_back(polynomial_form(con.p, sol.x, polynomial_rounding_budget(c, std::max(1, con.p.degree()), n, f)));
      for (int r = 0; r < std::max(1, options.repeats); ++r) {
        const std::uint64_t seed = rounding_seed(derive_seed(options.seed, static_cast<std::uint64_t>(probe)), guess, r);
        const RoundingOutcome out = round_with_retries(sol.x, forms, options.max_round_trials, seed);
        BinaryVector z = out.z;
        if (pip.cardinality) z = repair_cardinality(z, *pip.cardinality, sol.x);
        bool accepted = true;
        for (std::size_t j = 0; j < pip.constraints.size() && accepted; ++j) {
          const auto& con = pip.constraints[j];
          const double tol = soundness_slack(con.p.degree(), c, eps_prime, guess, s, n) + forms[j + 1].budget + 1e-9;
          const double v = evaluate_exact(con.p, z);
          accepted = v >= con.lower - tol && v <= con.upper + tol;
        }
        if (!accepted) continue;
        const double value = evaluate_exact(p, z);
        if (value > best_value) {
          best_value = value;
          report.z = z;
          report.error_guess_used = guess;
          report.rounding_within_budget = out.within_budget;
          report.status = RunStatus::kOk;
        }
      }
    }
    ++probe;
    return feasible;
  };
  const SearchResult search = binary_search_M(upper, options.eta, probe_oracle);
  report.probes = search.probes;

  if (report.status == RunStatus::kOk) {
    report.value = best_value;
    report.pipeline_value = best_value;
    const double ce = c * std::numbers::e;
    report.slack_claimed = (epsilon + 4.0 * ce * d * (d - 1) * report.error_guess_used / s) * std::pow(n, d);
  }
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

Fallback random_assignment_fallback(std::uint64_t seed) {
  return [seed](const PipSpec& pip) {
    const Eigen::VectorXd half = Eigen::VectorXd::Constant(pip.n(), 0.5);
    BinaryVector z = round_once(half, seed);
    if (pip.cardinality) z = repair_cardinality(z, *pip.cardinality, half);
    return z;
  };
}

Fallback greedy_peeling_fallback(const Graph& g, int k) {
  return [g, k](const PipSpec& pip) {
    const int n = g.n();
    if (pip.n() != n) throw DimensionError("greedy_peeling_fallback: graph does not match the PIP");
    if (k < 0 || k > n) throw std::invalid_argument("greedy_peeling_fallback: k outside [0, n]");
    BinaryVector in = BinaryVector::Ones(n);
    std::vector<int> deg(n);
    for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
    for (int remaining = n; remaining > k; --remaining) {
      int victim = -1;
      for (int i = 0; i < n; ++i)
        if (in(i) && (victim < 0 || deg[i] < deg[victim])) victim = i;
      in(victim) = 0;
      for (int u : g.neighbors(victim)) --deg[u];
    }
    return in;
  };
}

Fallback local_search_fallback() {
  return [](const PipSpec& pip) {
    const int n = pip.n();
    const SmoothPolynomial& p = pip.objective;
    BinaryVector x = BinaryVector::Zero(n);
    if (pip.cardinality) {
      const int k = *pip.cardinality;
      if (k < 0 || k > n) throw std::invalid_argument("local_search_fallback: cardinality outside [0, n]");
      x.head(k).setOnes();
      double value = evaluate_exact(p, x);
      for (bool improved = true; improved;) {
        improved = false;
        for (int i = 0; i < n && !improved; ++i) {
          if (!x(i)) continue;
          for (int j = 0; j < n && !improved; ++j) {
            if (x(j)) continue;
            x(i) = 0;
            x(j) = 1;
            const double v = evaluate_exact(p, x);
            if (v > value + 1e-9) {
              value = v;
              improved = true;
            } else {
              x(i) = 1;
              x(j) = 0;
            }
          }
        }
      }
      return x;
    }
    double value = evaluate_exact(p, x);
    for (bool improved = true; improved;) {
      improved = false;
      for (int i = 0; i < n && !improved; ++i) {
        x(i) = 1 - x(i);
        const double v = evaluate_exact(p, x);
        if (v > value + 1e-9) {
          value = v;
          improved = true;
        } else {
          x(i) = 1 - x(i);
        }
      }
    }
    return x;
  };
}

RunReport laa_general(const PipSpec& pip, const PredictionBundle& bundle, double epsilon, const Fallback& fallback,
                      const PipOptions& options) {
  const auto start = Clock::now();
  RunReport report = la_ptas(pip, bundle, epsilon, options);
  const BinaryVector fb = fallback(pip);
  if (fb.size() != pip.n()) throw DimensionError("laa_general: fallback returned a vector of the wrong length");
  const double fb_value = evaluate_exact(pip.objective, fb);
  report.fallback_value = fb_value;
  if (report.status != RunStatus::kOk || fb_value > report.value) {
    report.z = fb;
    report.value = fb_value;
    report.fallback_used = true;
  }
  report.status = RunStatus::kOk;
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

Fallback default_fallback(const Problem& problem, std::uint64_t seed) {
  switch (problem.kind) {
    case ProblemKind::kMaxKSat:
      return random_assignment_fallback(seed);
    case ProblemKind::kDensest:
      return greedy_peeling_fallback(std::get<Graph>(problem.instance), problem.k);
    case ProblemKind::kMaxCut: {
      const Graph g = std::get<Graph>(problem.instance);
      return [g](const PipSpec&) { return greedy_local_search_cut(g); };
    }
    default:
      return local_search_fallback();
  }
}

namespace {

// Additive accuracy handed to the general pipeline for a multiplicative eps.
double general_epsilon(const Problem& problem, double epsilon) {
  DenseParams params;
  params.n = problem.n();
  switch (problem.kind) {
    case ProblemKind::kMaxDicut:
    case ProblemKind::kMaxCut:
      params.delta = density(std::get<Graph>(problem.instance)).delta;
      break;
    case ProblemKind::kDensest: {
      const auto& g = std::get<Graph>(problem.instance);
      params.delta = density(g).delta;
      params.gamma = params.n > 0 ? static_cast<double>(problem.k) / params.n : 0.0;
      break;
    }
    case ProblemKind::kMaxKSat:
      params.k = std::get<CnfFormula>(problem.instance).k();
      break;
    case ProblemKind::kHypercut:
      return epsilon;
  }
  const double e = epsilon_prime(problem.kind, epsilon, params);
  // A zero-density instance still needs a positive accuracy.
  return e > 0.0 ? e : epsilon;
}

}  // namespace

RunReport solve_problem(const Problem& problem, const PredictionBundle& bundle, double epsilon,
                        const SolveOptions& options) {
  if (problem.kind == ProblemKind::kMaxCut) {
    const auto& g = std::get<Graph>(problem.instance);
    return options.use_fallback ? laa_cut(g, bundle, epsilon, options.cut) : la_ptas_cut(g, bundle, epsilon, options.cut);
  }
  const PipSpec pip = to_pip(problem);
  const double eps = general_epsilon(problem, epsilon);
  RunReport report = options.use_fallback
                         ? laa_general(pip, bundle, eps, default_fallback(problem, derive_seed(options.pip.seed, 0xFB)),
                                       options.pip)
                         : la_ptas(pip, bundle, eps, options.pip);
  report.epsilon = epsilon;
  return report;
}

RunReport best_of_k_predictions(const Problem& problem, const std::vector<PredictionBundle>& bundles, double epsilon,
                                const SolveOptions& options) {
  if (bundles.empty()) throw std::invalid_argument("best_of_k_predictions: no bundles");
  for (const auto& b : bundles)
    if (!(b.sample == bundles.front().sample))
      throw std::invalid_argument("best_of_k_predictions: bundles must share one sample");
  const auto start = Clock::now();
  RunReport best;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    RunReport r = solve_problem(problem, bundles[i], epsilon, options);
    r.bundle_index = static_cast<int>(i);
    if (i == 0 || (r.status == RunStatus::kOk && (best.status != RunStatus::kOk || r.value > best.value)))
      best = std::move(r);
  }
  best.wall_time_ms = elapsed_ms(start);
  return best;
}

}  // namespace laa
