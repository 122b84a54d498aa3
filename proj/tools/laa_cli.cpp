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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "laa/experiment.hpp"
#include "laa/oracle.hpp"
#include "laa/pipelines.hpp"
#include "laa/selfcheck.hpp"
#include "laa/serialization.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInfeasible = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw laa::ConfigError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

laa::Problem load_problem(const std::string& kind_name, const std::string& path, int k) {
  laa::Problem problem;
  try {
    problem.kind = laa::parse_problem_kind(kind_name);
  } catch (const std::invalid_argument& e) {
    throw laa::ConfigError(e.what());
  }
  problem.k = k;
  const std::string text = slurp(path);
  if (ends_with(path, ".json")) {
    try {
      problem.instance = laa::instance_from_json(laa::parse_json(text));
    } catch (const laa::Error& e) {
      throw laa::ConfigError(path + ": " + e.what());
    }
  } else if (problem.kind == laa::ProblemKind::kMaxKSat) {
    problem.instance = laa::parse_dimacs_cnf(text);
  } else if (problem.kind == laa::ProblemKind::kHypercut) {
    throw laa::ConfigError("hypercut instances must be JSON");
  } else {
    problem.instance = laa::parse_dimacs_graph(text, problem.kind == laa::ProblemKind::kMaxDicut);
  }
  if (problem.kind == laa::ProblemKind::kDensest) {
    const double gamma = static_cast<double>(k) / problem.n();
    if (k < 1 || k > problem.n()) throw laa::ConfigError("--k must lie in [1, n] for densest");
    if (gamma < 0.1) std::cerr << "warning: k = " << k << " is below 0.1 n; the density guarantee assumes k >= gamma n\n";
  }
  if (const auto* h = std::get_if<laa::Hypergraph>(&problem.instance))
    for (const auto& w : laa::hypercut_lint(*h)) std::cerr << "warning: " << w << '\n';
  return problem;
}

struct SolveArgs {
  std::string problem = "maxcut";
  std::string input;
  int k = 0;
  double epsilon = 0.2;
  double flip_rate = 0.0;
  std::string predictions;
  int sample_size = 0;
  double sample_constant = 1.0;
  std::uint64_t seed = 1;
  bool no_fallback = false;
  bool geometric = false;
};

int run_solve(const SolveArgs& a) {
  const laa::Problem problem = load_problem(a.problem, a.input, a.k);
  const int n = problem.n();
  laa::PredictionBundle bundle;
  std::string reference_kind = "exact";
  if (!a.predictions.empty()) {
    try {
      bundle = laa::bundle_from_json(laa::parse_json(slurp(a.predictions)));
    } catch (const laa::Error& e) {
      throw laa::ConfigError(a.predictions + ": " + e.what());
    }
    for (int j : bundle.sample.indices)
      if (j < 0 || j >= n) throw laa::ConfigError("predictions: sampled index out of range");
  } else {
    int s = a.sample_size;
    if (s <= 0) {
      if (problem.kind != laa::ProblemKind::kMaxCut) throw laa::ConfigError("--sample-size is required for this problem");
      const double delta = laa::density(std::get<laa::Graph>(problem.instance)).delta;
      const long long full = laa::sample_size_maxcut(n, a.epsilon, std::max(delta, 1e-9), a.sample_constant);
      if (full > n) {
        std::cerr << "warning: sample size " << full << " exceeds n; sampling every variable once\n";
        s = 0;
      } else {
        s = static_cast<int>(full);
      }
    }
    const laa::SampleSet sample = s > 0 ? laa::draw_sample(n, s, laa::derive_seed(a.seed, 1)) : laa::full_coverage_sample(n);
    // Above the oracle limit the predictor is simulated from a local optimum.
    laa::BinaryVector reference;
    if (n <= laa::kOracleMaxN) {
      reference = laa::canonical_optimum(problem);
    } else {
      std::cerr << "warning: n = " << n << " exceeds the exact-oracle limit; simulating predictions from a "
                << "local-search solution\n";
      reference = problem.kind == laa::ProblemKind::kMaxCut
                      ? laa::greedy_local_search_cut(std::get<laa::Graph>(problem.instance))
                      : laa::local_search_fallback()(laa::to_pip(problem));
      reference_kind = "local-search";
    }
    bundle = laa::noisy_predictor(reference, sample, a.flip_rate, laa::derive_seed(a.seed, 2));
  }
  laa::SolveOptions opts;
  opts.use_fallback = !a.no_fallback;
  opts.cut.seed = opts.pip.seed = laa::derive_seed(a.seed, 3);
  opts.cut.geometric_guesses = opts.pip.geometric_guesses = a.geometric;
  laa::RunReport report = laa::solve_problem(problem, bundle, a.epsilon, opts);
  report.seed = a.seed;
  laa::Json out = laa::report_to_json(report);
  if (bundle.truth) {
    out["prediction_error"] = laa::prediction_error(bundle);
    out["prediction_reference"] = reference_kind;
  }
  std::cout << out.dump(2) << '\n';
  return report.status == laa::RunStatus::kOk ? 0 : kExitInfeasible;
}

int run_experiment_cmd(const std::string& config_path, const std::string& output) {
  laa::ExperimentConfig config = laa::parse_experiment_config(laa::parse_json(slurp(config_path)));
  if (!output.empty()) config.output_dir = output;
  const auto rows = laa::run_experiment(config);
  laa::write_experiment(config, rows);
  std::cerr << rows.size() << " rows written to " << (config.output_dir.empty() ? "." : config.output_dir) << '\n';
  for (const auto& r : rows)
    if (!r.final_value) return kExitInfeasible;
  return 0;
}

int run_oracle(const std::string& kind, const std::string& input, int k) {
  const laa::Problem problem = load_problem(kind, input, k);
  if (problem.n() > laa::kOracleMaxN)
    throw laa::ConfigError("exact oracle refused for n = " + std::to_string(problem.n()) + " > " +
                           std::to_string(laa::kOracleMaxN));
  const laa::OracleResult r = laa::solve_exact(problem);
  laa::Json out;
  out["value"] = r.value;
  out["x"] = laa::Json::array();
  for (Eigen::Index i = 0; i < r.x.size(); ++i) out["x"].push_back(r.x(i));
  std::cout << out.dump() << '\n';
  return 0;
}

struct GenArgs {
  std::string problem = "maxcut";
  int n = 0;
  double delta = 0.5;
  int k = 3;
  int m = 0;
  int d = 3;
  std::uint64_t seed = 1;
  bool planted = false;
  std::string output;
};

int run_gen(const GenArgs& a) {
  laa::ProblemKind kind;
  try {
    kind = laa::parse_problem_kind(a.problem);
  } catch (const std::invalid_argument& e) {
    throw laa::ConfigError(e.what());
  }
  std::string text;
  switch (kind) {
    case laa::ProblemKind::kMaxCut:
    case laa::ProblemKind::kDensest:
      text = laa::to_dimacs(a.planted ? laa::generate_planted_bipartite(a.n, a.delta, a.seed).graph
                                      : laa::generate_dense_graph(a.n, a.delta, a.seed));
      break;
    case laa::ProblemKind::kMaxDicut:
      text = laa::to_dimacs(laa::generate_dense_digraph(a.n, a.delta, a.seed));
      break;
    case laa::ProblemKind::kMaxKSat:
      text = laa::to_dimacs(laa::generate_random_cnf(a.n, a.k, a.m, a.seed));
      break;
    case laa::ProblemKind::kHypercut:
      text = laa::instance_to_json(laa::generate_uniform_hypergraph(a.n, a.d, a.m, a.seed)).dump() + "\n";
      break;
  }
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(a.output, std::ios::binary);
  out << text;
  if (!out) throw laa::Error("cannot write '" + a.output + "'");
  return 0;
}

int run_check(std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : laa::run_self_checks(seed)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) std::cout << ": " << r.detail;
    std::cout << '\n';
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prediction-guided approximation for dense Max-CUT and smooth polynomial integer programs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one pipeline on one instance and print its report");
  solve_cmd->add_option("--problem", solve.problem, "maxcut, maxdicut, hypercut, densest or maxksat")->required();
  solve_cmd->add_option("--input", solve.input, "DIMACS file, or JSON instance (*.json)")->required();
  solve_cmd->add_option("--k", solve.k, "Subset size for densest");
  solve_cmd->add_option("--epsilon", solve.epsilon, "Accuracy parameter");
  solve_cmd->add_option("--flip-rate", solve.flip_rate, "Simulated predictor flip probability")->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_option("--predictions", solve.predictions, "Prediction bundle JSON (live mode)");
  solve_cmd->add_option("--sample-size", solve.sample_size, "Override |S|");
  solve_cmd->add_option("--sample-constant", solve.sample_constant, "Constant C0 in the sample-size formula");
  solve_cmd->add_option("--seed", solve.seed, "Base seed");
  solve_cmd->add_flag("--no-fallback", solve.no_fallback, "Disable the prediction-free branch");
  solve_cmd->add_flag("--geometric-guesses", solve.geometric, "Error guesses 0, 1, 2, 4, ... only");

  std::string config_path, output_dir;
  auto* exp_cmd = app.add_subcommand("experiment", "Run a configured sweep and write results.csv / reports.json");
  exp_cmd->add_option("config", config_path, "Experiment config JSON")->required();
  exp_cmd->add_option("-o,--output", output_dir, "Output directory (overrides output_dir)");

  std::string oracle_problem = "maxcut", oracle_input;
  int oracle_k = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact brute-force optimum (n <= 26)");
  oracle_cmd->add_option("--problem", oracle_problem)->required();
  oracle_cmd->add_option("--input", oracle_input)->required();
  oracle_cmd->add_option("--k", oracle_k);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random dense instance");
  gen_cmd->add_option("--problem", gen.problem)->required();
  gen_cmd->add_option("--n", gen.n)->required();
  gen_cmd->add_option("--delta", gen.delta);
  gen_cmd->add_option("--k", gen.k, "Clause width (maxksat)");
  gen_cmd->add_option("--m", gen.m, "Clause count (maxksat) or edge count (hypercut)");
  gen_cmd->add_option("--d", gen.d, "Hyperedge size (hypercut)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_flag("--planted", gen.planted, "Planted bipartite graph with a known maximum cut");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::uint64_t check_seed = 1;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant self-test suites");
  check_cmd->add_option("--seed", check_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*exp_cmd) return run_experiment_cmd(config_path, output_dir);
    if (*oracle_cmd) return run_oracle(oracle_problem, oracle_input, oracle_k);
    if (*gen_cmd) return run_gen(gen);
    if (*check_cmd) return run_check(check_seed);
  } catch (const laa::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const laa::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
