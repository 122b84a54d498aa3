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

#include "laa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "laa/oracle.hpp"
#include "laa/pipelines.hpp"
#include "laa/rounding.hpp"

namespace laa {

namespace {

inline constexpr long long kMaxSampleSize = 1'000'000;

template <typename T>
T get(const Json& j, const char* name) {
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("config field '") + name + "' is missing or has the wrong type");
  }
}

template <typename T>
T get_or(const Json& j, const char* name, T fallback) {
  return j.contains(name) && !j.at(name).is_null() ? get<T>(j, name) : fallback;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config field 'input': cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Trial {
  Problem problem;
  std::optional<BinaryVector> truth;
  std::optional<double> oracle_value;
  double delta = 0.0;
};

Trial make_trial(const ExperimentConfig& cfg, std::uint64_t seed) {
  const std::uint64_t inst_seed = derive_seed(seed, 0);
  Trial t;
  t.problem.kind = cfg.problem;
  t.problem.k = cfg.k;
  if (cfg.generator == "file") {
    const std::string text = read_file(cfg.input);
    if (cfg.problem == ProblemKind::kMaxKSat)
      t.problem.instance = parse_dimacs_cnf(text);
    else
      t.problem.instance = parse_dimacs_graph(text, cfg.problem == ProblemKind::kMaxDicut);
  } else if (cfg.generator == "planted") {
    PlantedGraph pg = generate_planted_bipartite(cfg.n, cfg.delta, inst_seed);
    t.oracle_value = static_cast<double>(pg.graph.edge_count());
    t.truth = pg.truth;
    t.problem.instance = std::move(pg.graph);
  } else {
    switch (cfg.problem) {
      case ProblemKind::kMaxCut:
      case ProblemKind::kDensest:
        t.problem.instance = generate_dense_graph(cfg.n, cfg.delta, inst_seed);
        break;
      case ProblemKind::kMaxDicut:
        t.problem.instance = generate_dense_digraph(cfg.n, cfg.delta, inst_seed);
        break;
      case ProblemKind::kHypercut:
        t.problem.instance = generate_uniform_hypergraph(cfg.n, cfg.d, cfg.m, inst_seed);
        break;
      case ProblemKind::kMaxKSat:
        t.problem.instance = generate_random_cnf(cfg.n, cfg.k, cfg.m, inst_seed);
        break;
    }
  }
  t.delta = std::visit([](const auto& inst) { return density(inst).delta; }, t.problem.instance);

  const int n = t.problem.n();
  const bool want_oracle = cfg.oracle.value_or(n <= kOracleMaxN || t.oracle_value.has_value());
  if (want_oracle && !t.oracle_value) {
    if (n > kOracleMaxN)
      throw ConfigError("config field 'oracle': exact oracle refused for n = " + std::to_string(n) + " > " +
                        std::to_string(kOracleMaxN));
    const OracleResult r = solve_exact(t.problem, 1);
    t.truth = r.x;
    t.oracle_value = r.value;
  }
  if (!t.truth) {
    if (n > kOracleMaxN)
      throw ConfigError("config field 'generator': simulated predictions need a known optimum; use 'planted' or n <= " +
                        std::to_string(kOracleMaxN));
    t.truth = solve_exact(t.problem, 1).x;
  }
  if (!want_oracle) t.oracle_value.reset();
  return t;
}

int sample_size_for(const ExperimentConfig& cfg, const Trial& t, double epsilon) {
  long long s = 0;
  if (cfg.sample_size) {
    s = *cfg.sample_size;
  } else if (cfg.problem == ProblemKind::kMaxCut) {
    s = sample_size_maxcut(t.problem.n(), epsilon, std::max(t.delta, 1e-9), cfg.sample_constant);
  } else {
    const PipSpec pip = to_pip(t.problem);
    const int d = std::max(1, pip.objective.degree());
    s = sample_size_pip(t.problem.n(), epsilon, std::max(smoothness(pip.objective).c, 1e-9), d,
                        pip_failure_exponent(pip.m() + 1, t.problem.n(), d), cfg.sample_constant);
  }
  if (s > kMaxSampleSize)
    throw ConfigError("config field 'sample_constant': sample size " + std::to_string(s) +
                      " is too large; lower sample_constant or set sample_size");
  return static_cast<int>(std::max<long long>(1, s));
}

template <typename Fn>
void parallel_for(int count, int workers, Fn&& fn) {
  std::atomic<int> next{0};
  auto body = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  const int threads = std::min(count, std::max(1, workers));
  if (threads <= 1) {
    body();
    return;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", *v);
  return buf;
}

std::string cell(double v) { return cell(std::optional<double>(v)); }

}  // namespace

ExperimentConfig parse_experiment_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  try {
    c.problem = parse_problem_kind(get<std::string>(j, "problem"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config field 'problem': ") + e.what());
  }
  c.generator = get_or<std::string>(j, "generator", "dense");
  if (c.generator != "dense" && c.generator != "planted" && c.generator != "file")
    throw ConfigError("config field 'generator': expected dense, planted or file");
  if (c.generator == "planted" && c.problem != ProblemKind::kMaxCut)
    throw ConfigError("config field 'generator': planted instances exist for maxcut only");
  if (c.generator == "file") {
    c.input = get<std::string>(j, "input");
    if (c.problem == ProblemKind::kHypercut) throw ConfigError("config field 'input': no file format for hypercut");
  } else {
    c.n = get<int>(j, "n");
    if (c.n < 2) throw ConfigError("config field 'n': need n >= 2");
  }
  c.delta = get_or(j, "delta", 0.5);
  if (!(c.delta > 0.0 && c.delta <= 1.0)) throw ConfigError("config field 'delta': must lie in (0, 1]");
  c.k = get_or(j, "k", 0);
  c.m = get_or(j, "m", 0);
  c.d = get_or(j, "d", 3);
  if (c.problem == ProblemKind::kDensest && c.k < 1) throw ConfigError("config field 'k': densest needs k >= 1");
  if (c.problem == ProblemKind::kMaxKSat && c.generator != "file" && (c.k < 1 || c.m < 1))
    throw ConfigError("config field 'k': maxksat needs clause width k >= 1 and clause count m >= 1");
  if (c.problem == ProblemKind::kHypercut && c.m < 1) throw ConfigError("config field 'm': hypercut needs m >= 1");
  c.epsilons = get<std::vector<double>>(j, "epsilon");
  c.flip_rates = get<std::vector<double>>(j, "flip_rate");
  c.seeds = get<std::vector<std::uint64_t>>(j, "seeds");
  if (c.epsilons.empty()) throw ConfigError("config field 'epsilon': empty list");
  if (c.flip_rates.empty()) throw ConfigError("config field 'flip_rate': empty list");
  if (c.seeds.empty()) throw ConfigError("config field 'seeds': empty list");
  for (double e : c.epsilons)
    if (!(e > 0.0)) throw ConfigError("config field 'epsilon': values must be positive");
  for (double p : c.flip_rates)
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("config field 'flip_rate': values must lie in [0, 1]");
  c.sample_constant = get_or(j, "sample_constant", 1.0);
  if (!(c.sample_constant > 0.0)) throw ConfigError("config field 'sample_constant': must be positive");
  if (j.contains("sample_size") && !j.at("sample_size").is_null()) {
    c.sample_size = get<int>(j, "sample_size");
    if (*c.sample_size < 1) throw ConfigError("config field 'sample_size': must be positive");
  }
  c.fallback = get_or(j, "fallback", true);
  if (j.contains("oracle") && !j.at("oracle").is_null()) c.oracle = get<bool>(j, "oracle");
  c.geometric_guesses = get_or(j, "geometric_guesses", false);
  c.output_dir = get_or<std::string>(j, "output_dir", "");
  c.workers = get_or(j, "workers", 0);
  if (c.oracle.value_or(false) && c.generator != "file" && c.n > kOracleMaxN && c.generator != "planted")
    throw ConfigError("config field 'oracle': exact oracle refused for n = " + std::to_string(c.n) + " > " +
                      std::to_string(kOracleMaxN));
  return c;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
  const int workers = config.workers > 0 ? config.workers : default_workers();
  const int num_seeds = static_cast<int>(config.seeds.size());
  std::vector<std::optional<Trial>> trials(num_seeds);
  std::vector<std::string> errors(num_seeds);
  parallel_for(num_seeds, workers, [&](int i) {
    try {
      trials[i] = make_trial(config, config.seeds[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  for (int i = 0; i < num_seeds; ++i) {
    if (errors[i].empty()) continue;
    if (errors[i].rfind("config field", 0) == 0) throw ConfigError(errors[i]);
    throw Error("seed " + std::to_string(config.seeds[i]) + ": " + errors[i]);
  }

  struct Task {
    int seed_index;
    double epsilon;
    double flip_rate;
  };
  std::vector<Task> tasks;
  for (int i = 0; i < num_seeds; ++i)
    for (double e : config.epsilons)
      for (double p : config.flip_rates) tasks.push_back({i, e, p});

  std::vector<int> sizes(tasks.size());
  for (std::size_t t = 0; t < tasks.size(); ++t)
    sizes[t] = sample_size_for(config, *trials[tasks[t].seed_index], tasks[t].epsilon);

  std::vector<ExperimentRow> rows(tasks.size());
  std::vector<std::string> task_errors(tasks.size());
  parallel_for(static_cast<int>(tasks.size()), workers, [&](int t) {
    try {
      const Task& task = tasks[t];
      const Trial& trial = *trials[task.seed_index];
      const std::uint64_t seed = config.seeds[task.seed_index];
      const int n = trial.problem.n();
      const SampleSet sample = draw_sample(n, sizes[t], derive_seed(seed, 1));
      const PredictionBundle bundle = noisy_predictor(*trial.truth, sample, task.flip_rate, derive_seed(seed, 2));

      SolveOptions opts;
      opts.use_fallback = config.fallback;
      opts.cut.seed = opts.pip.seed = derive_seed(seed, 3);
      opts.cut.geometric_guesses = opts.pip.geometric_guesses = config.geometric_guesses;
      RunReport report = solve_problem(trial.problem, bundle, task.epsilon, opts);
      report.seed = seed;

      ExperimentRow& row = rows[t];
      row.n = n;
      row.delta = trial.delta;
      row.epsilon = task.epsilon;
      row.sample_size = sample.size();
      row.flip_rate = task.flip_rate;
      row.prediction_error = prediction_error(bundle);
      row.pipeline_value = report.pipeline_value;
      row.fallback_value = report.fallback_value;
      if (report.status == RunStatus::kOk) row.final_value = report.value;
      row.oracle_value = trial.oracle_value;
      if (row.final_value && row.oracle_value)
        row.ratio = *row.oracle_value != 0.0 ? *row.final_value / *row.oracle_value : 1.0;
      row.slack_claimed = report.slack_claimed;
      row.fallback_used = report.fallback_used;
      row.wall_time_ms = report.wall_time_ms;
      row.seed = seed;
      row.report = std::move(report);
    } catch (const std::exception& e) {
      task_errors[t] = e.what();
    }
  });
  for (const auto& e : task_errors)
    if (!e.empty()) throw Error(e);

  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.epsilon, a.flip_rate, a.seed) < std::tie(b.epsilon, b.flip_rate, b.seed);
  });
  return rows;
}

std::string format_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "#schema=" << kCsvSchema << '\n';
  out << "n,delta,epsilon,sample_size,flip_rate,prediction_error,pipeline_value,fallback_value,final_value,"
         "oracle_value,ratio,slack_claimed,fallback_used,wall_time_ms,seed\n";
  for (const auto& r : rows) {
    out << r.n << ',' << cell(r.delta) << ',' << cell(r.epsilon) << ',' << r.sample_size << ',' << cell(r.flip_rate)
        << ',' << (r.prediction_error ? std::to_string(*r.prediction_error) : "") << ',' << cell(r.pipeline_value)
        << ',' << cell(r.fallback_value) << ',' << cell(r.final_value) << ',' << cell(r.oracle_value) << ','
        << cell(r.ratio) << ',' << cell(r.slack_claimed) << ',' << (r.fallback_used ? 1 : 0) << ','
        << cell(r.wall_time_ms) << ',' << r.seed << '\n';
  }
  return out.str();
}

Json rows_to_json(const std::vector<ExperimentRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"seed", r.seed}, {"epsilon", r.epsilon}, {"flip_rate", r.flip_rate}, {"report", report_to_json(r.report)}});
  return out;
}

void write_experiment(const ExperimentConfig& config, const std::vector<ExperimentRow>& rows) {
  const std::filesystem::path dir = config.output_dir.empty() ? "." : config.output_dir;
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / "results.csv", std::ios::binary);
  csv << format_csv(rows);
  std::ofstream json(dir / "reports.json", std::ios::binary);
  json << rows_to_json(rows).dump(2) << '\n';
  if (!csv || !json) throw Error("cannot write results into '" + dir.string() + "'");
}

}  // namespace laa
