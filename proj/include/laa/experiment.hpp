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

#ifndef LAA_EXPERIMENT_HPP
#define LAA_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laa/reductions.hpp"
#include "laa/serialization.hpp"

namespace laa {

inline constexpr const char* kCsvSchema = "laa-experiment/1";

/// Invalid experiment configuration; the message names the field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ExperimentConfig {
  ProblemKind problem = ProblemKind::kMaxCut;
  /// "dense", "planted" (Max-CUT only) or "file".
  std::string generator = "dense";
  std::string input;
  int n = 0;
  double delta = 0.5;
  /// Subset size (densest) or clause width (maxksat).
  int k = 0;
  /// Clause count (maxksat) or edge count (hypercut).
  int m = 0;
  /// Hyperedge size (hypercut).
  int d = 3;
  std::vector<double> epsilons;
  std::vector<double> flip_rates;
  std::vector<std::uint64_t> seeds;
  double sample_constant = 1.0;
  std::optional<int> sample_size;
  bool fallback = true;
  /// Unset: report the optimum whenever n <= kOracleMaxN or it is planted.
  std::optional<bool> oracle;
  bool geometric_guesses = false;
  std::string output_dir;
  /// <= 0: LAA_WORKERS or hardware concurrency.
  int workers = 0;
};

/// Throws ConfigError naming the first bad field.
ExperimentConfig parse_experiment_config(const Json& j);

struct ExperimentRow {
  int n = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  int sample_size = 0;
  double flip_rate = 0.0;
  std::optional<int> prediction_error;
  std::optional<double> pipeline_value;
  std::optional<double> fallback_value;
  std::optional<double> final_value;
  std::optional<double> oracle_value;
  std::optional<double> ratio;
  double slack_claimed = 0.0;
  bool fallback_used = false;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  RunReport report;
};

/// One row per (seed, epsilon, flip_rate), sorted by (epsilon, flip_rate,
/// seed). Throws ConfigError when the oracle is requested above
/// kOracleMaxN or predictions cannot be simulated.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

/// Schema comment line, header, then rows; empty cells for absent values.
std::string format_csv(const std::vector<ExperimentRow>& rows);
Json rows_to_json(const std::vector<ExperimentRow>& rows);

/// Writes results.csv and reports.json into config.output_dir.
void write_experiment(const ExperimentConfig& config, const std::vector<ExperimentRow>& rows);

}  // namespace laa

#endif  // LAA_EXPERIMENT_HPP
