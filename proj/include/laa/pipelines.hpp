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

#ifndef LAA_PIPELINES_HPP
#define LAA_PIPELINES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "laa/instances.hpp"
#include "laa/lp.hpp"
#include "laa/prediction.hpp"
#include "laa/reductions.hpp"

namespace laa {

enum class RunStatus { kOk, kPipelineFailure };

std::string to_string(RunStatus status);

struct RunReport {
  RunStatus status = RunStatus::kOk;
  BinaryVector z;
  /// Objective at z, recomputed from z (never taken from the LP).
  double value = 0.0;
  int error_guess_used = 0;
  double epsilon = 0.0;
  int sample_size = 0;
  /// Additive slack of the guarantee at error_guess_used.
  double slack_claimed = 0.0;
  bool fallback_used = false;
  std::uint64_t seed = 0;
  double wall_time_ms = 0.0;

  /// Branch values; pipeline_value is absent when every guess was infeasible.
  std::optional<double> pipeline_value;
  std::optional<double> fallback_value;
  /// Binary-search probes (general pipeline only).
  int probes = 0;
  int guesses_tried = 0;
  int feasible_guesses = 0;
  int lp_solves = 0;
  /// Index of the winning bundle in best_of_k_predictions.
  int bundle_index = 0;
  /// True when the rounding of the reported solution met every budget.
  bool rounding_within_budget = true;
};

struct CutOptions {
  /// Density used for eps' = eps delta / 16; < 0 measures the graph.
  double delta = -1.0;
  std::uint64_t seed = 0;
  /// Guesses 0, 1, 2, 4, ... instead of every integer in [0, |S|].
  bool geometric_guesses = false;
  std::optional<int> fixed_error_guess;
  /// Independent repetitions of the guess loop (best kept).
  int repeats = 1;
  int max_round_trials = 20;
  double f = 3.0;
  LpOptions lp;
};

/// Error guesses visited by the pipelines.
std::vector<int> error_guesses(int sample_size, bool geometric);

/// Neighbourhood-sum LP per error guess, rounded; keeps the largest cut
/// (ties to the smallest guess). status is kPipelineFailure when every
/// guess is infeasible.
RunReport la_ptas_cut(const Graph& g, const PredictionBundle& bundle, double epsilon, const CutOptions& options = {});

/// Flips the first improving vertex (scan order 0..n-1) from all-zeros
/// until none is left; the cut is at least |E|/2.
BinaryVector greedy_local_search_cut(const Graph& g);

/// Larger of la_ptas_cut and the local-search cut; ties go to the
/// prediction branch.
RunReport laa_cut(const Graph& g, const PredictionBundle& bundle, double epsilon, const CutOptions& options = {});

struct PipOptions {
  std::uint64_t seed = 0;
  /// Binary-search resolution.
  double eta = 1.0;
  bool geometric_guesses = false;
  std::optional<int> fixed_error_guess;
  int max_round_trials = 20;
  /// Rounding attempts per feasible LP (best kept).
  int repeats = 1;
  LpOptions lp;
};

/// Binary search over M in (0, 2 c e n^d]; each probe linearizes p >= M and
/// the side constraints for every error guess and is accepted if some LP is
/// feasible. Feasible LP points are rounded and scored exactly; the best
/// solution whose side constraints hold within slack is reported.
RunReport la_ptas(const PipSpec& pip, const PredictionBundle& bundle, double epsilon, const PipOptions& options = {});

/// Prediction-free algorithm producing a feasible binary vector.
using Fallback = std::function<BinaryVector(const PipSpec&)>;

/// Uniformly random assignment (deterministic per seed).
Fallback random_assignment_fallback(std::uint64_t seed);
/// Repeatedly removes a minimum-degree vertex until k remain.
Fallback greedy_peeling_fallback(const Graph& g, int k);
/// First-improvement single-flip local search on the objective from
/// all-zeros; keeps the cardinality constraint when the program has one.
Fallback local_search_fallback();

/// Larger of la_ptas and the fallback, both scored exactly; ties go to the
/// prediction branch.
RunReport laa_general(const PipSpec& pip, const PredictionBundle& bundle, double epsilon, const Fallback& fallback,
                      const PipOptions& options = {});

/// Fallback used by the CLI for each problem kind.
Fallback default_fallback(const Problem& problem, std::uint64_t seed);

struct SolveOptions {
  CutOptions cut;
  PipOptions pip;
  bool use_fallback = true;
};

/// The pipeline for a problem: laa_cut / la_ptas_cut for Max-CUT, else
/// laa_general / la_ptas. Values are reported in native units.
RunReport solve_problem(const Problem& problem, const PredictionBundle& bundle, double epsilon,
                        const SolveOptions& options = {});

/// Runs solve_problem per bundle and returns the best report (first wins
/// ties) with bundle_index set. Throws std::invalid_argument on an empty
/// list or bundles with different samples.
RunReport best_of_k_predictions(const Problem& problem, const std::vector<PredictionBundle>& bundles, double epsilon,
                                const SolveOptions& options = {});

}  // namespace laa

#endif  // LAA_PIPELINES_HPP
