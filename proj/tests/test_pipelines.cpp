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

#include <gtest/gtest.h>

#include <cmath>

#include "laa/oracle.hpp"
#include "laa/pipelines.hpp"
#include "laa/reductions.hpp"
#include "test_support.hpp"

namespace laa {
namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  return Graph(10, e);
}

TEST(Guesses, Enumeration) {
  EXPECT_EQ(error_guesses(5, false), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(error_guesses(10, true), (std::vector<int>{0, 1, 2, 4, 8, 10}));
}

TEST(CutPtas, CompleteGraphOptimum) {
  const Graph k4 = generate_dense_graph(4, 1.0, 0);
  const BinaryVector a = canonical_optimum({ProblemKind::kMaxCut, k4, 0});
  const RunReport r = la_ptas_cut(k4, perfect_predictor(a, full_coverage_sample(4)), 0.1);
  ASSERT_EQ(r.status, RunStatus::kOk);
  EXPECT_DOUBLE_EQ(r.value, 4.0);
  EXPECT_DOUBLE_EQ(r.value, testing::matrix_cut(k4, r.z));
}

TEST(CutPtas, EmptyGraph) {
  const Graph g(5, {});
  const RunReport r = la_ptas_cut(g, perfect_predictor(BinaryVector::Zero(5), full_coverage_sample(5)), 0.2, {1.0});
  EXPECT_DOUBLE_EQ(r.value, 0.0);
}

TEST(CutPtas, SlackAndGuessTelemetry) {
  const Graph g = generate_dense_graph(10, 0.6, 4);
  const BinaryVector a = canonical_optimum({ProblemKind::kMaxCut, g, 0});
  CutOptions o;
  o.fixed_error_guess = 2;
  const RunReport r = la_ptas_cut(g, perfect_predictor(a, draw_sample(10, 8, 1)), 0.2, o);
  EXPECT_EQ(r.guesses_tried, 1);
  EXPECT_EQ(r.error_guess_used, 2);
  const double eps_prime = 0.2 * density(g).delta / 16.0;
  EXPECT_NEAR(r.slack_claimed, 2 * (2 * eps_prime + 2.0 / 8) * 100, 1e-9);
}

TEST(CutPtas, KeepsBestGuess) {
  const Graph g = generate_dense_graph(12, 0.5, 9);
  const BinaryVector a = canonical_optimum({ProblemKind::kMaxCut, g, 0});
  const PredictionBundle b = noisy_predictor(a, draw_sample(12, 10, 2), 0.2, 3);
  CutOptions o;
  o.seed = 5;
  const RunReport all = la_ptas_cut(g, b, 0.2, o);
  for (int guess : error_guesses(10, false)) {
    CutOptions one = o;
    one.fixed_error_guess = guess;
    const RunReport r = la_ptas_cut(g, b, 0.2, one);
    if (r.status == RunStatus::kOk) EXPECT_LE(r.value, all.value);
  }
}

TEST(LocalSearch, HalfGuarantee) {
  EXPECT_EQ(testing::matrix_cut(Graph(2, {{0, 1}}), greedy_local_search_cut(Graph(2, {{0, 1}}))), 1);
  const Graph p = petersen();
  EXPECT_GE(testing::matrix_cut(p, greedy_local_search_cut(p)), 8);
  EXPECT_DOUBLE_EQ(solve_exact({ProblemKind::kMaxCut, p, 0}, 1).value, 12.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = generate_dense_graph(5 + static_cast<int>(seed % 20), 0.1 + 0.017 * seed, seed);
    const BinaryVector z = greedy_local_search_cut(g);
    EXPECT_GE(2 * testing::matrix_cut(g, z), static_cast<int>(g.edge_count()) + static_cast<int>(g.edge_count() % 2));
    for (int i = 0; i < g.n(); ++i) {
      BinaryVector flipped = z;
      flipped(i) = 1 - flipped(i);
      EXPECT_LE(testing::matrix_cut(g, flipped), testing::matrix_cut(g, z));
    }
  }
}

TEST(LaaCut, PerfectPredictionsNearOptimum) {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_dense_graph(12, 0.6, seed);
    const OracleResult opt = solve_exact({ProblemKind::kMaxCut, g, 0}, 1);
    const RunReport r = laa_cut(g, perfect_predictor(opt.x, draw_sample(12, 12, seed)), 0.2);
    EXPECT_LE(r.value, opt.value);
    EXPECT_GE(r.value, *r.fallback_value);
    good += r.value >= 0.8 * opt.value;
  }
  EXPECT_GE(good, 18);
}

TEST(LaaCut, AdversarialPredictionsKeepHalf) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_dense_graph(14, 0.5, seed);
    const BinaryVector a = canonical_optimum({ProblemKind::kMaxCut, g, 0});
    const RunReport r = laa_cut(g, noisy_predictor(a, draw_sample(14, 14, seed), 1.0, seed), 0.2);
    EXPECT_GE(2 * r.value, static_cast<double>(g.edge_count()));
  }
}

TEST(LaaCut, CompleteGraphExact) {
  for (int n = 4; n <= 10; ++n) {
    const Graph kn = generate_dense_graph(n, 1.0, 0);
    const BinaryVector a = canonical_optimum({ProblemKind::kMaxCut, kn, 0});
    const RunReport r = laa_cut(kn, perfect_predictor(a, full_coverage_sample(n)), 0.05);
    EXPECT_DOUBLE_EQ(r.value, (n * n) / 4);
  }
}

TEST(LaaCut, BranchValuesAndTieRule) {
  const Graph g = generate_dense_graph(10, 0.5, 1);
  const BinaryVector a = canonical_optimum({ProblemKind::kMaxCut, g, 0});
  const RunReport r = laa_cut(g, perfect_predictor(a, full_coverage_sample(10)), 0.2);
  ASSERT_TRUE(r.pipeline_value && r.fallback_value);
  EXPECT_DOUBLE_EQ(r.value, std::max(*r.pipeline_value, *r.fallback_value));
  EXPECT_EQ(r.fallback_used, *r.fallback_value > *r.pipeline_value);
}

TEST(GeneralPtas, TriangleCut) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const Problem prob{ProblemKind::kMaxCut, k3, 0};
  const RunReport r = la_ptas(to_pip(prob), perfect_predictor(canonical_optimum(prob), full_coverage_sample(3)), 0.1);
  ASSERT_EQ(r.status, RunStatus::kOk);
  EXPECT_DOUBLE_EQ(r.value, 2.0);
}

TEST(GeneralPtas, LinearObjective) {
  PipSpec pip;
  pip.objective = PolynomialBuilder(6).add_term({0}, 3).add_term({1}, -2).add_term({3}, 1).add_term({5}, 2).build();
  const OracleResult opt = brute_force_max(pip.objective, {}, 1);
  const RunReport r = la_ptas(pip, perfect_predictor(opt.x, full_coverage_sample(6)), 0.1);
  ASSERT_EQ(r.status, RunStatus::kOk);
  EXPECT_DOUBLE_EQ(r.value, opt.value);
}

TEST(GeneralPtas, CubicWithinClaimedSlack) {
  int good = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PipSpec pip;
    pip.objective = random_polynomial(10, 3, 20, seed);
    const OracleResult opt = brute_force_max(pip.objective, {}, 1);
    PipOptions o;
    o.seed = seed;
    o.geometric_guesses = true;
    const RunReport r = la_ptas(pip, perfect_predictor(opt.x, draw_sample(10, 10, seed)), 0.2, o);
    const double cert = smoothness(pip.objective).bound;
    EXPECT_LE(r.probes, static_cast<int>(std::ceil(std::log2(cert))) + 1);
    if (r.status == RunStatus::kOk) {
      EXPECT_DOUBLE_EQ(r.value, testing::naive_value(pip.objective, r.z));
      good += r.value >= opt.value - r.slack_claimed;
    }
  }
  EXPECT_GE(good, 18);
}

TEST(Fallbacks, Basics) {
  const Graph g = generate_dense_graph(10, 0.5, 3);
  const PipSpec dens = densest_subgraph_pip(g, 4);
  EXPECT_EQ(greedy_peeling_fallback(g, 4)(dens).sum(), 4);
  EXPECT_EQ(local_search_fallback()(dens).sum(), 4);
  const PipSpec cut = to_pip({ProblemKind::kMaxCut, g, 0});
  EXPECT_GE(2 * testing::matrix_cut(g, local_search_fallback()(cut)), static_cast<int>(g.edge_count()));
  EXPECT_EQ(random_assignment_fallback(4)(cut), random_assignment_fallback(4)(cut));
}

TEST(Fallbacks, RandomAssignmentSatisfiesMostClauses) {
  const CnfFormula f = generate_random_cnf(10, 3, 30, 1);
  const PipSpec pip = to_pip({ProblemKind::kMaxKSat, f, 0});
  double mean = 0.0;
  for (std::uint64_t s = 0; s < 400; ++s) mean += testing::clauses_satisfied(f, random_assignment_fallback(s)(pip));
  mean /= 400;
  EXPECT_NEAR(mean, 30 * 7.0 / 8.0, 3 * std::sqrt(30 * 7.0 / 64.0 / 400) + 0.5);
}

TEST(LaaGeneral, NeverBelowEitherBranch) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Problem prob{ProblemKind::kMaxKSat, generate_random_cnf(8, 2, 30, seed), 0};
    const PipSpec pip = to_pip(prob);
    const BinaryVector a = canonical_optimum(prob);
    PipOptions o;
    o.geometric_guesses = true;
    const RunReport r =
        laa_general(pip, noisy_predictor(a, draw_sample(8, 8, seed), 0.3, seed), 0.3, random_assignment_fallback(seed), o);
    ASSERT_TRUE(r.fallback_value.has_value());
    EXPECT_GE(r.value, *r.fallback_value);
    if (r.pipeline_value) EXPECT_GE(r.value, *r.pipeline_value);
    EXPECT_EQ(r.fallback_used, !r.pipeline_value || *r.fallback_value > *r.pipeline_value);
  }
}

TEST(LaaGeneral, IdenticalBranchesPreferPrediction) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const Problem prob{ProblemKind::kMaxCut, k3, 0};
  const BinaryVector a = canonical_optimum(prob);
  const PipSpec pip = to_pip(prob);
  const RunReport r =
      laa_general(pip, perfect_predictor(a, full_coverage_sample(3)), 0.1, [&](const PipSpec&) { return a; });
  EXPECT_DOUBLE_EQ(r.value, 2.0);
  EXPECT_FALSE(r.fallback_used);
}

TEST(Solve, DensestRepairsCardinality) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Problem prob{ProblemKind::kDensest, generate_dense_graph(10, 0.6, seed), 4};
    const OracleResult opt = solve_exact(prob, 1);
    SolveOptions o;
    o.use_fallback = false;
    o.pip.geometric_guesses = true;
    const RunReport r = solve_problem(prob, perfect_predictor(opt.x, draw_sample(10, 10, seed)), 0.3, o);
    if (r.status == RunStatus::kOk) {
      EXPECT_EQ(r.z.sum(), 4);
      EXPECT_LE(r.value, opt.value);
    }
  }
}

TEST(BestOfK, SelectsMaximum) {
  const Graph g = generate_dense_graph(12, 0.5, 6);
  const Problem prob{ProblemKind::kMaxCut, g, 0};
  const BinaryVector a = canonical_optimum(prob);
  const SampleSet s = draw_sample(12, 12, 3);
  const std::vector<PredictionBundle> bundles{noisy_predictor(a, s, 1.0, 1), perfect_predictor(a, s),
                                              noisy_predictor(a, s, 0.3, 2)};
  const RunReport best = best_of_k_predictions(prob, bundles, 0.2);
  double expected = -1;
  int index = -1;
  for (int i = 0; i < 3; ++i) {
    const double v = solve_problem(prob, bundles[i], 0.2).value;
    if (v > expected) {
      expected = v;
      index = i;
    }
  }
  EXPECT_DOUBLE_EQ(best.value, expected);
  EXPECT_EQ(best.bundle_index, index);
  const RunReport single = best_of_k_predictions(prob, {bundles[1]}, 0.2);
  EXPECT_DOUBLE_EQ(single.value, solve_problem(prob, bundles[1], 0.2).value);
  EXPECT_EQ(single.z, solve_problem(prob, bundles[1], 0.2).z);
}

TEST(BestOfK, RejectsBadInput) {
  const Problem prob{ProblemKind::kMaxCut, generate_dense_graph(6, 0.5, 1), 0};
  EXPECT_THROW(best_of_k_predictions(prob, {}, 0.2), std::invalid_argument);
  const BinaryVector a = BinaryVector::Zero(6);
  EXPECT_THROW(best_of_k_predictions(prob, {perfect_predictor(a, draw_sample(6, 4, 1)),
                                            perfect_predictor(a, draw_sample(6, 4, 2))},
                                     0.2),
               std::invalid_argument);
}

TEST(Solve, Deterministic) {
  const Problem prob{ProblemKind::kMaxDicut, generate_dense_digraph(8, 0.4, 2), 0};
  const PredictionBundle b = noisy_predictor(canonical_optimum(prob), draw_sample(8, 8, 1), 0.1, 1);
  SolveOptions o;
  o.pip.geometric_guesses = true;
  const RunReport r1 = solve_problem(prob, b, 0.3, o);
  const RunReport r2 = solve_problem(prob, b, 0.3, o);
  EXPECT_EQ(r1.z, r2.z);
  EXPECT_DOUBLE_EQ(r1.value, testing::matrix_dicut(std::get<Graph>(prob.instance), r1.z));
}

}  // namespace
}  // namespace laa
