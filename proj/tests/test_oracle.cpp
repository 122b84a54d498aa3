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

#include <cstdlib>

#include "laa/oracle.hpp"
#include "laa/reductions.hpp"
#include "test_support.hpp"

namespace laa {
namespace {

TEST(Oracle, CompleteGraphs) {
  for (int n = 2; n <= 8; ++n) {
    const Graph kn = generate_dense_graph(n, 1.0, 0);
    EXPECT_DOUBLE_EQ(solve_exact({ProblemKind::kMaxCut, kn, 0}, 2).value, (n * n) / 4);
  }
  const Graph k4 = generate_dense_graph(4, 1.0, 0);
  EXPECT_DOUBLE_EQ(solve_exact({ProblemKind::kDensest, k4, 3}, 1).value, 3.0);
}

TEST(Oracle, CanonicalTieBreak) {
  EXPECT_EQ(canonical_optimum({ProblemKind::kMaxCut, Graph(3, {}), 0}), BinaryVector::Zero(3));
  EXPECT_EQ(canonical_optimum({ProblemKind::kMaxCut, Graph(2, {{0, 1}}), 0}), testing::bits(0b10, 2));
  const Problem p{ProblemKind::kMaxCut, generate_dense_graph(9, 0.5, 3), 0};
  EXPECT_EQ(canonical_optimum(p), canonical_optimum(p));
}

TEST(Oracle, MatchesNaiveEnumerationAcrossWorkers) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 1 + static_cast<int>(seed % 12);
    const SmoothPolynomial p = random_polynomial(n, std::min(n, 3), 10, seed);
    double best = -kInf;
    BinaryVector arg;
    // Enumerate with x_0 as the most significant bit so the first maximizer
    // is the lexicographically smallest one.
    for (std::uint64_t code = 0; code < (1u << n); ++code) {
      BinaryVector x(n);
      for (int i = 0; i < n; ++i) x(i) = static_cast<int>((code >> (n - 1 - i)) & 1u);
      const double v = testing::naive_value(p, x);
      if (v > best) {
        best = v;
        arg = x;
      }
    }
    for (int workers : {1, 3}) {
      const OracleResult r = brute_force_max(p, {}, workers);
      EXPECT_DOUBLE_EQ(r.value, best);
      EXPECT_EQ(r.x, arg);
    }
  }
}

TEST(Oracle, RespectsConstraints) {
  const Graph g = generate_dense_graph(10, 0.5, 2);
  const PipSpec spec = densest_subgraph_pip(g, 4);
  const OracleResult r = brute_force_max(spec.objective, spec.constraints, 2);
  EXPECT_EQ(r.x.sum(), 4);
  int best = 0;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const BinaryVector x = testing::bits(mask, 10);
    if (x.sum() == 4) best = std::max(best, testing::inside_edges(g, x));
  }
  EXPECT_DOUBLE_EQ(r.value, best);
}

TEST(Oracle, Errors) {
  const SmoothPolynomial p = PolynomialBuilder(3).add_term({0}, 1).build();
  const PolyConstraint impossible{p, 2.0, 3.0};
  EXPECT_THROW(brute_force_max(p, {impossible}, 1), InfeasibleError);
  EXPECT_THROW(brute_force_max(SmoothPolynomial(kOracleMaxN + 1), {}, 1), std::invalid_argument);
}

TEST(Oracle, WorkerEnvironment) {
  setenv("LAA_WORKERS", "3", 1);
  EXPECT_EQ(default_workers(), 3);
  unsetenv("LAA_WORKERS");
  EXPECT_GE(default_workers(), 1);
}

}  // namespace
}  // namespace laa
