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

#include "laa/instances.hpp"
#include "test_support.hpp"

namespace laa {
namespace {

TEST(Density, CompleteGraphIsOne) {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_DOUBLE_EQ(density(k4).delta, 1.0);
}

TEST(Density, HalfOfK4) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(density(g).delta, 0.5);
  EXPECT_TRUE(density(g, 0.5).dense_threshold_met);
  EXPECT_FALSE(density(g, 0.6).dense_threshold_met);
}

TEST(Density, CnfCountsClausesOverNToTheK) {
  std::vector<Clause> clauses;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) clauses.push_back({{a, true}, {b, false}});
  clauses.push_back({{0, true}, {1, true}});
  clauses.push_back({{1, true}, {2, true}});
  clauses.push_back({{0, false}, {2, false}});
  ASSERT_EQ(clauses.size(), 9u);
  CnfFormula f(3, clauses);
  EXPECT_EQ(f.k(), 2);
  EXPECT_DOUBLE_EQ(density(f).delta, 1.0);
}

TEST(Density, DirectedAndHypergraph) {
  Graph d(3, {{0, 1}, {1, 0}, {2, 0}}, true);
  EXPECT_DOUBLE_EQ(density(d).delta, 0.5);
  Hypergraph h(2, 2, {{0, 1}, {0}});
  EXPECT_DOUBLE_EQ(density(h).delta, 0.5);
}

TEST(Density, TinyGraphIsDegenerate) {
  EXPECT_THROW(density(Graph(1, {})), DegenerateInstanceError);
}

TEST(Graph, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(2, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(3, {{0, 1}, {1, 0}}, true));
}

TEST(Graph, NeighborhoodsAreSymmetric) {
  Graph g(4, {{2, 0}, {1, 2}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_EQ(g.neighbors(2), (std::vector<int>{0, 1}));
  EXPECT_EQ(g.degree(3), 0);
}

TEST(Dimacs, ParsesEdgeFormat) {
  const Graph g = parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 3");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Dimacs, SkipsCommentsAndAcceptsColHeader) {
  const Graph g = parse_dimacs_graph("c a comment\np col 2 1\n\ne 2 1\n");
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Dimacs, ReportsLineNumbers) {
  try {
    parse_dimacs_graph("p edge 2 1\ne 1 3");
    FAIL() << "out-of-range vertex accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_dimacs_graph("p edge 2 1\ne 1 1"), ParseError);
  EXPECT_THROW(parse_dimacs_graph("p edge 3 2\ne 1 2\ne 2 1"), ParseError);
  EXPECT_THROW(parse_dimacs_graph("p edge x 1\n"), ParseError);
  EXPECT_THROW(parse_dimacs_graph("e 1 2\n"), ParseError);
  EXPECT_THROW(parse_dimacs_graph("p edge 3 2\ne 1 2\n"), ParseError);
}

TEST(Dimacs, DirectedArcsKeepOrientation) {
  const Graph g = parse_dimacs_graph("p edge 3 2\na 2 1\ne 3 1\n", true);
  EXPECT_TRUE(g.directed());
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 0}, {2, 0}}));
}

TEST(Dimacs, GraphRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_dense_graph(3 + static_cast<int>(seed % 9), 0.4, seed);
    EXPECT_EQ(parse_dimacs_graph(to_dimacs(g)), g);
    const Graph d = generate_dense_digraph(3 + static_cast<int>(seed % 7), 0.3, seed);
    EXPECT_EQ(parse_dimacs_graph(to_dimacs(d), true), d);
  }
}

TEST(Cnf, ParsesClause) {
  const CnfFormula f = parse_dimacs_cnf("p cnf 2 1\n1 -2 0");
  ASSERT_EQ(f.clause_count(), 1u);
  EXPECT_EQ(f.clauses()[0], (Clause{{0, true}, {1, false}}));
  EXPECT_EQ(f.k(), 2);
}

TEST(Cnf, RejectsTautologyAndTruncation) {
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 -1 0"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 1\n1"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 1\n2 0"), ParseError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 2\n1 0"), ParseError);
}

TEST(Cnf, ClausesMaySpanLines) {
  const CnfFormula f = parse_dimacs_cnf("p cnf 3 2\n1 2\n-3 0 2 0\n");
  ASSERT_EQ(f.clause_count(), 2u);
  EXPECT_EQ(f.clauses()[0].size(), 3u);
}

TEST(Cnf, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CnfFormula f = generate_random_cnf(8, 3, 20, seed);
    EXPECT_EQ(parse_dimacs_cnf(to_dimacs(f)), f);
  }
}

TEST(Generators, DenseGraphCounts) {
  const Graph k4 = generate_dense_graph(4, 1.0, 99);
  EXPECT_EQ(k4.edge_count(), 6u);
  const Graph a = generate_dense_graph(10, 0.5, 7);
  const Graph b = generate_dense_graph(10, 0.5, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.edge_count(), 23u);
}

TEST(Generators, DensityMeetsTarget) {
  for (int n = 2; n <= 20; ++n)
    for (double delta : {0.05, 0.3, 0.5, 0.77, 1.0}) {
      EXPECT_GE(density(generate_dense_graph(n, delta, n)).delta, delta - 1e-12);
      EXPECT_GE(density(generate_dense_digraph(n, delta, n)).delta, delta - 1e-12);
    }
}

TEST(Generators, PlantedSplitCutsEveryEdge) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PlantedGraph pg = generate_planted_bipartite(60, 0.5, seed);
    EXPECT_EQ(pg.truth(0), 0);
    EXPECT_EQ(pg.graph.edge_count(), 885u);
    EXPECT_EQ(testing::matrix_cut(pg.graph, pg.truth), 885);
  }
  EXPECT_THROW(generate_planted_bipartite(10, 0.9, 1), std::invalid_argument);
}

TEST(Generators, HypergraphAndCnfShapes) {
  const Hypergraph h = generate_uniform_hypergraph(8, 3, 20, 4);
  EXPECT_EQ(h.edges().size(), 20u);
  for (const auto& e : h.edges()) EXPECT_EQ(e.size(), 3u);
  const CnfFormula f = generate_random_cnf(10, 3, 30, 4);
  EXPECT_EQ(f.clause_count(), 30u);
  EXPECT_EQ(f.k(), 3);
}

TEST(Objectives, AgreeWithMatrixCounts) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_dense_graph(7, 0.5, seed);
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
      const BinaryVector x = testing::bits(mask, 7);
      EXPECT_EQ(cut_size(g, x), testing::matrix_cut(g, x));
      EXPECT_EQ(induced_edges(g, x), testing::inside_edges(g, x));
    }
  }
}

}  // namespace
}  // namespace laa
