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

#ifndef LAA_INSTANCES_HPP
#define LAA_INSTANCES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laa/common.hpp"

namespace laa {

using Edge = std::pair<int, int>;

/// Simple graph on vertices [0, n). Undirected edges are stored with
/// first < second; directed edges keep their orientation.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on out-of-range endpoints, self-loops
  /// or duplicate edges.
  Graph(int n, std::vector<Edge> edges, bool directed = false);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Undirected neighbourhood N(i) (both orientations for digraphs), sorted.
  const std::vector<int>& neighbors(int i) const { return adjacency_[i]; }
  int degree(int i) const { return static_cast<int>(adjacency_[i].size()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Hypergraph of dimension d: every edge is a set of 1..d distinct vertices.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, int d, std::vector<std::vector<int>> edges);

  int n() const { return n_; }
  int dimension() const { return d_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<std::vector<int>> edges_;
};

struct Literal {
  int var = 0;
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// CNF over variables [0, n); k is the maximum clause width.
class CnfFormula {
 public:
  CnfFormula() = default;
  /// k defaults to the widest clause when left at 0.
  CnfFormula(int n, std::vector<Clause> clauses, int k = 0);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t clause_count() const { return clauses_.size(); }

  /// Number of clauses satisfied by x.
  int satisfied(const BinaryVector& x) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Clause> clauses_;
};

struct DensityReport {
  double delta = 0.0;
  bool dense_threshold_met = false;
};

/// Undirected: 2|E|/(n(n-1)); directed: |E|/(n(n-1)).
DensityReport density(const Graph& g, double delta0 = 0.0);
/// |E| / n^d.
DensityReport density(const Hypergraph& h, double delta0 = 0.0);
/// m / n^k.
DensityReport density(const CnfFormula& f, double delta0 = 0.0);

/// Native objectives, computed by direct scan.
int cut_size(const Graph& g, const BinaryVector& x);
/// Directed edges (i, j) with x_i = 0 and x_j = 1.
int dicut_size(const Graph& g, const BinaryVector& x);
int hypercut_size(const Hypergraph& h, const BinaryVector& x);
int induced_edges(const Graph& g, const BinaryVector& x);

/// DIMACS edge format ("p edge n m", "e u v", 1-indexed). With `directed`
/// each "e u v" line is read as the arc u -> v.
Graph parse_dimacs_graph(std::string_view text, bool directed = false);
std::string to_dimacs(const Graph& g);

/// DIMACS CNF ("p cnf n m", zero-terminated clause lines).
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

/// Exactly ceil(delta * n(n-1)/2) distinct edges chosen uniformly.
Graph generate_dense_graph(int n, double delta, std::uint64_t seed);
/// Exactly ceil(delta * n(n-1)) distinct arcs chosen uniformly.
Graph generate_dense_digraph(int n, double delta, std::uint64_t seed);

struct PlantedGraph {
  Graph graph;
  BinaryVector truth;  // planted side indicator, truth(0) == 0
};

/// Bipartite graph across a random balanced split carrying
/// ceil(delta * n(n-1)/2) crossing edges. The planted split cuts every edge,
/// so it is a maximum cut. Throws std::invalid_argument if the split cannot
/// hold that many edges.
PlantedGraph generate_planted_bipartite(int n, double delta, std::uint64_t seed);

/// m distinct edges, each a uniformly random d-subset.
Hypergraph generate_uniform_hypergraph(int n, int d, int m, std::uint64_t seed);

/// m random clauses of width exactly k over distinct variables.
CnfFormula generate_random_cnf(int n, int k, int m, std::uint64_t seed);

}  // namespace laa

#endif  // LAA_INSTANCES_HPP
