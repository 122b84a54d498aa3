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

#include "laa/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace laa {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// ceil() that ignores representation noise just above an integer.
long long ceil_count(double value) {
  return static_cast<long long>(std::ceil(value - 1e-9));
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, bool directed)
    : n_(n), directed_(directed), edges_(std::move(edges)), adjacency_(n > 0 ? n : 0) {
  require(n >= 0, "graph: negative vertex count");
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    require(u >= 0 && u < n && v >= 0 && v < n, "graph: endpoint out of range");
    require(u != v, "graph: self-loop");
    if (!directed_ && u > v) std::swap(u, v);
    require(seen.insert({u, v}).second, "graph: duplicate edge");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

Hypergraph::Hypergraph(int n, int d, std::vector<std::vector<int>> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
  require(n >= 0 && d >= 1, "hypergraph: bad size");
  for (auto& e : edges_) {
    require(!e.empty() && static_cast<int>(e.size()) <= d, "hypergraph: edge size outside [1, d]");
    std::sort(e.begin(), e.end());
    require(std::adjacent_find(e.begin(), e.end()) == e.end(), "hypergraph: repeated vertex in edge");
    require(e.front() >= 0 && e.back() < n, "hypergraph: vertex out of range");
  }
}

CnfFormula::CnfFormula(int n, std::vector<Clause> clauses, int k)
    : n_(n), k_(k), clauses_(std::move(clauses)) {
  require(n >= 0, "cnf: negative variable count");
  int widest = 0;
  for (const auto& clause : clauses_) {
    require(!clause.empty(), "cnf: empty clause");
    std::set<int> vars;
    for (const auto& lit : clause) {
      require(lit.var >= 0 && lit.var < n, "cnf: variable out of range");
      require(vars.insert(lit.var).second, "cnf: variable repeated in clause");
    }
    widest = std::max(widest, static_cast<int>(clause.size()));
  }
  if (k_ == 0) k_ = widest;
  require(widest <= k_, "cnf: clause wider than k");
}

int CnfFormula::satisfied(const BinaryVector& x) const {
  if (x.size() != n_) throw DimensionError("cnf: assignment length mismatch");
  int count = 0;
  for (const auto& clause : clauses_) {
    for (const auto& lit : clause) {
      if ((x(lit.var) == 1) == lit.positive) {
        ++count;
        break;
      }
    }
  }
  return count;
}

DensityReport density(const Graph& g, double delta0) {
  if (g.n() < 2) throw DegenerateInstanceError("density: graph needs at least two vertices");
  const double pairs = static_cast<double>(g.n()) * (g.n() - 1);
  const double m = static_cast<double>(g.edge_count());
  const double delta = g.directed() ? m / pairs : 2.0 * m / pairs;
  return {delta, delta >= delta0};
}

DensityReport density(const Hypergraph& h, double delta0) {
  if (h.n() < 1) throw DegenerateInstanceError("density: empty hypergraph");
  const double delta = static_cast<double>(h.edges().size()) / std::pow(h.n(), h.dimension());
  return {delta, delta >= delta0};
}

DensityReport density(const CnfFormula& f, double delta0) {
  if (f.n() < 1 || f.k() < 1) throw DegenerateInstanceError("density: empty formula");
  const double delta = static_cast<double>(f.clause_count()) / std::pow(f.n(), f.k());
  return {delta, delta >= delta0};
}

int cut_size(const Graph& g, const BinaryVector& x) {
  if (x.size() != g.n()) throw DimensionError("cut_size: length mismatch");
  int count = 0;
  for (const auto& [u, v] : g.edges()) count += x(u) != x(v);
  return count;
}

int dicut_size(const Graph& g, const BinaryVector& x) {
  if (x.size() != g.n()) throw DimensionError("dicut_size: length mismatch");
  int count = 0;
  for (const auto& [u, v] : g.edges()) count += (x(u) == 0 && x(v) == 1);
  return count;
}

int hypercut_size(const Hypergraph& h, const BinaryVector& x) {
  if (x.size() != h.n()) throw DimensionError("hypercut_size: length mismatch");
  int count = 0;
  for (const auto& e : h.edges()) {
    bool ones = false, zeros = false;
    for (int v : e) (x(v) ? ones : zeros) = true;
    count += ones && zeros;
  }
  return count;
}

int induced_edges(const Graph& g, const BinaryVector& x) {
  if (x.size() != g.n()) throw DimensionError("induced_edges: length mismatch");
  int count = 0;
  for (const auto& [u, v] : g.edges()) count += (x(u) == 1 && x(v) == 1);
  return count;
}

namespace {

// Splits text into lines, skipping blank and "c" comment lines; yields
// (1-based line number, tokens).
template <typename Fn>
void for_each_content_line(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens[0] == "c" || tokens[0][0] == '%') {
      if (end == text.size()) break;
      continue;
    }
    fn(line_no, tokens);
    if (end == text.size()) break;
  }
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

Graph parse_dimacs_graph(std::string_view text, bool directed) {
  int n = -1;
  int declared = 0;
  int last_line = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for_each_content_line(text, [&](int line, const std::vector<std::string>& tok) {
    last_line = line;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
        throw ParseError(line, "malformed header, expected 'p edge n m'");
      n = parse_int(tok[2], line);
      declared = parse_int(tok[3], line);
      if (n < 0 || declared < 0) throw ParseError(line, "negative size in header");
    } else if (tok[0] == "e" || tok[0] == "a") {
      if (n < 0) throw ParseError(line, "edge before header");
      if (tok.size() != 3) throw ParseError(line, "malformed edge line");
      int u = parse_int(tok[1], line);
      int v = parse_int(tok[2], line);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line, "vertex out of range");
      if (u == v) throw ParseError(line, "self-loop");
      Edge e{u - 1, v - 1};
      if (!directed && e.first > e.second) std::swap(e.first, e.second);
      if (!seen.insert(e).second) throw ParseError(line, "duplicate edge");
      edges.push_back(e);
    } else {
      throw ParseError(line, "unknown line type '" + tok[0] + "'");
    }
  });
  if (n < 0) throw ParseError(last_line + 1, "missing 'p edge' header");
  if (static_cast<int>(edges.size()) != declared)
    throw ParseError(last_line, "header declares " + std::to_string(declared) + " edges, found " +
                                    std::to_string(edges.size()));
  return Graph(n, std::move(edges), directed);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  int n = -1;
  int declared = 0;
  int last_line = 0;
  std::vector<Clause> clauses;
  Clause pending;
  for_each_content_line(text, [&](int line, const std::vector<std::string>& tok) {
    last_line = line;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(line, "malformed header, expected 'p cnf n m'");
      n = parse_int(tok[2], line);
      declared = parse_int(tok[3], line);
      if (n < 0 || declared < 0) throw ParseError(line, "negative size in header");
      return;
    }
    if (n < 0) throw ParseError(line, "clause before header");
    for (const auto& t : tok) {
      int lit = parse_int(t, line);
      if (lit == 0) {
        if (pending.empty()) throw ParseError(line, "empty clause");
        clauses.push_back(std::move(pending));
        pending.clear();
        continue;
      }
      int var = std::abs(lit) - 1;
      if (var >= n) throw ParseError(line, "variable out of range");
      Literal l{var, lit > 0};
      bool duplicate = false;
      for (const auto& other : pending) {
        if (other.var != var) continue;
        if (other.positive != l.positive) throw ParseError(line, "clause contains both polarities of a variable");
        duplicate = true;
      }
      if (!duplicate) pending.push_back(l);
    }
  });
  if (n < 0) throw ParseError(last_line + 1, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(last_line, "truncated clause (missing 0 terminator)");
  if (static_cast<int>(clauses.size()) != declared)
    throw ParseError(last_line, "header declares " + std::to_string(declared) + " clauses, found " +
                                    std::to_string(clauses.size()));
  return CnfFormula(n, std::move(clauses));
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n() << ' ' << f.clause_count() << '\n';
  for (const auto& clause : f.clauses()) {
    for (const auto& lit : clause) out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

void check_generator_args(int n, double delta) {
  require(n >= 2, "generator: n must be at least 2");
  require(delta > 0.0 && delta <= 1.0, "generator: delta must lie in (0, 1]");
}

std::vector<Edge> choose_pairs(std::vector<Edge> candidates, long long count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  candidates.resize(static_cast<std::size_t>(count));
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

}  // namespace

Graph generate_dense_graph(int n, double delta, std::uint64_t seed) {
  check_generator_args(n, delta);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  const long long count = std::min<long long>(ceil_count(delta * all.size()), all.size());
  return Graph(n, choose_pairs(std::move(all), count, seed));
}

Graph generate_dense_digraph(int n, double delta, std::uint64_t seed) {
  check_generator_args(n, delta);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) all.emplace_back(u, v);
  const long long count = std::min<long long>(ceil_count(delta * all.size()), all.size());
  return Graph(n, choose_pairs(std::move(all), count, seed), true);
}

PlantedGraph generate_planted_bipartite(int n, double delta, std::uint64_t seed) {
  check_generator_args(n, delta);
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  BinaryVector side = BinaryVector::Zero(n);
  for (int i = n / 2; i < n; ++i) side(order[i]) = 1;
  if (side(0) == 1) side = BinaryVector::Ones(n) - side;

  std::vector<Edge> crossing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (side(u) != side(v)) crossing.emplace_back(u, v);
  const long long count = ceil_count(delta * n * (n - 1) / 2.0);
  require(count <= static_cast<long long>(crossing.size()),
          "planted bipartite: delta too large for a bipartite graph");
  return {Graph(n, choose_pairs(std::move(crossing), count, derive_seed(seed, 1))), side};
}

Hypergraph generate_uniform_hypergraph(int n, int d, int m, std::uint64_t seed) {
  require(n >= d && d >= 1 && m >= 0, "hypergraph generator: bad arguments");
  double subsets = 1.0;
  for (int i = 0; i < d; ++i) subsets = subsets * (n - i) / (i + 1);
  require(m <= subsets + 0.5, "hypergraph generator: more edges than d-subsets");
  std::mt19937_64 rng(seed);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::set<std::vector<int>> chosen;
  std::vector<std::vector<int>> edges;
  while (static_cast<int>(edges.size()) < m) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> e(pool.begin(), pool.begin() + d);
    std::sort(e.begin(), e.end());
    if (chosen.insert(e).second) edges.push_back(std::move(e));
  }
  return Hypergraph(n, d, std::move(edges));
}

CnfFormula generate_random_cnf(int n, int k, int m, std::uint64_t seed) {
  require(n >= k && k >= 1 && m >= 0, "cnf generator: bad arguments");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Clause> clauses;
  for (int c = 0; c < m; ++c) {
    std::shuffle(pool.begin(), pool.end(), rng);
    Clause clause;
    for (int i = 0; i < k; ++i) clause.push_back({pool[i], coin(rng)});
    std::sort(clause.begin(), clause.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(n, std::move(clauses), k);
}

}  // namespace laa
