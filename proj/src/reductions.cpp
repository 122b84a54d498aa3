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

#include "laa/reductions.hpp"

#include <cmath>
#include <stdexcept>

namespace laa {

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kMaxCut:
      return "maxcut";
    case ProblemKind::kMaxDicut:
      return "maxdicut";
    case ProblemKind::kHypercut:
      return "hypercut";
    case ProblemKind::kDensest:
      return "densest";
    case ProblemKind::kMaxKSat:
      return "maxksat";
  }
  return "unknown";
}

ProblemKind parse_problem_kind(std::string_view name) {
  for (auto kind : {ProblemKind::kMaxCut, ProblemKind::kMaxDicut, ProblemKind::kHypercut, ProblemKind::kDensest,
                    ProblemKind::kMaxKSat})
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown problem kind '" + std::string(name) + "'");
}

int Problem::n() const {
  return std::visit([](const auto& inst) { return inst.n(); }, instance);
}

SmoothPolynomial maxcut_polynomial(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("maxcut_polynomial: graph must be undirected");
  PolynomialBuilder b(g.n());
  for (int i = 0; i < g.n(); ++i)
    if (g.degree(i) > 0) b.add_term({i}, g.degree(i));
  for (const auto& [u, v] : g.edges()) b.add_term({u, v}, -2.0);
  return b.build();
}

SmoothPolynomial maxdicut_polynomial(const Graph& g) {
  if (!g.directed()) throw std::invalid_argument("maxdicut_polynomial: graph must be directed");
  PolynomialBuilder b(g.n());
  for (const auto& [u, v] : g.edges()) {
    b.add_term({v}, 1.0);
    b.add_term({u, v}, -1.0);
  }
  return b.build();
}

SmoothPolynomial hypercut_polynomial(const Hypergraph& h) {
  PolynomialBuilder b(h.n());
  std::vector<std::pair<int, bool>> ones, zeros;
  for (const auto& e : h.edges()) {
    ones.clear();
    zeros.clear();
    for (int v : e) {
      ones.emplace_back(v, true);
      zeros.emplace_back(v, false);
    }
    b.add_constant(1.0);
    b.add_product(ones, -1.0);
    b.add_product(zeros, -1.0);
  }
  return b.build();
}

std::vector<std::string> hypercut_lint(const Hypergraph& h) {
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < h.edges().size(); ++i)
    if (h.edges()[i].size() == 1)
      warnings.push_back("edge " + std::to_string(i) + " is a singleton {" + std::to_string(h.edges()[i][0]) +
                         "} and is never cut");
  return warnings;
}

PipSpec densest_subgraph_pip(const Graph& g, int k) {
  if (g.directed()) throw std::invalid_argument("densest_subgraph_pip: graph must be undirected");
  if (k < 1 || k > g.n()) throw std::invalid_argument("densest_subgraph_pip: k outside [1, n]");
  PolynomialBuilder obj(g.n());
  for (const auto& [u, v] : g.edges()) obj.add_term({u, v}, 1.0);
  PolynomialBuilder size(g.n());
  for (int i = 0; i < g.n(); ++i) size.add_term({i}, 1.0);
  PipSpec spec;
  spec.objective = obj.build();
  spec.constraints.push_back({size.build(), static_cast<double>(k), static_cast<double>(k)});
  spec.cardinality = k;
  return spec;
}

SmoothPolynomial maxksat_polynomial(const CnfFormula& f) {
  PolynomialBuilder b(f.n());
  std::vector<std::pair<int, bool>> factors;
  for (const auto& clause : f.clauses()) {
    factors.clear();
    // (1 - x_i) for a positive literal, x_j for a negative one.
    for (const auto& lit : clause) factors.emplace_back(lit.var, !lit.positive);
    b.add_constant(1.0);
    b.add_product(factors, -1.0);
  }
  return b.build();
}

PipSpec to_pip(const Problem& problem) {
  PipSpec spec;
  switch (problem.kind) {
    case ProblemKind::kMaxCut:
      spec.objective = maxcut_polynomial(std::get<Graph>(problem.instance));
      break;
    case ProblemKind::kMaxDicut:
      spec.objective = maxdicut_polynomial(std::get<Graph>(problem.instance));
      break;
    case ProblemKind::kHypercut:
      spec.objective = hypercut_polynomial(std::get<Hypergraph>(problem.instance));
      break;
    case ProblemKind::kDensest:
      spec = densest_subgraph_pip(std::get<Graph>(problem.instance), problem.k);
      break;
    case ProblemKind::kMaxKSat:
      spec.objective = maxksat_polynomial(std::get<CnfFormula>(problem.instance));
      break;
  }
  return spec;
}

double native_value(const Problem& problem, const BinaryVector& x) {
  switch (problem.kind) {
    case ProblemKind::kMaxCut:
      return cut_size(std::get<Graph>(problem.instance), x);
    case ProblemKind::kMaxDicut:
      return dicut_size(std::get<Graph>(problem.instance), x);
    case ProblemKind::kHypercut:
      return hypercut_size(std::get<Hypergraph>(problem.instance), x);
    case ProblemKind::kDensest:
      return induced_edges(std::get<Graph>(problem.instance), x);
    case ProblemKind::kMaxKSat:
      return std::get<CnfFormula>(problem.instance).satisfied(x);
  }
  return 0.0;
}

double dense_lower_bound(ProblemKind kind, const DenseParams& params) {
  const double n2 = static_cast<double>(params.n) * params.n;
  switch (kind) {
    case ProblemKind::kMaxCut:
    case ProblemKind::kMaxDicut:
      return params.delta * n2 / 4.0;
    case ProblemKind::kMaxKSat:
      return (1.0 - std::ldexp(1.0, -params.k)) * (params.m - params.lower_order);
    case ProblemKind::kDensest:
      return params.gamma * params.gamma * params.delta * n2 / 2.0;
    case ProblemKind::kHypercut:
      break;
  }
  throw std::invalid_argument("dense_lower_bound: no bound for problem kind '" + to_string(kind) + "'");
}

int narrow_clause_count(const CnfFormula& f) {
  int count = 0;
  for (const auto& clause : f.clauses()) count += static_cast<int>(clause.size()) < f.k();
  return count;
}

double epsilon_prime(ProblemKind kind, double epsilon, const DenseParams& params) {
  switch (kind) {
    case ProblemKind::kMaxCut:
      return epsilon * params.delta / 16.0;
    case ProblemKind::kMaxDicut:
      return epsilon * params.delta / 4.0;
    case ProblemKind::kMaxKSat:
      return epsilon * std::ldexp(1.0, -params.k);
    case ProblemKind::kDensest:
      return epsilon * params.gamma * params.gamma * params.delta / 2.0;
    case ProblemKind::kHypercut:
      break;
  }
  throw std::invalid_argument("epsilon_prime: no rule for problem kind '" + to_string(kind) + "'");
}

}  // namespace laa
