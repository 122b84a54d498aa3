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

#ifndef LAA_REDUCTIONS_HPP
#define LAA_REDUCTIONS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "laa/instances.hpp"
#include "laa/linearize.hpp"
#include "laa/polynomial.hpp"

namespace laa {

enum class ProblemKind { kMaxCut, kMaxDicut, kHypercut, kDensest, kMaxKSat };

std::string to_string(ProblemKind kind);
/// Accepts "maxcut", "maxdicut", "hypercut", "densest", "maxksat".
ProblemKind parse_problem_kind(std::string_view name);

/// max p(x) s.t. lower_j <= p_j(x) <= upper_j, x binary.
struct PipSpec {
  SmoothPolynomial objective;
  std::vector<PolyConstraint> constraints;
  bool maximize = true;
  /// Exact number of ones required (k-Densest); enforced after rounding.
  std::optional<int> cardinality;

  int n() const { return objective.n(); }
  int m() const { return static_cast<int>(constraints.size()); }
};

using Instance = std::variant<Graph, Hypergraph, CnfFormula>;

struct Problem {
  ProblemKind kind = ProblemKind::kMaxCut;
  Instance instance;
  /// Subset size for k-Densest.
  int k = 0;

  int n() const;
};

/// sum_i deg(i) x_i - 2 sum_{ij in E} x_i x_j: the number of cut edges.
SmoothPolynomial maxcut_polynomial(const Graph& g);
/// sum_{(i,j) in E} (1 - x_i) x_j.
SmoothPolynomial maxdicut_polynomial(const Graph& g);
/// sum_e 1 - prod_{i in e} x_i - prod_{i in e} (1 - x_i).
SmoothPolynomial hypercut_polynomial(const Hypergraph& h);
/// Human-readable warnings; singleton edges never contribute.
std::vector<std::string> hypercut_lint(const Hypergraph& h);
/// max sum_{ij in E} x_i x_j s.t. sum x_i = k. Throws std::invalid_argument
/// unless 1 <= k <= n.
PipSpec densest_subgraph_pip(const Graph& g, int k);
/// Each clause contributes 1 - prod_{pos}(1 - x_i) prod_{neg} x_j.
SmoothPolynomial maxksat_polynomial(const CnfFormula& f);

/// The PIP of any problem (cut variants and Max-k-SAT have no side
/// constraints).
PipSpec to_pip(const Problem& problem);

/// Objective computed by direct scan of the instance (no polynomial).
double native_value(const Problem& problem, const BinaryVector& x);

struct DenseParams {
  int n = 0;
  double delta = 0.0;
  /// Clause count and width (Max-k-SAT).
  int m = 0;
  int k = 0;
  /// Lower-order clause correction subtracted from m (Max-k-SAT).
  double lower_order = 0.0;
  /// k >= gamma n (k-Densest).
  double gamma = 0.0;
};

/// Lower bound on OPT for a dense instance: cut / dicut delta n^2 / 4,
/// Max-k-SAT (1 - 2^-k)(m - lower_order), k-Densest gamma^2 delta n^2 / 2.
/// Throws std::invalid_argument for kinds without a bound (hypercut).
double dense_lower_bound(ProblemKind kind, const DenseParams& params);

/// Number of clauses narrower than k.
int narrow_clause_count(const CnfFormula& f);

/// Additive accuracy that yields a (1 - eps) ratio through the lower bound:
/// cut eps delta / 16, dicut eps delta / 4, Max-k-SAT eps / 2^k,
/// k-Densest eps gamma^2 delta / 2.
double epsilon_prime(ProblemKind kind, double epsilon, const DenseParams& params);

}  // namespace laa

#endif  // LAA_REDUCTIONS_HPP
