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

#include "laa/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <thread>

namespace laa {

int default_workers() {
  if (const char* env = std::getenv("LAA_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Per-variable view of a polynomial: flipping x_i changes p by
// +-sum_{(mask, c)} c [state contains mask].
struct FlipTable {
  double constant = 0.0;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> by_var;
  double scale = 1.0;

  FlipTable(const SmoothPolynomial& p) : constant(p.constant()), by_var(p.n()) {
    scale += std::abs(p.constant());
    for (const auto& [vars, coeff] : p.monomials()) {
      scale += std::abs(coeff);
      for (int i : vars) {
        std::uint32_t mask = 0;
        for (int v : vars)
          if (v != i) mask |= 1u << v;
        by_var[i].emplace_back(mask, coeff);
      }
    }
  }

  double derivative(int i, std::uint32_t state) const {
    double sum = 0.0;
    for (const auto& [mask, c] : by_var[i])
      if ((state & mask) == mask) sum += c;
    return sum;
  }
};

BinaryVector to_vector(std::uint32_t state, int n) {
  BinaryVector x(n);
  for (int i = 0; i < n; ++i) x(i) = (state >> i) & 1u;
  return x;
}

// x_0 is the most significant position.
std::uint32_t lex_key(std::uint32_t state, int n) {
  std::uint32_t key = 0;
  for (int i = 0; i < n; ++i) key |= ((state >> i) & 1u) << (n - 1 - i);
  return key;
}

bool feasible_exact(const std::vector<PolyConstraint>& constraints, const BinaryVector& x) {
  for (const auto& c : constraints) {
    const double v = evaluate_exact(c.p, x);
    if (v < c.lower - 1e-9 || v > c.upper + 1e-9) return false;
  }
  return true;
}

struct Candidate {
  double value = 0.0;
  std::uint32_t key = 0;
  std::uint32_t state = 0;
};

bool ties(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

bool better(const Candidate& a, const std::optional<Candidate>& b) {
  if (!b) return true;
  if (ties(a.value, b->value)) return a.key < b->key;
  return a.value > b->value;
}

}  // namespace

OracleResult brute_force_max(const SmoothPolynomial& p, const std::vector<PolyConstraint>& constraints,
                             int workers) {
  const int n = p.n();
  if (n > kOracleMaxN) throw std::invalid_argument("brute_force_max: n = " + std::to_string(n) + " exceeds " +
                                                   std::to_string(kOracleMaxN));
  for (const auto& c : constraints)
    if (c.p.n() != n) throw DimensionError("brute_force_max: constraint over a different variable count");
  if (workers <= 0) workers = default_workers();

  const FlipTable objective(p);
  std::vector<FlipTable> tables;
  for (const auto& c : constraints) tables.emplace_back(c.p);

  // x_0..x_{fixed-1} are fixed per partition; the rest are scanned in Gray order.
  const int fixed = std::min(n, 6);
  const int free_bits = n - fixed;
  const std::uint32_t partitions = 1u << fixed;

  auto scan = [&](std::uint32_t part) {
    std::uint32_t state = 0;
    for (int j = 0; j < fixed; ++j)
      if ((part >> (fixed - 1 - j)) & 1u) state |= 1u << j;
    auto exact_values = [&](std::uint32_t s, double& value, std::vector<double>& cons) {
      const BinaryVector x = to_vector(s, n);
      value = evaluate_exact(p, x);
      for (std::size_t k = 0; k < constraints.size(); ++k) cons[k] = evaluate_exact(constraints[k].p, x);
    };
    double value = 0.0;
    std::vector<double> cons(constraints.size());
    exact_values(state, value, cons);

    std::optional<Candidate> best;
    const std::uint64_t steps = std::uint64_t{1} << free_bits;
    for (std::uint64_t g = 0;; ++g) {
      bool ok = true;
      for (std::size_t k = 0; k < constraints.size() && ok; ++k) {
        const double tol = 1e-7 * tables[k].scale;
        ok = cons[k] >= constraints[k].lower - tol && cons[k] <= constraints[k].upper + tol;
      }
      if (ok && (!best || value >= best->value - 1e-7 * objective.scale)) {
        const BinaryVector x = to_vector(state, n);
        if (feasible_exact(constraints, x)) {
          Candidate c{evaluate_exact(p, x), lex_key(state, n), state};
          if (better(c, best)) best = c;
        }
      }
      if (g + 1 == steps) break;
      // Gray step: bit j of the code maps to variable n-1-j.
      const int j = std::countr_zero(g + 1);
      const int var = n - 1 - j;
      const bool up = !((state >> var) & 1u);
      const double sign = up ? 1.0 : -1.0;
      value += sign * objective.derivative(var, state);
      for (std::size_t k = 0; k < constraints.size(); ++k) cons[k] += sign * tables[k].derivative(var, state);
      state ^= 1u << var;
      if (((g + 1) & 0xFFFF) == 0) exact_values(state, value, cons);
    }
    return best;
  };

  std::vector<std::optional<Candidate>> results(partitions);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t part; (part = next.fetch_add(1)) < partitions;) results[part] = scan(part);
  };
  const int threads = std::min<int>(workers, static_cast<int>(partitions));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::optional<Candidate> best;
  for (const auto& r : results)
    if (r && better(*r, best)) best = r;
  if (!best) throw InfeasibleError("brute_force_max: no binary vector satisfies the constraints");
  return {to_vector(best->state, n), best->value};
}

OracleResult solve_exact(const Problem& problem, int workers) {
  const PipSpec spec = to_pip(problem);
  return brute_force_max(spec.objective, spec.constraints, workers);
}

BinaryVector canonical_optimum(const Problem& problem) { return solve_exact(problem).x; }

}  // namespace laa
