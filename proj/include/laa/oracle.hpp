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

#ifndef LAA_ORACLE_HPP
#define LAA_ORACLE_HPP

#include <vector>

#include "laa/common.hpp"
#include "laa/linearize.hpp"
#include "laa/polynomial.hpp"
#include "laa/reductions.hpp"

namespace laa {

inline constexpr int kOracleMaxN = 26;

struct OracleResult {
  BinaryVector x;
  double value = 0.0;
};

/// Exhaustive maximum of p over binary vectors satisfying every constraint
/// (tolerance 1e-9). Among maximizers returns the lexicographically smallest,
/// x_0 being the most significant position. Throws std::invalid_argument
/// for n > kOracleMaxN and InfeasibleError when nothing is feasible.
/// workers <= 0 uses LAA_WORKERS or the hardware concurrency.
OracleResult brute_force_max(const SmoothPolynomial& p, const std::vector<PolyConstraint>& constraints = {},
                             int workers = 0);

/// Exact optimum of the problem's PIP.
OracleResult solve_exact(const Problem& problem, int workers = 0);

/// The truth vector used by simulated predictors.
BinaryVector canonical_optimum(const Problem& problem);

/// Worker count from the LAA_WORKERS environment variable, else the number
/// of hardware threads (at least 1).
int default_workers();

}  // namespace laa

#endif  // LAA_ORACLE_HPP
