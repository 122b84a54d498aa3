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

#ifndef LAA_SELFCHECK_HPP
#define LAA_SELFCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace laa {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Desk-scale invariant suites (encodings, decomposition, estimator, LP,
/// rounding, oracle, fallback). Deterministic for a given seed.
std::vector<CheckResult> run_self_checks(std::uint64_t seed = 1);

}  // namespace laa

#endif  // LAA_SELFCHECK_HPP
