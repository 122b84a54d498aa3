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

#ifndef LAA_SERIALIZATION_HPP
#define LAA_SERIALIZATION_HPP

#include <string_view>

#include <json.hpp>

#include "laa/instances.hpp"
#include "laa/pipelines.hpp"
#include "laa/polynomial.hpp"
#include "laa/prediction.hpp"
#include "laa/reductions.hpp"

namespace laa {

using Json = nlohmann::ordered_json;

/// {"kind": "graph", "n", "directed", "edges": [[u, v], ...]}
/// {"kind": "hypergraph", "n", "d", "edges": [[...], ...]}
/// {"kind": "cnf", "n", "k", "clauses": [[lit, ...], ...]} with DIMACS-style
/// signed 1-based literals.
Json instance_to_json(const Instance& instance);
/// Throws Error naming the offending field.
Instance instance_from_json(const Json& j);

/// {"n", "t", "monomials": [[[i, ...], coeff], ...]}
Json polynomial_to_json(const SmoothPolynomial& p);
SmoothPolynomial polynomial_from_json(const Json& j);

/// {"sample": [...], "seed", "bits": {"j": 0|1}, "truth": [...] (optional)}
Json bundle_to_json(const PredictionBundle& b);
PredictionBundle bundle_from_json(const Json& j);

Json report_to_json(const RunReport& r);

/// Parses JSON text, rethrowing syntax errors as Error.
Json parse_json(std::string_view text);

}  // namespace laa

#endif  // LAA_SERIALIZATION_HPP
