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

#include "laa/serialization.hpp"

#include <string>

namespace laa {

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.contains(name)) throw Error(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(std::string("field '") + name + "' has the wrong type");
  }
}

Json vector_json(const BinaryVector& x) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(x(i));
  return out;
}

BinaryVector vector_from(const std::vector<int>& v) {
  BinaryVector x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x(static_cast<Eigen::Index>(i)) = v[i];
  return x;
}

}  // namespace

Json instance_to_json(const Instance& instance) {
  Json j;
  if (const auto* g = std::get_if<Graph>(&instance)) {
    j["kind"] = "graph";
    j["n"] = g->n();
    j["directed"] = g->directed();
    Json edges = Json::array();
    for (const auto& [u, v] : g->edges()) edges.push_back({u, v});
    j["edges"] = edges;
  } else if (const auto* h = std::get_if<Hypergraph>(&instance)) {
    j["kind"] = "hypergraph";
    j["n"] = h->n();
    j["d"] = h->dimension();
    j["edges"] = h->edges();
  } else {
    const auto& f = std::get<CnfFormula>(instance);
    j["kind"] = "cnf";
    j["n"] = f.n();
    j["k"] = f.k();
    Json clauses = Json::array();
    for (const auto& clause : f.clauses()) {
      Json c = Json::array();
      for (const auto& lit : clause) c.push_back(lit.positive ? lit.var + 1 : -(lit.var + 1));
      clauses.push_back(c);
    }
    j["clauses"] = clauses;
  }
  return j;
}

Instance instance_from_json(const Json& j) {
  const auto kind = field<std::string>(j, "kind");
  const int n = field<int>(j, "n");
  try {
    if (kind == "graph") {
      const bool directed = j.value("directed", false);
      std::vector<Edge> edges;
      for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
        if (e.size() != 2) throw Error("field 'edges': every edge needs two endpoints");
        edges.emplace_back(e[0], e[1]);
      }
      return Graph(n, std::move(edges), directed);
    }
    if (kind == "hypergraph")
      return Hypergraph(n, field<int>(j, "d"), field<std::vector<std::vector<int>>>(j, "edges"));
    if (kind == "cnf") {
      std::vector<Clause> clauses;
      for (const auto& c : field<std::vector<std::vector<int>>>(j, "clauses")) {
        Clause clause;
        for (int lit : c) {
          if (lit == 0) throw Error("field 'clauses': literal 0 is not allowed");
          clause.push_back({std::abs(lit) - 1, lit > 0});
        }
        clauses.push_back(std::move(clause));
      }
      return CnfFormula(n, std::move(clauses), j.value("k", 0));
    }
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("invalid instance: ") + e.what());
  }
  throw Error("field 'kind': unknown instance kind '" + kind + "'");
}

Json polynomial_to_json(const SmoothPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [vars, coeff] : p.monomials()) terms.push_back({vars, coeff});
  return Json{{"n", p.n()}, {"t", p.constant()}, {"monomials", terms}};
}

SmoothPolynomial polynomial_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  PolynomialBuilder b(n);
  b.add_constant(j.value("t", 0.0));
  if (j.contains("monomials")) {
    for (const auto& term : j.at("monomials")) {
      if (!term.is_array() || term.size() != 2) throw Error("field 'monomials': expected [[indices], coeff] pairs");
      const auto vars = term[0].get<std::vector<int>>();
      for (int v : vars)
        if (v < 0 || v >= n) throw Error("field 'monomials': index " + std::to_string(v) + " out of range");
      b.add_term(vars, term[1].get<double>());
    }
  }
  return b.build();
}

Json bundle_to_json(const PredictionBundle& b) {
  Json bits = Json::object();
  for (const auto& [j, bit] : b.bits) bits[std::to_string(j)] = bit;
  Json out{{"sample", b.sample.indices}, {"seed", b.sample.seed}, {"bits", bits}};
  if (b.truth) out["truth"] = vector_json(*b.truth);
  return out;
}

PredictionBundle bundle_from_json(const Json& j) {
  PredictionBundle b;
  b.sample.indices = field<std::vector<int>>(j, "sample");
  b.sample.seed = j.value("seed", std::uint64_t{0});
  if (!j.contains("bits") || !j.at("bits").is_object()) throw Error("missing field 'bits'");
  for (const auto& [key, value] : j.at("bits").items()) {
    int idx = 0;
    try {
      idx = std::stoi(key);
    } catch (const std::exception&) {
      throw Error("field 'bits': key '" + key + "' is not an index");
    }
    b.bits[idx] = value.get<int>();
  }
  if (j.contains("truth")) b.truth = vector_from(j.at("truth").get<std::vector<int>>());
  if (!b.covers_sample()) throw Error("field 'bits': must give a 0/1 bit for exactly the sampled indices");
  return b;
}

Json report_to_json(const RunReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["z"] = vector_json(r.z);
  j["value"] = r.value;
  j["error_guess_used"] = r.error_guess_used;
  j["epsilon"] = r.epsilon;
  j["sample_size"] = r.sample_size;
  j["slack_claimed"] = r.slack_claimed;
  j["fallback_used"] = r.fallback_used;
  j["seed"] = r.seed;
  j["wall_time_ms"] = r.wall_time_ms;
  j["pipeline_value"] = r.pipeline_value ? Json(*r.pipeline_value) : Json(nullptr);
  j["fallback_value"] = r.fallback_value ? Json(*r.fallback_value) : Json(nullptr);
  j["probes"] = r.probes;
  j["guesses_tried"] = r.guesses_tried;
  j["feasible_guesses"] = r.feasible_guesses;
  j["lp_solves"] = r.lp_solves;
  j["bundle_index"] = r.bundle_index;
  j["rounding_within_budget"] = r.rounding_within_budget;
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace laa
