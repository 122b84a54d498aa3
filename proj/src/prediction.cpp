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

#include "laa/prediction.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace laa {

std::vector<int> SampleSet::distinct() const {
  std::vector<int> out = indices;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PredictionBundle::covers_sample() const {
  const auto keys = sample.distinct();
  if (keys.size() != bits.size()) return false;
  auto it = bits.begin();
  for (int j : keys) {
    if (it->first != j || (it->second != 0 && it->second != 1)) return false;
    ++it;
  }
  return true;
}

SampleSet draw_sample(int n, int size, std::uint64_t seed) {
  if (n < 1 || size < 1) throw std::invalid_argument("draw_sample: n and size must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  SampleSet s{{}, seed};
  s.indices.reserve(size);
  for (int k = 0; k < size; ++k) s.indices.push_back(pick(rng));
  return s;
}

SampleSet full_coverage_sample(int n) {
  SampleSet s;
  s.indices.resize(n);
  for (int i = 0; i < n; ++i) s.indices[i] = i;
  return s;
}

long long sample_size_maxcut(double n, double epsilon, double delta, double c0) {
  if (!(epsilon > 0.0) || !(delta > 0.0 && delta <= 1.0) || n < 2.0)
    throw std::invalid_argument("sample_size_maxcut: need eps > 0, 0 < delta <= 1, n >= 2");
  const double eps_prime = epsilon * delta / 16.0;
  const double size = c0 * std::log(n) / (eps_prime * eps_prime * eps_prime * delta);
  return std::max<long long>(1, static_cast<long long>(std::ceil(size - 1e-9)));
}

long long sample_size_pip(double n, double epsilon, double c, int d, double f, double c0) {
  if (!(epsilon > 0.0) || n < 2.0 || d < 1) throw std::invalid_argument("sample_size_pip: bad arguments");
  const double size = c0 * std::pow(c, 4) * f * std::pow(d, 7) * std::log(n) / std::pow(epsilon, 3);
  return std::max<long long>(1, static_cast<long long>(std::ceil(size - 1e-9)));
}

namespace {

void check_truth(const BinaryVector& truth, const SampleSet& sample) {
  for (int j : sample.indices)
    if (j < 0 || j >= truth.size()) throw DimensionError("predictor: sampled index outside truth vector");
}

}  // namespace

PredictionBundle perfect_predictor(const BinaryVector& truth, const SampleSet& sample) {
  check_truth(truth, sample);
  PredictionBundle b{sample, {}, truth};
  for (int j : sample.distinct()) b.bits[j] = truth(j);
  return b;
}

PredictionBundle noisy_predictor(const BinaryVector& truth, const SampleSet& sample, double flip_rate,
                                 std::uint64_t seed) {
  if (!(flip_rate >= 0.0 && flip_rate <= 1.0)) throw std::invalid_argument("noisy_predictor: flip rate outside [0,1]");
  PredictionBundle b = perfect_predictor(truth, sample);
  std::mt19937_64 rng(seed);
  // One uniform per index, so for a fixed seed the flipped set grows with flip_rate.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& [j, bit] : b.bits)
    if (unit(rng) < flip_rate) bit = 1 - bit;
  return b;
}

PredictionBundle live_bundle(const SampleSet& sample, std::map<int, int> bits) {
  PredictionBundle b{sample, std::move(bits), std::nullopt};
  if (!b.covers_sample()) throw std::invalid_argument("live_bundle: bits must cover exactly the distinct sampled indices");
  return b;
}

int prediction_error(const PredictionBundle& bundle) {
  if (!bundle.truth) throw UnavailableError("prediction_error: truth unavailable in live mode");
  int error = 0;
  for (int j : bundle.sample.indices) error += std::abs(bundle.bit(j) - (*bundle.truth)(j));
  return error;
}

}  // namespace laa
