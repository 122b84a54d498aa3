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

#ifndef LAA_PREDICTION_HPP
#define LAA_PREDICTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "laa/common.hpp"

namespace laa {

/// Multiset of variable indices drawn uniformly with replacement.
struct SampleSet {
  std::vector<int> indices;
  std::uint64_t seed = 0;

  int size() const { return static_cast<int>(indices.size()); }
  /// Distinct indices in increasing order.
  std::vector<int> distinct() const;
  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

/// Predicted bits for the distinct sampled indices, plus the true optimum
/// when running in simulation.
struct PredictionBundle {
  SampleSet sample;
  std::map<int, int> bits;
  std::optional<BinaryVector> truth;

  /// Predicted bit of a sampled index; throws std::out_of_range otherwise.
  int bit(int j) const { return bits.at(j); }
  /// True iff bits covers exactly the distinct sampled indices with 0/1 values.
  bool covers_sample() const;
};

SampleSet draw_sample(int n, int size, std::uint64_t seed);

/// Sample that lists every index 0..n-1 exactly once (|S| = n).
SampleSet full_coverage_sample(int n);

/// ceil(C0 ln n / (eps'^3 delta)) with eps' = eps * delta / 16.
long long sample_size_maxcut(double n, double epsilon, double delta, double c0 = 1.0);

/// ceil(C0 c^4 f d^7 ln n / eps^3) for a c-smooth degree-d PIP.
long long sample_size_pip(double n, double epsilon, double c, int d, double f, double c0 = 1.0);

PredictionBundle perfect_predictor(const BinaryVector& truth, const SampleSet& sample);

/// Flips each distinct sampled bit independently with probability flip_rate.
/// Draws are coupled across rates: with the same seed, every bit flipped at
/// rate p is also flipped at any rate above p.
PredictionBundle noisy_predictor(const BinaryVector& truth, const SampleSet& sample, double flip_rate,
                                 std::uint64_t seed);

/// Bundle from externally supplied bits (live mode, no truth).
PredictionBundle live_bundle(const SampleSet& sample, std::map<int, int> bits);

/// sum over the multiset S of |a_hat_j - a_j|. Throws UnavailableError
/// without truth.
int prediction_error(const PredictionBundle& bundle);

}  // namespace laa

#endif  // LAA_PREDICTION_HPP
