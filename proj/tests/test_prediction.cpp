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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "laa/prediction.hpp"
#include "test_support.hpp"

namespace laa {
namespace {

TEST(Sample, SingleIndexUniverse) {
  EXPECT_EQ(draw_sample(1, 5, 3).indices, (std::vector<int>{0, 0, 0, 0, 0}));
}

TEST(Sample, Deterministic) {
  EXPECT_EQ(draw_sample(10, 100, 42), draw_sample(10, 100, 42));
  EXPECT_NE(draw_sample(10, 100, 42).indices, draw_sample(10, 100, 43).indices);
}

TEST(Sample, FrequenciesConcentrate) {
  const SampleSet s = draw_sample(10, 10000, 9);
  std::vector<int> freq(10, 0);
  for (int j : s.indices) ++freq[j];
  const double sigma = std::sqrt(10000 * 0.1 * 0.9);
  for (int f : freq) EXPECT_LE(std::abs(f - 1000), 3.0 * sigma);
}

TEST(Sample, FullCoverageAndDistinct) {
  const SampleSet s = full_coverage_sample(5);
  EXPECT_EQ(s.indices, (std::vector<int>{0, 1, 2, 3, 4}));
  SampleSet m;
  m.indices = {3, 1, 3, 0};
  EXPECT_EQ(m.distinct(), (std::vector<int>{0, 1, 3}));
}

TEST(SampleSize, MaxCutFormula) {
  // eps = 16 gives eps' = 1 at delta = 1; ln e = 1.
  EXPECT_EQ(sample_size_maxcut(std::numbers::e, 16.0, 1.0), 1);
  const long long a = sample_size_maxcut(100, 0.2, 0.5);
  const long long b = sample_size_maxcut(100, 0.4, 0.5);
  EXPECT_GT(a, b);
  EXPECT_NEAR(static_cast<double>(b) / a, 1.0 / 8.0, 1e-3);
  const long long doubled = sample_size_maxcut(100, 0.2, 0.5, 2.0);
  EXPECT_GE(doubled, 2 * a - 1);
  EXPECT_LE(doubled, 2 * a);
}

TEST(SampleSize, PipFormula) {
  const double expected = std::ceil(16.0 * 3.0 * 128.0 * std::log(20.0) / 0.125);
  EXPECT_EQ(sample_size_pip(20, 0.5, 2.0, 2, 3.0, 1.0), static_cast<long long>(expected));
}

TEST(Predictor, PerfectHasZeroError) {
  const BinaryVector a = testing::bits(0b1011001, 7);
  const SampleSet s = draw_sample(7, 30, 1);
  const PredictionBundle b = perfect_predictor(a, s);
  EXPECT_TRUE(b.covers_sample());
  EXPECT_EQ(prediction_error(b), 0);
  for (int j : s.distinct()) EXPECT_EQ(b.bit(j), a(j));
  const PredictionBundle ones = perfect_predictor(BinaryVector::Ones(7), s);
  for (const auto& [j, bit] : ones.bits) EXPECT_EQ(bit, 1);
}

TEST(Predictor, NoisyExtremes) {
  const BinaryVector a = testing::bits(0b0110101, 7);
  const SampleSet s = full_coverage_sample(7);
  const PredictionBundle zero = noisy_predictor(a, s, 0.0, 5);
  EXPECT_EQ(zero.bits, perfect_predictor(a, s).bits);
  const PredictionBundle all = noisy_predictor(a, s, 1.0, 5);
  for (int j = 0; j < 7; ++j) EXPECT_EQ(all.bit(j), 1 - a(j));
  EXPECT_EQ(prediction_error(all), 7);
  EXPECT_EQ(noisy_predictor(a, s, 0.3, 5).bits, noisy_predictor(a, s, 0.3, 5).bits);
}

TEST(Predictor, HalfRateFlipCount) {
  const int n = 1000;
  const BinaryVector a = BinaryVector::Zero(n);
  const PredictionBundle b = noisy_predictor(a, full_coverage_sample(n), 0.5, 11);
  int flipped = 0;
  for (const auto& [j, bit] : b.bits) flipped += bit;
  EXPECT_LE(std::abs(flipped - 500), 3.0 * std::sqrt(250.0));
}

TEST(Predictor, FlipsAreNestedAcrossRates) {
  const int n = 200;
  BinaryVector a(n);
  for (int i = 0; i < n; ++i) a(i) = i % 3 == 0;
  const SampleSet s = draw_sample(n, 150, 2);
  int previous = 0;
  PredictionBundle low = noisy_predictor(a, s, 0.0, 8);
  for (double p : {0.1, 0.2, 0.3, 0.4, 0.5, 1.0}) {
    const PredictionBundle high = noisy_predictor(a, s, p, 8);
    for (const auto& [j, bit] : low.bits)
      if (bit != a(j)) EXPECT_NE(high.bit(j), a(j));
    const int err = prediction_error(high);
    EXPECT_GE(err, previous);
    previous = err;
    low = high;
  }
}

TEST(Predictor, ErrorCountsMultiplicity) {
  const BinaryVector a = testing::bits(0b101000, 6);
  SampleSet s;
  s.indices = {3, 3, 5};
  PredictionBundle b = live_bundle(s, {{3, 1 - a(3)}, {5, a(5)}});
  EXPECT_THROW(prediction_error(b), UnavailableError);
  b.truth = a;
  EXPECT_EQ(prediction_error(b), 2);
}

TEST(Predictor, ErrorNeverExceedsSampleSize) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BinaryVector a = testing::bits(seed * 2654435761ULL, 12);
    const SampleSet s = draw_sample(12, 40, seed);
    EXPECT_LE(prediction_error(noisy_predictor(a, s, 0.01 * seed, seed)), s.size());
  }
}

TEST(Predictor, CoverageCheckRejectsStrayBits) {
  SampleSet s;
  s.indices = {0, 2};
  EXPECT_TRUE(live_bundle(s, {{0, 1}, {2, 0}}).covers_sample());
  PredictionBundle b;
  b.sample = s;
  b.bits = {{0, 1}, {1, 0}, {2, 0}};
  EXPECT_FALSE(b.covers_sample());
  b.bits = {{0, 1}, {2, 2}};
  EXPECT_FALSE(b.covers_sample());
}

}  // namespace
}  // namespace laa
