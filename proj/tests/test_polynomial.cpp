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
#include <random>

#include "laa/polynomial.hpp"
#include "laa/reductions.hpp"
#include "laa/rounding.hpp"
#include "test_support.hpp"

namespace laa {
namespace {

SmoothPolynomial xy() { return PolynomialBuilder(2).add_term({0, 1}, 1.0).build(); }

TEST(Polynomial, EvaluatesMonomials) {
  EXPECT_DOUBLE_EQ(evaluate_exact(xy(), Eigen::Vector2i(1, 1)), 1.0);
  EXPECT_DOUBLE_EQ(evaluate_exact(xy(), Eigen::Vector2d(0.5, 0.5)), 0.25);
  EXPECT_THROW(evaluate_exact(xy(), Eigen::Vector3d(1, 1, 1)), DimensionError);
}

TEST(Polynomial, MaxCutTriangle) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_DOUBLE_EQ(evaluate_exact(maxcut_polynomial(k3), Eigen::Vector3i(1, 0, 0)), 2.0);
}

TEST(Polynomial, BuilderNormalizesRepeatsAndZeros) {
  PolynomialBuilder b(3);
  b.add_term({2, 0, 2}, 2.0).add_term({0, 2}, 1.0).add_term({1}, 1.0).add_term({1}, -1.0);
  const SmoothPolynomial p = b.build();
  EXPECT_EQ(p.monomials().size(), 1u);
  EXPECT_DOUBLE_EQ(p.coefficient({0, 2}), 3.0);
  EXPECT_EQ(p.degree(), 2);
}

TEST(Polynomial, ProductExpansion) {
  // (1 - x0) x1 = x1 - x0 x1
  const std::pair<int, bool> f[] = {{0, false}, {1, true}};
  const SmoothPolynomial p = PolynomialBuilder(2).add_product(f, 1.0).build();
  EXPECT_DOUBLE_EQ(p.coefficient({1}), 1.0);
  EXPECT_DOUBLE_EQ(p.coefficient({0, 1}), -1.0);
  // x0 (1 - x0) = 0 on binary points.
  const std::pair<int, bool> g[] = {{0, true}, {0, false}};
  EXPECT_TRUE(PolynomialBuilder(1).add_product(g, 1.0).build().is_zero());
}

TEST(Polynomial, RangeBounds) {
  const SmoothPolynomial p = PolynomialBuilder(3).add_constant(1).add_term({0}, 2).add_term({1, 2}, -3).build();
  EXPECT_DOUBLE_EQ(p.lower_bound(), -2.0);
  EXPECT_DOUBLE_EQ(p.upper_bound(), 3.0);
}

TEST(Decompose, AssignsByFirstIndex) {
  const SmoothPolynomial p = PolynomialBuilder(3).add_term({0, 2}, 3).add_term({1}, 1).build();
  const Decomposition dec = decompose(p);
  EXPECT_DOUBLE_EQ(dec.t, 0.0);
  ASSERT_EQ(dec.parts.size(), 3u);
  EXPECT_EQ(dec.parts[0], PolynomialBuilder(3).add_term({2}, 3).build());
  EXPECT_EQ(dec.parts[1], PolynomialBuilder(3).add_constant(1).build());
  EXPECT_TRUE(dec.parts[2].is_zero());
}

TEST(Decompose, ConstantHasZeroParts) {
  const Decomposition dec = decompose(SmoothPolynomial(4, 5.0));
  EXPECT_DOUBLE_EQ(dec.t, 5.0);
  for (const auto& part : dec.parts) EXPECT_TRUE(part.is_zero());
}

TEST(Decompose, ReassemblyIdentityExhaustive) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SmoothPolynomial p = random_polynomial(6, 3, 12, seed);
    const Decomposition dec = decompose(p);
    EXPECT_EQ(reassemble(dec, 6), p);
    for (int i = 0; i < 6; ++i)
      for (const auto& [vars, c] : dec.parts[i].monomials()) EXPECT_GT(vars.front(), i);
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      const BinaryVector x = testing::bits(mask, 6);
      double sum = dec.t;
      for (int i = 0; i < 6; ++i) sum += x(i) * testing::naive_value(dec.parts[i], x);
      EXPECT_DOUBLE_EQ(sum, testing::naive_value(p, x));
    }
  }
}

TEST(Decompose, SubPolynomialFollowsPrefixes) {
  const SmoothPolynomial p = random_polynomial(6, 3, 15, 3);
  for (int i = 0; i < 6; ++i) {
    const Decomposition di = decompose(p);
    EXPECT_EQ(sub_polynomial(p, {i}), di.parts[i]);
    const Decomposition dij = decompose(di.parts[i]);
    for (int j = i + 1; j < 6; ++j) EXPECT_EQ(sub_polynomial(p, {i, j}), dij.parts[j]);
  }
  EXPECT_EQ(sub_polynomial(p, {}), p);
}

TEST(Smoothness, Examples) {
  EXPECT_DOUBLE_EQ(smoothness(PolynomialBuilder(3).add_term({0}, 7).build()).c, 7.0);
  EXPECT_DOUBLE_EQ(smoothness(SmoothPolynomial(5)).c, 0.0);
  EXPECT_DOUBLE_EQ(smoothness(SmoothPolynomial(5, 3.0)).c, 0.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_dense_graph(12, 0.2 + 0.04 * seed, seed);
    EXPECT_LE(smoothness(maxcut_polynomial(g)).c, 2.0);
  }
  const Graph k5 = generate_dense_graph(5, 1.0, 0);
  const SmoothnessCertificate cert = smoothness(maxcut_polynomial(k5));
  EXPECT_DOUBLE_EQ(cert.c, 2.0);
  EXPECT_DOUBLE_EQ(cert.bound, 2.0 * cert.c * std::numbers::e * 25.0);
}

TEST(Smoothness, BoundsEveryBinaryValue) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const SmoothPolynomial p = random_polynomial(n, 1 + static_cast<int>(seed % 3), 10, seed);
    const SmoothnessCertificate cert = smoothness(p);
    for (std::uint64_t mask = 0; mask < (1u << n); ++mask)
      EXPECT_LE(std::abs(testing::naive_value(p, testing::bits(mask, n))), cert.bound + 1e-9);
  }
}

TEST(Polynomial, MultilinearExtensionIsRoundingMean) {
  const SmoothPolynomial p = random_polynomial(8, 3, 12, 11);
  Eigen::VectorXd y(8);
  y << 0.1, 0.9, 0.5, 0.3, 0.7, 0.2, 0.6, 0.4;
  const int trials = 4000;
  double sum = 0.0, sq = 0.0;
  for (int t = 0; t < trials; ++t) {
    const double v = evaluate_exact(p, round_once(y, 1000 + t));
    sum += v;
    sq += v * v;
  }
  const double mean = sum / trials;
  const double sd = std::sqrt(std::max(0.0, sq / trials - mean * mean));
  EXPECT_NEAR(mean, evaluate_exact(p, y), 3.0 * sd / std::sqrt(trials) + 1e-12);
}

}  // namespace
}  // namespace laa
