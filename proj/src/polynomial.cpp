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

#include "laa/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace laa {

double SmoothPolynomial::coefficient(const Monomial& m) const {
  if (m.empty()) return constant_;
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

double SmoothPolynomial::lower_bound() const {
  double sum = constant_;
  for (const auto& [m, c] : terms_) sum += std::min(c, 0.0);
  return sum;
}

double SmoothPolynomial::upper_bound() const {
  double sum = constant_;
  for (const auto& [m, c] : terms_) sum += std::max(c, 0.0);
  return sum;
}

Eigen::VectorXd SmoothPolynomial::linear_part() const {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(n_);
  for (const auto& [m, c] : terms_)
    if (m.size() == 1) a(m[0]) = c;
  return a;
}

PolynomialBuilder& PolynomialBuilder::add_constant(double c) {
  constant_ += c;
  return *this;
}

PolynomialBuilder& PolynomialBuilder::add_term(std::vector<int> vars, double coeff) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (int v : vars)
    if (v < 0 || v >= n_) throw std::invalid_argument("polynomial: variable index out of range");
  if (vars.empty())
    constant_ += coeff;
  else
    terms_[std::move(vars)] += coeff;
  return *this;
}

PolynomialBuilder& PolynomialBuilder::add_product(std::span<const std::pair<int, bool>> factors, double coeff) {
  std::map<Monomial, double> expansion{{Monomial{}, coeff}};
  for (const auto& [var, positive] : factors) {
    std::map<Monomial, double> next;
    for (const auto& [m, c] : expansion) {
      Monomial with = m;
      if (!std::binary_search(with.begin(), with.end(), var)) with.insert(std::upper_bound(with.begin(), with.end(), var), var);
      if (positive) {
        next[with] += c;
      } else {
        next[m] += c;
        next[with] -= c;
      }
    }
    expansion = std::move(next);
  }
  for (auto& [m, c] : expansion) add_term(m, c);
  return *this;
}

PolynomialBuilder& PolynomialBuilder::add(const SmoothPolynomial& p, double scale) {
  constant_ += scale * p.constant();
  for (const auto& [m, c] : p.monomials()) add_term(m, scale * c);
  return *this;
}

SmoothPolynomial PolynomialBuilder::build() const {
  SmoothPolynomial p(n_, constant_);
  for (const auto& [m, c] : terms_) {
    if (c == 0.0) continue;
    p.terms_.emplace(m, c);
    p.degree_ = std::max(p.degree_, static_cast<int>(m.size()));
  }
  return p;
}

Decomposition decompose(const SmoothPolynomial& p) {
  const int n = p.n();
  std::vector<PolynomialBuilder> builders(n, PolynomialBuilder(n));
  for (const auto& [m, c] : p.monomials()) builders[m.front()].add_term(Monomial(m.begin() + 1, m.end()), c);
  Decomposition dec{p.constant(), {}};
  dec.parts.reserve(n);
  for (const auto& b : builders) dec.parts.push_back(b.build());
  return dec;
}

SmoothPolynomial reassemble(const Decomposition& dec, int n) {
  PolynomialBuilder b(n);
  b.add_constant(dec.t);
  for (int i = 0; i < static_cast<int>(dec.parts.size()); ++i) {
    const auto& part = dec.parts[i];
    if (part.constant() != 0.0) b.add_term({i}, part.constant());
    for (const auto& [m, c] : part.monomials()) {
      Monomial full = m;
      full.push_back(i);
      b.add_term(std::move(full), c);
    }
  }
  return b.build();
}

SmoothPolynomial sub_polynomial(const SmoothPolynomial& p, const Monomial& prefix) {
  if (prefix.empty()) return p;
  PolynomialBuilder b(p.n());
  const auto& terms = p.monomials();
  for (auto it = terms.lower_bound(prefix); it != terms.end(); ++it) {
    const Monomial& m = it->first;
    if (m.size() < prefix.size() || !std::equal(prefix.begin(), prefix.end(), m.begin())) break;
    b.add_term(Monomial(m.begin() + static_cast<long>(prefix.size()), m.end()), it->second);
  }
  return b.build();
}

SmoothnessCertificate smoothness(const SmoothPolynomial& p, int degree) {
  const int d = degree > 0 ? degree : p.degree();
  if (d == 0) return {};
  const double n = std::max(p.n(), 1);
  double c = std::abs(p.constant()) / std::pow(n, d);
  for (const auto& [m, coeff] : p.monomials())
    c = std::max(c, std::abs(coeff) / std::pow(n, d - static_cast<int>(m.size())));
  return {c, 2.0 * c * std::numbers::e * std::pow(n, d)};
}

SmoothPolynomial random_polynomial(int n, int d, int terms, std::uint64_t seed) {
  if (n < 0 || d < 0 || d > n) throw std::invalid_argument("random_polynomial: need 0 <= d <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> size(1, std::max(d, 1));
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  PolynomialBuilder b(n);
  b.add_constant(coeff(rng));
  for (int t = 0; t < terms && d >= 1; ++t) {
    const int k = t == 0 ? d : size(rng);
    std::shuffle(vars.begin(), vars.end(), rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    b.add_term(std::vector<int>(vars.begin(), vars.begin() + k), c);
  }
  return b.build();
}

}  // namespace laa
