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

#ifndef LAA_POLYNOMIAL_HPP
#define LAA_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "laa/common.hpp"

namespace laa {

/// Strictly increasing variable indices of a monomial.
using Monomial = std::vector<int>;

/// Multilinear polynomial over binary variables x_0..x_{n-1}:
///   p(x) = t + sum_m c_m * prod_{i in m} x_i.
/// Keys are strictly increasing, non-empty index tuples; exact-zero
/// coefficients are not stored. Immutable once built (see PolynomialBuilder).
class SmoothPolynomial {
 public:
  using Terms = std::map<Monomial, double>;

  explicit SmoothPolynomial(int n = 0, double constant = 0.0) : n_(n), constant_(constant) {}

  int n() const { return n_; }
  double constant() const { return constant_; }
  const Terms& monomials() const { return terms_; }
  /// Largest monomial size, 0 for a constant.
  int degree() const { return degree_; }
  bool is_zero() const { return constant_ == 0.0 && terms_.empty(); }

  /// Coefficient of a (normalized) monomial, 0 if absent.
  double coefficient(const Monomial& m) const;

  /// Range bounds over [0,1]^n: t + sum of negative / positive coefficients.
  double lower_bound() const;
  double upper_bound() const;

  /// Coefficients of the degree-1 part as a dense vector.
  Eigen::VectorXd linear_part() const;

  friend bool operator==(const SmoothPolynomial&, const SmoothPolynomial&) = default;

 private:
  friend class PolynomialBuilder;
  int n_;
  double constant_;
  Terms terms_;
  int degree_ = 0;
};

/// Accumulates terms, normalizing repeated indices by x_i^2 = x_i.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(int n) : n_(n) {}

  PolynomialBuilder& add_constant(double c);
  /// Adds coeff * prod_{i in vars} x_i; vars may be unsorted or repeat.
  PolynomialBuilder& add_term(std::vector<int> vars, double coeff);
  /// Adds coeff * prod_k (x_k if positive else 1 - x_k), expanded. Factors
  /// on the same variable multiply as booleans.
  PolynomialBuilder& add_product(std::span<const std::pair<int, bool>> factors, double coeff);
  PolynomialBuilder& add(const SmoothPolynomial& p, double scale = 1.0);

  SmoothPolynomial build() const;

 private:
  int n_;
  double constant_ = 0.0;
  std::map<Monomial, double> terms_;
};

/// Evaluates the multilinear extension at x (binary or fractional).
template <typename Derived>
double evaluate_exact(const SmoothPolynomial& p, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != p.n()) throw DimensionError("evaluate_exact: vector length does not match n");
  double sum = p.constant();
  for (const auto& [vars, coeff] : p.monomials()) {
    double term = coeff;
    for (int v : vars) {
      term *= static_cast<double>(x(v));
      if (term == 0.0) break;
    }
    sum += term;
  }
  return sum;
}

/// p = t + sum_i x_i p_i with p_i depending only on variables > i.
struct Decomposition {
  double t = 0.0;
  std::vector<SmoothPolynomial> parts;
};

/// Assigns monomial {i1 < ... < ij} to p_{i1} as {i2, ..., ij}. A constant
/// polynomial yields t and n zero parts.
Decomposition decompose(const SmoothPolynomial& p);

/// Inverse of decompose.
SmoothPolynomial reassemble(const Decomposition& dec, int n);

/// Sub-polynomial p_{prefix}: the coefficient of x_{prefix} in the repeated
/// decomposition of p (prefix strictly increasing). Empty prefix returns p.
SmoothPolynomial sub_polynomial(const SmoothPolynomial& p, const Monomial& prefix);

struct SmoothnessCertificate {
  double c = 0.0;
  double bound = 0.0;  // 2 c e n^d
};

/// Smallest c with |c_m| <= c n^{d-|m|} for every monomial (the constant
/// counts as |m| = 0). A degree-0 polynomial gets c = 0. `degree` overrides
/// the nominal degree d when positive.
SmoothnessCertificate smoothness(const SmoothPolynomial& p, int degree = 0);

/// Random polynomial with `terms` monomials of size 1..d (at least one of
/// size d unless terms cancel), integer coefficients in [-3, 3] and constant in
/// [-3, 3].
SmoothPolynomial random_polynomial(int n, int d, int terms, std::uint64_t seed);

}  // namespace laa

#endif  // LAA_POLYNOMIAL_HPP
