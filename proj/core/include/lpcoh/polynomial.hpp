// Copyright 2026 The lpcoh Authors
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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lpcoh/rational.hpp"

namespace lpcoh {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zero coefficients are trimmed, so the leading coefficient is
/// nonzero unless the polynomial is zero (no coefficients, degree -1).
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> ascending);
  RatPolynomial(std::initializer_list<Rational> ascending);

  static RatPolynomial constant(const Rational& c);
  /// x - root
  static RatPolynomial linear(const Rational& root);
  static RatPolynomial monomial(std::size_t degree, const Rational& coef = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  double evalDouble(double x) const;

  RatPolynomial derivative() const;
  RatPolynomial monic() const;
  /// p(x + c)
  RatPolynomial shifted(const Rational& c) const;
  /// p(-x)
  RatPolynomial reflected() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const Rational& s, const RatPolynomial& a);
  friend RatPolynomial operator-(const RatPolynomial& a);
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string toString(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws ZeroPolynomial for a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                               const RatPolynomial& b);
/// Exact quotient; throws Internal if b does not divide a.
RatPolynomial exactQuotient(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);

/// Yun's square-free factorization: pairs (factor, multiplicity) with monic,
/// square-free, pairwise coprime factors of positive degree.
std::vector<std::pair<RatPolynomial, std::size_t>> squarefreeDecomposition(
    const RatPolynomial& p);

/// Number of distinct real roots (Sturm).
std::size_t countDistinctRealRoots(const RatPolynomial& p);
/// Number of real roots counted with multiplicity.
std::size_t countRealRootsWithMultiplicity(const RatPolynomial& p);
/// Number of distinct real roots in the half-open interval (a, b].
std::size_t countDistinctRealRootsIn(const RatPolynomial& p, const Rational& a,
                                     const Rational& b);

/// Cauchy index of num/den over the whole real line.
int cauchyIndex(const RatPolynomial& num, const RatPolynomial& den);

/// Distinct rational roots in increasing order. Candidate enumeration uses
/// the rational root theorem and is skipped (empty result) when the integer
/// leading or constant coefficient exceeds 10^12 in magnitude.
std::vector<Rational> rationalRoots(const RatPolynomial& p);

}  // namespace lpcoh
