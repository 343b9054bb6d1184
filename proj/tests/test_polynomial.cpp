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

#include <random>

#include "oracles.hpp"

using namespace lpcoh;

TEST(Polynomial, ArithmeticAndEvaluation) {
  const RatPolynomial p{Rational(-1), Rational(0), Rational(1)};  // t^2 - 1
  const RatPolynomial q = RatPolynomial::linear(1) * RatPolynomial::linear(-1);
  EXPECT_EQ(p, q);
  EXPECT_EQ(p(Rational(3)), Rational(8));
  EXPECT_EQ(p.derivative(), (RatPolynomial{Rational(0), Rational(2)}));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(p.toString(), "t^2 - 1");
}

TEST(Polynomial, TaylorShiftAndReflection) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> c;
    for (int k = 0; k < 6; ++k) c.push_back(oracle::randomRational(rng, 9, 5));
    const RatPolynomial p(c);
    const Rational s = oracle::randomRational(rng, 4, 3);
    const Rational x = oracle::randomRational(rng, 4, 3);
    EXPECT_EQ(p.shifted(s)(x), p(x + s));
    EXPECT_EQ(p.reflected()(x), p(-x));
  }
}

TEST(Polynomial, DivisionAndGcd) {
  const RatPolynomial a = oracle::fromRoots({{1, 0}, {2, 0}, {Rational(1, 2), 3}});
  const RatPolynomial b = oracle::fromRoots({{2, 0}, {Rational(1, 2), 3}, {-5, 0}});
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(gcd(a, b), oracle::fromRoots({{2, 0}, {Rational(1, 2), 3}}));
  EXPECT_LPCOH_ERROR(divmod(a, RatPolynomial()), ErrorCode::ZeroPolynomial);
  EXPECT_LPCOH_ERROR(exactQuotient(a, RatPolynomial::linear(7)), ErrorCode::Internal);
}

TEST(Polynomial, SquarefreeDecomposition) {
  const RatPolynomial p =
      oracle::fromRoots({{1, 0}, {1, 0}, {1, 0}, {2, 0}, {Rational(1, 3), 1}, {Rational(1, 3), 1}});
  const auto parts = squarefreeDecomposition(p);
  RatPolynomial product = RatPolynomial::constant(1);
  for (const auto& [f, m] : parts) {
    for (std::size_t i = 0; i < m; ++i) product = product * f;
    EXPECT_EQ(gcd(f, f.derivative()).degree(), 0);
  }
  EXPECT_EQ(product, p.monic());
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0].second, 1U);
  EXPECT_EQ(parts[2].second, 3U);
}

TEST(Polynomial, SturmCountsAgainstConstruction) {
  const RatPolynomial p = oracle::fromRoots({{-3, 0}, {Rational(1, 7), 0}, {Rational(1, 7), 0}, {0, 2}, {5, 0}});
  EXPECT_EQ(countDistinctRealRoots(p), 3U);
  EXPECT_EQ(countRealRootsWithMultiplicity(p), 4U);
  EXPECT_EQ(countDistinctRealRootsIn(p, Rational(-3), Rational(5)), 2U);  // (a, b]
  EXPECT_EQ(countDistinctRealRootsIn(p, Rational(-4), Rational(0)), 1U);
}

TEST(Polynomial, CauchyIndexOfSimpleFractions) {
  // 1/t jumps from -inf to +inf at 0: index +1.
  EXPECT_EQ(cauchyIndex(RatPolynomial::constant(1), RatPolynomial{Rational(0), Rational(1)}), 1);
  EXPECT_EQ(cauchyIndex(RatPolynomial::constant(-1), RatPolynomial{Rational(0), Rational(1)}), -1);
  // 1/t^2 does not change sign.
  EXPECT_EQ(cauchyIndex(RatPolynomial::constant(1), RatPolynomial::monomial(2)), 0);
}

TEST(Polynomial, RationalRoots) {
  const RatPolynomial p = oracle::fromRoots({{Rational(-2, 3), 0}, {Rational(5, 4), 0}, {1, 1}});
  EXPECT_EQ(rationalRoots(p), (std::vector<Rational>{Rational(-2, 3), Rational(5, 4)}));
  EXPECT_TRUE(rationalRoots(RatPolynomial{Rational(-2), Rational(0), Rational(1)}).empty());
}
