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

TEST(CharPoly, MatchesCofactorExpansion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = oracle::randomRational(rng, 5, 3);
    }
    EXPECT_EQ(charPoly(a), oracle::cofactorCharPoly(a));
  }
  EXPECT_LPCOH_ERROR(charPoly(RatMatrix(2, 3)), ErrorCode::NonSquare);
}

TEST(CharPoly, AdjointOfCh2OnKernel) {
  // Weights 1, 1, 2 on the Heisenberg nilradical.
  const RatMatrix ad{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  EXPECT_EQ(charPoly(ad), oracle::fromRoots({{1, 0}, {1, 0}, {2, 0}}));
}

TEST(Spectral, ImaginaryAxisRoots) {
  EXPECT_EQ(imaginaryAxisRoots(oracle::fromRoots({{0, 1}, {0, 1}, {1, 0}})), 4U);
  EXPECT_EQ(imaginaryAxisRoots(oracle::fromRoots({{0, 0}, {0, 0}, {0, 2}, {-1, 3}})), 4U);
  EXPECT_EQ(imaginaryAxisRoots(oracle::fromRoots({{1, 1}, {-2, 0}})), 0U);
  EXPECT_LPCOH_ERROR(imaginaryAxisRoots(RatPolynomial()), ErrorCode::ZeroPolynomial);
}

TEST(Spectral, SignTallyAgreesWithCompanionRoots) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<int> deg(1, 7);
    std::vector<Rational> c;
    const int n = deg(rng);
    for (int k = 0; k < n; ++k) c.push_back(oracle::randomRational(rng, 9, 4));
    c.push_back(Rational(1 + trial % 3));
    const RatPolynomial p(c);
    const SignTally t = realPartSigns(p);
    if (t.zero > 0) continue;  // numeric oracle cannot certify zero real parts
    std::size_t pos = 0, neg = 0;
    bool close = false;
    for (const auto& z : oracle::companionRoots(p)) {
      if (std::abs(z.real()) < 1e-7) close = true;
      (z.real() > 0 ? pos : neg) += 1;
    }
    if (close) continue;
    EXPECT_EQ(t.positive, pos) << p.toString();
    EXPECT_EQ(t.negative, neg) << p.toString();
  }
}

TEST(Spectral, RouthHurwitzAgreesWithTallyWhenDecisive) {
  std::mt19937_64 rng(29);
  int decisive = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<oracle::RootSpec> roots;
    int deg = 0;
    std::uniform_int_distribution<int> kind(0, 2);
    while (deg < 1 + trial % 6) {
      if (kind(rng) == 0 && deg + 2 <= 6) {
        roots.push_back({oracle::randomRational(rng, 4, 3), Rational(1 + trial % 4)});
        deg += 2;
      } else {
        roots.push_back({oracle::randomRational(rng, 4, 3), 0});
        deg += 1;
      }
    }
    const RatPolynomial p = oracle::fromRoots(roots);
    const RouthOutcome r = routhHurwitz(p);
    const SignTally t = realPartSigns(p);
    if (r == RouthOutcome::Degenerate) continue;
    ++decisive;
    EXPECT_EQ(r == RouthOutcome::Stable, t.negative == static_cast<std::size_t>(p.degree()));
    EXPECT_EQ(allRootsPositiveRealPart(p), t.positive == static_cast<std::size_t>(p.degree()));
  }
  EXPECT_GT(decisive, 100);
}

TEST(Spectral, DegenerateRouthFallsBack) {
  // t^4 + 1 has a zero in the first Routh column and roots off both half-planes.
  const RatPolynomial p{Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};
  EXPECT_EQ(routhHurwitz(p), RouthOutcome::Degenerate);
  EXPECT_FALSE(allRootsPositiveRealPart(p));
  EXPECT_EQ(realPartSigns(p), (SignTally{2, 0, 2}));
}

TEST(Spectral, RealPartReportDetectsRationalMinimum) {
  const RatPolynomial p = oracle::fromRoots({{Rational(3, 2), 0}, {Rational(3, 2), 5}, {4, 0}});
  const RealPartReport r = realPartReport(p);
  ASSERT_TRUE(r.minPositiveRealPart);
  EXPECT_TRUE(r.minPositiveRealPart->isPoint());
  EXPECT_EQ(r.minPositiveRealPart->lo, Rational(3, 2));
  EXPECT_EQ(r.sumRealParts, Rational(17, 2));
}

TEST(Spectral, RealPartReportBracketsIrrationalMinimum) {
  // Roots 2 +- sqrt 3: minimum 2 - sqrt 3 ~ 0.2679.
  const RatPolynomial p{Rational(1), Rational(-4), Rational(1)};
  const Rational tol = pow2(-40);
  const RealPartReport r = realPartReport(p, tol);
  ASSERT_TRUE(r.minPositiveRealPart);
  const auto& iv = *r.minPositiveRealPart;
  EXPECT_LE(iv.width(), tol);
  EXPECT_GT(iv.lo, 0);
  const double truth = 2.0 - std::sqrt(3.0);
  EXPECT_LT(iv.lo.get_d(), truth + 1e-12);
  EXPECT_GT(iv.hi.get_d(), truth - 1e-12);
}

TEST(Spectral, RealPartReportWithoutMinimumWhenNotAllPositive) {
  const RealPartReport r = realPartReport(oracle::fromRoots({{1, 0}, {-1, 0}, {0, 1}}));
  EXPECT_EQ(r.countPositive, 1U);
  EXPECT_EQ(r.countNegative, 1U);
  EXPECT_EQ(r.countZero, 2U);
  EXPECT_FALSE(r.minPositiveRealPart);
  EXPECT_LPCOH_ERROR(realPartReport(RatPolynomial::linear(1), Rational(0)), ErrorCode::InvalidArgument);
}
