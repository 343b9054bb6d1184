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

#include "lpcoh/spectral.hpp"

#include "lpcoh/error.hpp"

namespace lpcoh {

Rational defaultTolerance() { return pow2(-64); }

RatPolynomial charPoly(const RatMatrix& a) {
  if (!a.isSquare()) fail(ErrorCode::NonSquare, "characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix m(n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return RatPolynomial(std::move(c));
}

namespace {

// p(iw) = U(w) + i V(w).
std::pair<RatPolynomial, RatPolynomial> evenOddOnImaginaryAxis(const RatPolynomial& p) {
  const auto& a = p.coefficients();
  std::vector<Rational> u(a.size(), Rational(0));
  std::vector<Rational> v(a.size(), Rational(0));
  for (std::size_t k = 0; k < a.size(); ++k) {
    // i^k = (-1)^(k/2) for even k, i (-1)^((k-1)/2) for odd k.
    const bool flip = (k / 2) % 2 == 1;
    if (k % 2 == 0) {
      u[k] = flip ? Rational(-a[k]) : a[k];
    } else {
      v[k] = flip ? Rational(-a[k]) : a[k];
    }
  }
  return {RatPolynomial(std::move(u)), RatPolynomial(std::move(v))};
}

// gcd(U, V): its real roots w are exactly the imaginary-axis roots iw of p,
// with matching multiplicities.
RatPolynomial imaginaryAxisFactorInOmega(const RatPolynomial& p) {
  const auto [u, v] = evenOddOnImaginaryAxis(p);
  return gcd(u, v);
}

void requireNonzero(const RatPolynomial& p) {
  if (p.isZero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no finite root set");
}

}  // namespace

std::size_t imaginaryAxisRoots(const RatPolynomial& p) {
  requireNonzero(p);
  const RatPolynomial g = imaginaryAxisFactorInOmega(p);
  if (g.degree() < 1) return 0;
  return countRealRootsWithMultiplicity(g);
}

SignTally realPartSigns(const RatPolynomial& p) {
  requireNonzero(p);
  SignTally t;
  RatPolynomial f = p;
  const RatPolynomial g = imaginaryAxisFactorInOmega(p);
  if (g.degree() >= 1) {
    // Common roots w of U and V are the roots s = iw of p with -s also a
    // root. Real w lie on the axis; the rest come in pairs s, -s, one in
    // each open half-plane.
    t.zero = countRealRootsWithMultiplicity(g);
    const auto offAxis = static_cast<std::size_t>(g.degree()) - t.zero;
    if (offAxis % 2 != 0) fail(ErrorCode::Internal, "unpaired roots in the imaginary-axis factor");
    t.positive = t.negative = offAxis / 2;
    // g is even or odd (roots symmetric about 0), so g(-i s) is a real
    // polynomial up to a unit.
    const auto& gc = g.coefficients();
    const std::size_t parity = static_cast<std::size_t>(g.degree()) % 2;
    std::vector<Rational> h(gc.size(), Rational(0));
    for (std::size_t k = 0; k < gc.size(); ++k) {
      if (gc[k] != 0 && k % 2 != parity) fail(ErrorCode::Internal, "imaginary-axis factor has mixed parity");
      h[k] = (k / 2) % 2 == 1 ? Rational(-gc[k]) : gc[k];
    }
    f = exactQuotient(p, RatPolynomial(std::move(h)));
  }
  const int m = f.degree();
  if (m <= 0) return t;
  const auto [u, v] = evenOddOnImaginaryAxis(f);
  // Net argument change of f(iw) over the real line, in units of pi, equals
  // (#left-half-plane roots) - (#right-half-plane roots).
  const int delta = (m % 2 == 0) ? -cauchyIndex(v, u) : cauchyIndex(u, v);
  if ((m + delta) % 2 != 0 || delta > m || delta < -m) {
    fail(ErrorCode::Internal, "inconsistent Cauchy index");
  }
  t.negative += static_cast<std::size_t>((m + delta) / 2);
  t.positive += static_cast<std::size_t>((m - delta) / 2);
  return t;
}

RouthOutcome routhHurwitz(const RatPolynomial& p) {
  requireNonzero(p);
  const int n = p.degree();
  if (n == 0) return RouthOutcome::Stable;
  const auto& a = p.coefficients();
  const std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
  std::vector<Rational> prev(width, Rational(0));
  std::vector<Rational> cur(width, Rational(0));
  for (int k = n, j = 0; k >= 0; k -= 2, ++j) prev[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(k)];
  for (int k = n - 1, j = 0; k >= 0; k -= 2, ++j) cur[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(k)];
  const int refSign = sign(prev[0]);
  bool stable = true;
  for (int row = 1; row <= n; ++row) {
    if (cur[0] == 0) return RouthOutcome::Degenerate;
    if (sign(cur[0]) != refSign) stable = false;
    if (row == n) break;
    std::vector<Rational> next(width, Rational(0));
    for (std::size_t j = 0; j + 1 < width; ++j) {
      next[j] = (cur[0] * prev[j + 1] - prev[0] * cur[j + 1]) / cur[0];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return stable ? RouthOutcome::Stable : RouthOutcome::Unstable;
}

bool allRootsPositiveRealPart(const RatPolynomial& p) {
  requireNonzero(p);
  switch (routhHurwitz(p.reflected())) {
    case RouthOutcome::Stable: return true;
    case RouthOutcome::Unstable: return false;
    case RouthOutcome::Degenerate: break;
  }
  return realPartSigns(p).positive == static_cast<std::size_t>(p.degree());
}

namespace {

// True iff c is the smallest real part of the roots of p.
bool isMinimumRealPart(const RatPolynomial& p, const Rational& c) {
  const SignTally t = realPartSigns(p.shifted(c));
  return t.zero > 0 && t.negative == 0;
}

}  // namespace

RealPartReport realPartReport(const RatPolynomial& p, const Rational& tol) {
  requireNonzero(p);
  if (tol <= 0) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  RealPartReport r;
  const SignTally t = realPartSigns(p);
  r.countPositive = t.positive;
  r.countZero = t.zero;
  r.countNegative = t.negative;
  const int n = p.degree();
  if (n < 1) {
    r.sumRealParts = 0;
    return r;
  }
  r.sumRealParts = -p.coeff(static_cast<std::size_t>(n - 1)) / p.leading();
  if (t.positive != static_cast<std::size_t>(n)) return r;

  const Rational mean = r.sumRealParts / n;
  for (const auto& root : rationalRoots(p)) {
    if (root > 0) {
      if (isMinimumRealPart(p, root)) r.minPositiveRealPart = RationalInterval{root, root};
      break;
    }
  }
  if (!r.minPositiveRealPart && isMinimumRealPart(p, mean)) {
    r.minPositiveRealPart = RationalInterval{mean, mean};
  }
  if (r.minPositiveRealPart) return r;

  // Invariant: min real part in (lo, hi]. Continue past the width target
  // until lo > 0 so the certified lower end is strictly positive.
  Rational lo = 0;
  Rational hi = mean;
  while (hi - lo > tol || lo == 0) {
    const Rational mid = (lo + hi) / 2;
    const SignTally s = realPartSigns(p.shifted(mid));
    if (s.zero > 0 && s.negative == 0) {
      r.minPositiveRealPart = RationalInterval{mid, mid};
      return r;
    }
    if (s.positive == static_cast<std::size_t>(n)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const Rational candidate = simplestBetween(lo, hi);
  if (isMinimumRealPart(p, candidate)) {
    r.minPositiveRealPart = RationalInterval{candidate, candidate};
  } else {
    r.minPositiveRealPart = RationalInterval{lo, hi};
  }
  return r;
}

}  // namespace lpcoh
