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
#include <optional>

#include "lpcoh/polynomial.hpp"
#include "lpcoh/rat_matrix.hpp"
#include "lpcoh/rational.hpp"

namespace lpcoh {

/// Closed interval with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool isPoint() const { return lo == hi; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool containsInterval(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const RationalInterval& o) const { return !(hi < o.lo || o.hi < lo); }
  Rational width() const { return hi - lo; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Default certified width for real-part intervals: 2^-64.
Rational defaultTolerance();

/// det(tI - M), monic of degree dim(M) (Faddeev-LeVerrier over Q).
RatPolynomial charPoly(const RatMatrix& m);

/// Roots on the imaginary axis, with multiplicity. Uses p(iw) = U(w) + i V(w)
/// with U(w) = E(-w^2), V(w) = w O(-w^2); the common real roots of U and V
/// are the roots of gcd(U, V), counted with multiplicity by Sturm sequences.
std::size_t imaginaryAxisRoots(const RatPolynomial& p);

/// Exact number of roots with positive, zero and negative real part.
struct SignTally {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  friend bool operator==(const SignTally&, const SignTally&) = default;
};

/// Removes the imaginary-axis factor, then counts half-plane roots through the
/// Cauchy index of the even/odd parts along the imaginary axis.
SignTally realPartSigns(const RatPolynomial& p);

enum class RouthOutcome { Stable, Unstable, Degenerate };

/// Routh array test for "every root has negative real part". A zero pivot in
/// the first column yields Degenerate; no epsilon substitution is attempted.
RouthOutcome routhHurwitz(const RatPolynomial& p);

/// True iff every complex root of p has real part > 0 (Routh on p(-t),
/// falling back to realPartSigns when the table degenerates).
bool allRootsPositiveRealPart(const RatPolynomial& p);

struct RealPartReport {
  std::size_t countPositive = 0;
  std::size_t countZero = 0;
  std::size_t countNegative = 0;
  /// Present iff all roots have positive real part (and degree >= 1).
  /// The true minimum real part lies in (lo, hi], or equals lo == hi.
  std::optional<RationalInterval> minPositiveRealPart;
  Rational sumRealParts;

  friend bool operator==(const RealPartReport&, const RealPartReport&) = default;
};

/// Exact sign tallies plus, when every real part is positive, a certified
/// interval of width <= tol around the smallest real part. The interval is
/// obtained by bisection on the shift c in p(t + c) with an exact half-plane
/// predicate; rational minima are detected exactly and reported as points.
RealPartReport realPartReport(const RatPolynomial& p, const Rational& tol = defaultTolerance());

}  // namespace lpcoh
