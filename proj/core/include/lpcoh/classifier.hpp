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

#include <optional>
#include <string>
#include <vector>

#include "lpcoh/lie_algebra.hpp"
#include "lpcoh/polynomial.hpp"
#include "lpcoh/spectral.hpp"

namespace lpcoh {

enum class Verdict { ClosedAtInfinity, Heintze, Vanishing };

std::string_view to_string(Verdict v);
/// Throws InvalidArgument for unknown names.
Verdict parseVerdict(std::string_view name);

/// Which degree-one space a statement is about.
enum class CohomologySpace { Torsion, Reduced, Full };  // T^{1,p}, R^{1,p}, H^{1,p}

std::string_view to_string(CohomologySpace s);

/// Endpoint of a p-range: a number, the critical exponent, or +infinity.
struct RangeEndpoint {
  enum class Kind { Value, CriticalExponent, Infinity };
  Kind kind = Kind::Value;
  Rational value;  // used when kind == Value

  static RangeEndpoint number(const Rational& v) { return {Kind::Value, v}; }
  static RangeEndpoint critical() { return {Kind::CriticalExponent, 0}; }
  static RangeEndpoint infinity() { return {Kind::Infinity, 0}; }
  std::string toString() const;
  friend bool operator==(const RangeEndpoint&, const RangeEndpoint&) = default;
};

/// "space vanishes / does not vanish for p in range".
struct CohomologyStatement {
  CohomologySpace space;
  RangeEndpoint from;
  bool fromInclusive;
  RangeEndpoint to;
  bool toInclusive;
  bool vanishes;
  /// Non-empty when the statement is quoted from the literature rather than
  /// derived by this library.
  std::string citation;

  std::string toString() const;
  friend bool operator==(const CohomologyStatement&, const CohomologyStatement&) = default;
};

/// Record of the tests that fired on the way to a verdict.
struct Provenance {
  bool tauZero = false;
  RatVector tau;
  std::optional<RatVector> xi0;
  std::optional<std::size_t> kernelDim;
  std::optional<bool> kernelNilpotent;
  std::optional<RatPolynomial> charPoly;  // of ad_{xi0} restricted to ker tau
  std::optional<RealPartReport> realParts;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Classification {
  Verdict verdict = Verdict::Vanishing;
  /// Critical exponent; present iff verdict == Heintze.
  std::optional<RationalInterval> exponent;
  std::vector<CohomologyStatement> statements;
  Provenance provenance;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Three-way verdict for a solvable rational Lie algebra.
/// Throws InvalidAlgebra (validate fails) or NotSolvable.
Classification classify(const LieAlgebra& algebra, const Rational& tol = defaultTolerance());

/// Same decision procedure with a caller-chosen direction xi0 (tau(xi0) > 0
/// required, InvalidArgument otherwise). The exponent is sum/min of the real
/// parts of ad_{xi0} on ker tau, hence invariant under positive rescaling.
Classification classifyWithDirection(const LieAlgebra& algebra, const RatVector& xi0,
                                     const Rational& tol = defaultTolerance());

/// The default direction: the first basis vector with tau_i != 0, rescaled so
/// that tau(xi0) = 1. Throws TauZero for unimodular algebras.
RatVector defaultDirection(const LieAlgebra& algebra);

enum class Answer { Yes, No, Indeterminate };
std::string_view to_string(Answer a);

/// Existence of non-constant harmonic functions with L^2 gradient: Heintze
/// with critical exponent < 2. If the exponent interval straddles 2, the
/// tolerance is refined (down to `minTol`) before giving up.
Answer harmonicL2Query(const LieAlgebra& algebra, const Rational& tol = defaultTolerance(),
                       const Rational& minTol = pow2(-256));

}  // namespace lpcoh
