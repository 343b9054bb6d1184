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

#include "lpcoh/classifier.hpp"

#include <sstream>

#include "lpcoh/error.hpp"

namespace lpcoh {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ClosedAtInfinity: return "ClosedAtInfinity";
    case Verdict::Heintze: return "Heintze";
    case Verdict::Vanishing: return "Vanishing";
  }
  return "?";
}

Verdict parseVerdict(std::string_view name) {
  for (Verdict v : {Verdict::ClosedAtInfinity, Verdict::Heintze, Verdict::Vanishing}) {
    if (name == to_string(v)) return v;
  }
  fail(ErrorCode::InvalidArgument, "unknown verdict '" + std::string(name) + "'");
}

std::string_view to_string(CohomologySpace s) {
  switch (s) {
    case CohomologySpace::Torsion: return "T";
    case CohomologySpace::Reduced: return "R";
    case CohomologySpace::Full: return "H";
  }
  return "?";
}

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string RangeEndpoint::toString() const {
  switch (kind) {
    case Kind::Value: return lpcoh::toString(value);
    case Kind::CriticalExponent: return "pcrit";
    case Kind::Infinity: return "inf";
  }
  return "?";
}

std::string CohomologyStatement::toString() const {
  std::ostringstream os;
  os << to_string(space) << "^{1,p} " << (vanishes ? "= 0" : "!= 0") << " for p in "
     << (fromInclusive ? "[" : "(") << from.toString() << ", " << to.toString()
     << (toInclusive ? "]" : ")");
  if (!citation.empty()) os << " [" << citation << "]";
  return os.str();
}

namespace {

using E = RangeEndpoint;

std::vector<CohomologyStatement> statementsFor(Verdict v) {
  switch (v) {
    case Verdict::ClosedAtInfinity:
      return {
          {CohomologySpace::Torsion, E::number(1), false, E::infinity(), false, false, ""},
          {CohomologySpace::Reduced, E::number(1), false, E::infinity(), false, true,
           "Tessera: reduced cohomology vanishes for unimodular solvable groups (cited, not computed)"},
      };
    case Verdict::Heintze:
      return {
          {CohomologySpace::Torsion, E::number(1), true, E::infinity(), false, true, ""},
          {CohomologySpace::Full, E::number(1), false, E::critical(), true, true, ""},
          {CohomologySpace::Reduced, E::critical(), false, E::infinity(), false, false, ""},
      };
    case Verdict::Vanishing:
      return {
          {CohomologySpace::Full, E::number(1), false, E::infinity(), false, true, ""},
      };
  }
  return {};
}

void requireClassifiable(const LieAlgebra& g) {
  const ValidationReport report = validate(g);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::ostringstream os;
    os << report.violations.size() << " identity violation(s); first: "
       << (v.kind == IdentityViolation::Kind::Antisymmetry ? "antisymmetry" : "Jacobi") << " at ("
       << v.i + 1 << "," << v.j + 1 << "," << v.k + 1;
    if (v.kind == IdentityViolation::Kind::Jacobi) os << "," << v.l + 1;
    os << ")";
    fail(ErrorCode::InvalidAlgebra, os.str());
  }
  const auto series = derivedSeries(g);
  if (series.back().dim() != 0) {
    std::ostringstream os;
    os << "derived series stabilizes at dimension " << series.back().dim() << " after "
       << series.size() - 1
       << " step(s); reduce the group to a cocompact solvable subgroup first "
          "(Levi and Iwasawa decompositions), then classify that algebra";
    fail(ErrorCode::NotSolvable, os.str());
  }
}

// Matrix of ad_{xi} on the ideal `k`, in the basis of `k`.
RatMatrix restrictedAdjoint(const LieAlgebra& g, const RatVector& xi, const Subspace& k) {
  const RatMatrix ad = adjoint(g, xi);
  const std::size_t m = k.dim();
  RatMatrix out(m, m);
  const auto basis = k.basis();
  for (std::size_t j = 0; j < m; ++j) {
    const RatVector coords = k.coordinates(ad.apply(basis[j]));
    for (std::size_t i = 0; i < m; ++i) out(i, j) = coords[i];
  }
  return out;
}

Classification decide(const LieAlgebra& g, const std::optional<RatVector>& direction,
                      const Rational& tol) {
  requireClassifiable(g);
  Classification c;
  const ModularCharacter chi = modularCharacter(g);
  c.provenance.tau = chi.tau;
  if (chi.isZero()) {
    c.provenance.tauZero = true;
    c.verdict = Verdict::ClosedAtInfinity;
    c.statements = statementsFor(c.verdict);
    return c;
  }
  const RatVector xi0 = direction ? *direction : defaultDirection(g);
  if (xi0.size() != g.dim()) fail(ErrorCode::DimensionMismatch, "direction length != dim");
  const Rational tauXi = chi(xi0);
  if (tauXi <= 0) fail(ErrorCode::InvalidArgument, "direction must satisfy tau(xi0) > 0");
  c.provenance.xi0 = xi0;

  const Subspace k = kernelOfTau(g);
  c.provenance.kernelDim = k.dim();
  const bool nilpotent = isNilpotent(restrictToSubspace(g, k).algebra);
  c.provenance.kernelNilpotent = nilpotent;
  if (!nilpotent) {
    c.verdict = Verdict::Vanishing;
    c.statements = statementsFor(c.verdict);
    return c;
  }

  const RatPolynomial cp = charPoly(restrictedAdjoint(g, xi0, k));
  const RealPartReport report = realPartReport(cp, tol);
  c.provenance.charPoly = cp;
  c.provenance.realParts = report;
  const bool heintze = allRootsPositiveRealPart(cp);
  if (heintze != (report.countPositive == k.dim())) {
    fail(ErrorCode::Internal, "Routh-Hurwitz and Cauchy-index tallies disagree");
  }
  if (report.sumRealParts != tauXi) {
    fail(ErrorCode::Internal, "trace of ad_{xi0} on ker tau differs from tau(xi0)");
  }
  if (!heintze) {
    c.verdict = Verdict::Vanishing;
    c.statements = statementsFor(c.verdict);
    return c;
  }
  const RationalInterval& lambda1 = *report.minPositiveRealPart;
  c.verdict = Verdict::Heintze;
  c.exponent = RationalInterval{report.sumRealParts / lambda1.hi,
                                report.sumRealParts / lambda1.lo};
  c.statements = statementsFor(c.verdict);
  return c;
}

}  // namespace

RatVector defaultDirection(const LieAlgebra& g) {
  const ModularCharacter chi = modularCharacter(g);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (chi.tau[i] != 0) {
      RatVector xi(g.dim(), Rational(0));
      xi[i] = 1 / chi.tau[i];
      return xi;
    }
  }
  fail(ErrorCode::TauZero, "algebra is unimodular (tau = 0)");
}

Classification classify(const LieAlgebra& g, const Rational& tol) {
  return decide(g, std::nullopt, tol);
}

Classification classifyWithDirection(const LieAlgebra& g, const RatVector& xi0,
                                     const Rational& tol) {
  return decide(g, xi0, tol);
}

Answer harmonicL2Query(const LieAlgebra& g, const Rational& tol, const Rational& minTol) {
  Rational t = tol;
  while (true) {
    const Classification c = classify(g, t);
    if (c.verdict != Verdict::Heintze) return Answer::No;
    if (c.exponent->hi < 2) return Answer::Yes;
    if (c.exponent->lo >= 2) return Answer::No;
    if (t <= minTol) return Answer::Indeterminate;
    t /= Rational(1 << 16);
  }
}

}  // namespace lpcoh
