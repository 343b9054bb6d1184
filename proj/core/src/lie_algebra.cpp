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

#include "lpcoh/lie_algebra.hpp"

#include <utility>

#include "lpcoh/error.hpp"

namespace lpcoh {

namespace {

std::vector<std::string> defaultNames(std::size_t dim, const char* prefix) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i + 1));
  return names;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim) : LieAlgebra(dim, defaultNames(dim, "e")) {}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basisNames)
    : dim_(dim), names_(std::move(basisNames)), table_(dim * dim * dim, Rational(0)) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "Lie algebra dimension must be >= 1");
  if (names_.size() != dim) fail(ErrorCode::DimensionMismatch, "basis name count != dim");
}

void LieAlgebra::setBracket(std::size_t i, std::size_t j, std::size_t k,
                            const Rational& coef) {
  if (i >= dim_ || j >= dim_ || k >= dim_) fail(ErrorCode::InvalidArgument, "bracket index out of range");
  c(i, j, k) = coef;
  c(j, i, k) = -coef;
}

RatVector LieAlgebra::bracket(const RatVector& x, const RatVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(ErrorCode::DimensionMismatch, "bracket operand length");
  RatVector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& ck = c(i, j, k);
        if (ck != 0) out[k] += w * ck;
      }
    }
  }
  return out;
}

// Basis labels are presentation only; equality is on the bracket table.
bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.dim_ == b.dim_ && a.table_ == b.table_;
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport report;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational r = g.c(i, j, k) + g.c(j, i, k);
        if (r != 0) {
          report.violations.push_back(
              {IdentityViolation::Kind::Antisymmetry, i, j, k, k, r});
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m) {
            s += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) +
                 g.c(k, i, m) * g.c(m, j, l);
          }
          if (s != 0) {
            report.violations.push_back({IdentityViolation::Kind::Jacobi, i, j, k, l, s});
          }
        }
  return report;
}

RatMatrix adjoint(const LieAlgebra& g, const RatVector& xi) {
  const std::size_t n = g.dim();
  if (xi.size() != n) fail(ErrorCode::DimensionMismatch, "adjoint: vector length != dim");
  RatMatrix ad(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (xi[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& ck = g.c(i, j, k);
        if (ck != 0) ad(k, j) += xi[i] * ck;
      }
  }
  return ad;
}

ModularCharacter modularCharacter(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  ModularCharacter chi{RatVector(n, Rational(0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) chi.tau[i] += g.c(i, j, j);
  return chi;
}

// --- Subspace --------------------------------------------------------------

Subspace Subspace::spannedBy(std::size_t ambientDim,
                             const std::vector<RatVector>& vectors) {
  Subspace s;
  s.ambient_ = ambientDim;
  if (vectors.empty()) {
    s.basis_ = RatMatrix(ambientDim, 0);
    return s;
  }
  const RatMatrix all = RatMatrix::fromColumns(vectors, ambientDim);
  std::vector<std::size_t> piv;
  all.rref(&piv);
  std::vector<RatVector> kept;
  kept.reserve(piv.size());
  for (auto p : piv) kept.push_back(vectors[p]);
  s.basis_ = RatMatrix::fromColumns(kept, ambientDim);
  return s;
}

Subspace Subspace::whole(std::size_t ambientDim) {
  Subspace s;
  s.ambient_ = ambientDim;
  s.basis_ = RatMatrix::identity(ambientDim);
  return s;
}

Subspace Subspace::zero(std::size_t ambientDim) {
  Subspace s;
  s.ambient_ = ambientDim;
  s.basis_ = RatMatrix(ambientDim, 0);
  return s;
}

bool Subspace::contains(const RatVector& v) const {
  if (v.size() != ambient_) fail(ErrorCode::DimensionMismatch, "subspace membership");
  if (lpcoh::isZero(v)) return true;
  if (dim() == 0) return false;
  return solveExact(basis_, v, nullptr);
}

bool Subspace::containsSubspace(const Subspace& other) const {
  for (std::size_t c = 0; c < other.dim(); ++c) {
    if (!contains(other.basis_.column(c))) return false;
  }
  return true;
}

RatVector Subspace::coordinates(const RatVector& v) const {
  if (lpcoh::isZero(v)) return RatVector(dim(), Rational(0));
  RatVector x;
  if (dim() == 0 || !solveExact(basis_, v, &x)) {
    fail(ErrorCode::InvalidArgument, "vector does not lie in the subspace");
  }
  return x;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.containsSubspace(b);
}

// --- ideals and series -----------------------------------------------------

Subspace bracketSpan(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<RatVector> brackets;
  const auto av = a.basis();
  const auto bv = b.basis();
  for (const auto& x : av)
    for (const auto& y : bv) {
      RatVector z = g.bracket(x, y);
      if (!isZero(z)) brackets.push_back(std::move(z));
    }
  return Subspace::spannedBy(g.dim(), brackets);
}

bool isIdeal(const LieAlgebra& g, const Subspace& sub) {
  return sub.containsSubspace(bracketSpan(g, Subspace::whole(g.dim()), sub));
}

bool isSubalgebra(const LieAlgebra& g, const Subspace& sub) {
  return sub.containsSubspace(bracketSpan(g, sub, sub));
}

Subspace kernelOfTau(const LieAlgebra& g) {
  const ModularCharacter chi = modularCharacter(g);
  if (chi.isZero()) fail(ErrorCode::TauZero, "algebra is unimodular (tau = 0)");
  RatMatrix row(1, g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) row(0, i) = chi.tau[i];
  Subspace k = Subspace::spannedBy(g.dim(), row.nullspace());
  if (!isIdeal(g, k)) {
    fail(ErrorCode::Internal, "ker tau is not an ideal; the bracket table violates Jacobi");
  }
  return k;
}

namespace {

template <typename Next>
std::vector<Subspace> descendingChain(const LieAlgebra& g, Next next) {
  std::vector<Subspace> chain{Subspace::whole(g.dim())};
  // Each step strictly drops dimension, so at most dim steps.
  while (chain.back().dim() > 0) {
    Subspace s = next(chain.back());
    if (s.dim() == chain.back().dim()) break;
    chain.push_back(std::move(s));
  }
  return chain;
}

}  // namespace

std::vector<Subspace> derivedSeries(const LieAlgebra& g) {
  return descendingChain(g, [&](const Subspace& d) { return bracketSpan(g, d, d); });
}

std::vector<Subspace> lowerCentralSeries(const LieAlgebra& g) {
  const Subspace all = Subspace::whole(g.dim());
  return descendingChain(g, [&](const Subspace& c) { return bracketSpan(g, all, c); });
}

bool isSolvable(const LieAlgebra& g) { return derivedSeries(g).back().dim() == 0; }

bool isNilpotent(const LieAlgebra& g) { return lowerCentralSeries(g).back().dim() == 0; }

std::optional<std::size_t> nilpotencyClass(const LieAlgebra& g) {
  const auto series = lowerCentralSeries(g);
  if (series.back().dim() != 0) return std::nullopt;
  return series.size() - 1;
}

Restriction restrictToSubspace(const LieAlgebra& g, const Subspace& sub) {
  if (sub.ambientDim() != g.dim()) fail(ErrorCode::DimensionMismatch, "subspace ambient dimension");
  const std::size_t m = sub.dim();
  if (m == 0) fail(ErrorCode::InvalidArgument, "cannot restrict to the zero subspace");
  const auto basis = sub.basis();
  Restriction out{LieAlgebra(m, defaultNames(m, "v")), sub.basisMatrix()};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const RatVector z = g.bracket(basis[a], basis[b]);
      if (!sub.contains(z)) {
        fail(ErrorCode::NotASubalgebra, "bracket of basis vectors " + std::to_string(a + 1) +
                                            " and " + std::to_string(b + 1) +
                                            " leaves the subspace");
      }
      const RatVector coords = sub.coordinates(z);
      for (std::size_t k = 0; k < m; ++k) out.algebra.c(a, b, k) = coords[k];
    }
  return out;
}

LieAlgebra changeBasis(const LieAlgebra& g, const RatMatrix& p) {
  if (!p.isSquare()) fail(ErrorCode::NonSquare, "change of basis must be square");
  if (p.rows() != g.dim()) fail(ErrorCode::DimensionMismatch, "change of basis size != dim");
  if (p.determinant() == 0) fail(ErrorCode::SingularMatrix, "change of basis is singular");
  const RatMatrix pinv = p.inverse();
  const std::size_t n = g.dim();
  const auto f = p.columns();
  LieAlgebra out(n, defaultNames(n, "f"));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const RatVector coords = pinv.apply(g.bracket(f[a], f[b]));
      for (std::size_t k = 0; k < n; ++k) out.c(a, b, k) = coords[k];
    }
  return out;
}

LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<std::string> names = a.basisNames();
  names.insert(names.end(), b.basisNames().begin(), b.basisNames().end());
  LieAlgebra s(n, std::move(names));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) s.c(i, j, k) = a.c(i, j, k);
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) s.c(o + i, o + j, o + k) = b.c(i, j, k);
  return s;
}

}  // namespace lpcoh
