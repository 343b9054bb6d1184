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
#include <string>
#include <vector>

#include "lpcoh/rat_matrix.hpp"
#include "lpcoh/rational.hpp"

namespace lpcoh {

/// Finite-dimensional real Lie algebra over Q, given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k in a fixed basis. Indices are 0-based.
///
/// The table is stored as given; antisymmetry and the Jacobi identity are
/// checked by validate(), not enforced on construction.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim);
  LieAlgebra(std::size_t dim, std::vector<std::string> basisNames);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basisNames() const { return names_; }

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) {
    return table_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets c(i, j, k) = coef and c(j, i, k) = -coef.
  void setBracket(std::size_t i, std::size_t j, std::size_t k,
                  const Rational& coef);

  /// Coordinates of [x, y].
  RatVector bracket(const RatVector& x, const RatVector& y) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> names_;
  std::vector<Rational> table_;
};

struct IdentityViolation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  // 0-based indices; for Antisymmetry l is unused (equal to k).
  std::size_t i, j, k, l;
  Rational residual;
};

struct ValidationReport {
  std::vector<IdentityViolation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const LieAlgebra& algebra);

/// Matrix of ad_xi: column j holds the coordinates of [xi, e_j].
RatMatrix adjoint(const LieAlgebra& algebra, const RatVector& xi);

/// tau(xi) = tr ad_xi, stored as a covector in the algebra's basis.
struct ModularCharacter {
  RatVector tau;

  Rational operator()(const RatVector& xi) const { return dot(tau, xi); }
  bool isZero() const { return lpcoh::isZero(tau); }
};

ModularCharacter modularCharacter(const LieAlgebra& algebra);

/// Linear subspace of Q^n carried by an explicit basis (matrix columns).
class Subspace {
 public:
  Subspace() = default;
  /// Keeps a maximal independent subset of the given vectors.
  static Subspace spannedBy(std::size_t ambientDim,
                            const std::vector<RatVector>& vectors);
  static Subspace whole(std::size_t ambientDim);
  static Subspace zero(std::size_t ambientDim);

  std::size_t ambientDim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const RatMatrix& basisMatrix() const { return basis_; }
  std::vector<RatVector> basis() const { return basis_.columns(); }

  bool contains(const RatVector& v) const;
  bool containsSubspace(const Subspace& other) const;
  /// Coordinates of v in this basis; throws InvalidArgument if v is outside.
  RatVector coordinates(const RatVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;  // ambient_ x dim, columns independent
};

/// ker tau; throws TauZero for unimodular algebras. The result is verified to
/// be an ideal (throws Internal otherwise, which would indicate a bad input
/// table that slipped past validation).
Subspace kernelOfTau(const LieAlgebra& algebra);

/// span{[x, y] : x in a, y in b}.
Subspace bracketSpan(const LieAlgebra& algebra, const Subspace& a,
                     const Subspace& b);

bool isIdeal(const LieAlgebra& algebra, const Subspace& sub);
bool isSubalgebra(const LieAlgebra& algebra, const Subspace& sub);

/// g = D^0 ⊋ D^1 = [g, g] ⊋ ... until the chain stabilizes. The final term is
/// the stable one (zero for solvable algebras).
std::vector<Subspace> derivedSeries(const LieAlgebra& algebra);
/// g = C^1 ⊋ C^2 = [g, g] ⊋ C^3 = [g, C^2] ⊋ ... until stable.
std::vector<Subspace> lowerCentralSeries(const LieAlgebra& algebra);
bool isSolvable(const LieAlgebra& algebra);
bool isNilpotent(const LieAlgebra& algebra);
/// Number of nonzero terms of the lower central series; nullopt if the algebra
/// is not nilpotent. Abelian nonzero algebras have class 1.
std::optional<std::size_t> nilpotencyClass(const LieAlgebra& algebra);

/// A subalgebra expressed in its own basis together with the embedding
/// (ambient coordinates of each basis vector, as columns).
struct Restriction {
  LieAlgebra algebra;
  RatMatrix embedding;
};

/// Throws NotASubalgebra if sub is not closed under the bracket.
Restriction restrictToSubspace(const LieAlgebra& algebra, const Subspace& sub);

/// Structure constants in the basis f_a = sum_i P(i, a) e_i.
/// Throws SingularMatrix / NonSquare / DimensionMismatch.
LieAlgebra changeBasis(const LieAlgebra& algebra, const RatMatrix& p);

/// Direct sum a ⊕ b, basis of a first.
LieAlgebra directSum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace lpcoh
