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

#include "lpcoh/cli/catalog.hpp"

#include "lpcoh/error.hpp"
#include "lpcoh/models.hpp"

namespace lpcoh::cli {

namespace {

LieAlgebra diag(std::initializer_list<int> weights) {
  RatMatrix m(weights.size(), weights.size());
  std::size_t i = 0;
  for (int w : weights) {
    m(i, i) = w;
    ++i;
  }
  return models::semidirect(m);
}

CatalogEntry heintze(std::string name, std::string description, LieAlgebra g, int exponent) {
  return {std::move(name), std::move(description), std::move(g), Verdict::Heintze, Rational(exponent)};
}

CatalogEntry other(std::string name, std::string description, LieAlgebra g, Verdict v) {
  return {std::move(name), std::move(description), std::move(g), v, std::nullopt};
}

std::vector<CatalogEntry> build() {
  using V = Verdict;
  std::vector<CatalogEntry> c;
  c.push_back(other("abelian2", "R^2", models::abelian(2), V::ClosedAtInfinity));
  c.push_back(other("abelian3", "R^3", models::abelian(3), V::ClosedAtInfinity));
  c.push_back(other("heisenberg", "3-dimensional Heisenberg algebra", models::heisenberg(), V::ClosedAtInfinity));
  c.push_back(other("sol", "sol: weights 1, -1", models::sol(), V::ClosedAtInfinity));
  c.push_back(heintze("aff", "aff(R), the hyperbolic plane", models::aff(), 1));
  c.push_back(heintze("rh3", "real hyperbolic 3-space", models::realHyperbolic(3), 2));
  c.push_back(heintze("rh4", "real hyperbolic 4-space", models::realHyperbolic(4), 3));
  c.push_back(heintze("rh5", "real hyperbolic 5-space", models::realHyperbolic(5), 4));
  c.push_back(heintze("ch1", "complex hyperbolic line (isometric to the hyperbolic plane)",
                      models::complexHyperbolic(1), 1));
  c.push_back(heintze("ch2", "complex hyperbolic plane", models::complexHyperbolic(2), 4));
  c.push_back(heintze("ch3", "complex hyperbolic 3-space", models::complexHyperbolic(3), 6));
  c.push_back(heintze("weights12", "R^2 extended by diag(1, 2)", diag({1, 2}), 3));
  c.push_back(heintze("spiral", "R^2 extended by eigenvalues 1 +- i",
                      models::semidirect(RatMatrix{{1, -1}, {1, 1}}), 2));
  c.push_back(heintze("jordan", "R^2 extended by a Jordan block with eigenvalue 1",
                      models::semidirect(RatMatrix{{1, 1}, {0, 1}}), 2));
  c.push_back(other("mixed-sign", "R^2 extended by diag(2, -1)", diag({2, -1}), V::Vanishing));
  c.push_back(other("zero-weight", "R^2 extended by diag(1, 0)", diag({1, 0}), V::Vanishing));
  c.push_back(other("aff+sol", "aff(R) direct sum sol", directSum(models::aff(), models::sol()), V::Vanishing));
  c.push_back(other("aff+aff", "aff(R) direct sum aff(R)", directSum(models::aff(), models::aff()), V::Vanishing));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalogEntry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  fail(ErrorCode::InvalidArgument, "no catalog entry named '" + std::string(name) + "'");
}

AlgebraFile toAlgebraFile(const CatalogEntry& e) {
  return fromLieAlgebra(e.name, e.algebra, e.expected, e.expectedExponent);
}

}  // namespace lpcoh::cli
