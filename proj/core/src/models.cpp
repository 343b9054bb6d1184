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

#include "lpcoh/models.hpp"

#include <string>

#include "lpcoh/error.hpp"

namespace lpcoh::models {

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  return LieAlgebra(n, std::move(names));
}

LieAlgebra heisenberg() {
  LieAlgebra g(3, {"x", "y", "z"});
  g.setBracket(0, 1, 2, 1);
  return g;
}

LieAlgebra semidirect(const RatMatrix& action) {
  if (!action.isSquare()) fail(ErrorCode::NonSquare, "derivation matrix must be square");
  const std::size_t m = action.rows();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("xi");
  LieAlgebra g(m + 1, std::move(names));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (action(i, j) != 0) g.setBracket(m, j, i, action(i, j));
    }
  }
  return g;
}

LieAlgebra aff() {
  LieAlgebra g(2, {"x", "xi"});
  g.setBracket(1, 0, 0, 1);
  return g;
}

LieAlgebra sol() {
  LieAlgebra g(3, {"x", "y", "t"});
  g.setBracket(2, 0, 0, 1);
  g.setBracket(2, 1, 1, -1);
  return g;
}

LieAlgebra realHyperbolic(std::size_t n) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "real hyperbolic model needs n >= 2");
  return semidirect(RatMatrix::identity(n - 1));
}

LieAlgebra complexHyperbolic(std::size_t k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "complex hyperbolic model needs k >= 1");
  const std::size_t pairs = k - 1;
  const std::size_t z = 2 * pairs;
  const std::size_t xi = z + 1;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < pairs; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < pairs; ++i) names.push_back("y" + std::to_string(i + 1));
  names.push_back("z");
  names.push_back("xi");
  LieAlgebra g(xi + 1, std::move(names));
  for (std::size_t i = 0; i < pairs; ++i) {
    g.setBracket(i, pairs + i, z, 1);
    g.setBracket(xi, i, i, 1);
    g.setBracket(xi, pairs + i, pairs + i, 1);
  }
  g.setBracket(xi, z, z, 2);
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g(3, {"e", "f", "h"});
  g.setBracket(2, 0, 0, 2);
  g.setBracket(2, 1, 1, -2);
  g.setBracket(0, 1, 2, 1);
  return g;
}

}  // namespace lpcoh::models
