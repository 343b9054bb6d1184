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
#include <vector>

#include "lpcoh/lie_algebra.hpp"
#include "lpcoh/rat_matrix.hpp"

namespace lpcoh::models {

/// R^n with zero bracket.
LieAlgebra abelian(std::size_t n);

/// Basis x, y, z with [x, y] = z.
LieAlgebra heisenberg();

/// R^m extended by xi (last basis vector) acting through `action`:
/// [xi, e_j] = sum_i action(i, j) e_i. The e_i commute.
LieAlgebra semidirect(const RatMatrix& action);

/// Basis x, xi with [xi, x] = x.
LieAlgebra aff();

/// Basis x, y, t with [t, x] = x, [t, y] = -y.
LieAlgebra sol();

/// Real hyperbolic n-space: R^{n-1} extended by the identity derivation.
LieAlgebra realHyperbolic(std::size_t n);

/// Complex hyperbolic k-space: Heisenberg algebra of dimension 2k - 1 with
/// basis x_1..x_{k-1}, y_1..y_{k-1}, z, [x_i, y_i] = z, extended by xi with
/// weights 1 on x_i, y_i and 2 on z. For k = 1 the nilradical is just z.
LieAlgebra complexHyperbolic(std::size_t k);

/// Basis e, f, h with [h, e] = 2e, [h, f] = -2f, [e, f] = h.
LieAlgebra sl2();

}  // namespace lpcoh::models
