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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "lpcoh/lpcoh.hpp"

#define EXPECT_LPCOH_ERROR(stmt, expectedCode)                                   \
  do {                                                                            \
    try {                                                                         \
      stmt;                                                                       \
      ADD_FAILURE() << "expected lpcoh::Error from " #stmt;                      \
    } catch (const lpcoh::Error& e) {                                             \
      EXPECT_EQ(e.code(), expectedCode) << e.what();                              \
    }                                                                             \
  } while (0)

namespace oracle {

using lpcoh::RatMatrix;
using lpcoh::RatPolynomial;
using lpcoh::Rational;

// det(tI - A) by Laplace expansion along the first row, polynomial entries.
inline RatPolynomial cofactorDet(const std::vector<std::vector<RatPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return RatPolynomial::constant(1);
  if (n == 1) return m[0][0];
  RatPolynomial total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].isZero()) continue;
    std::vector<std::vector<RatPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RatPolynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const RatPolynomial term = m[0][c] * cofactorDet(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

inline RatPolynomial cofactorCharPoly(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<RatPolynomial>> m(n, std::vector<RatPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = i == j ? RatPolynomial{-a(i, j), Rational(1)} : RatPolynomial::constant(-a(i, j));
    }
  }
  return cofactorDet(m);
}

// Numeric roots as eigenvalues of the companion matrix.
inline std::vector<std::complex<double>> companionRoots(const RatPolynomial& p) {
  const int n = p.degree();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  const double lead = p.leading().get_d();
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

// Product of (t - r) over real roots and (t - a)^2 + b^2 over complex pairs.
struct RootSpec {
  Rational re;
  Rational im;  // 0 for a real root; a pair a +- bi otherwise
};

inline RatPolynomial fromRoots(const std::vector<RootSpec>& roots) {
  RatPolynomial p = RatPolynomial::constant(1);
  for (const auto& r : roots) {
    if (r.im == 0) {
      p = p * RatPolynomial::linear(r.re);
    } else {
      p = p * RatPolynomial{r.re * r.re + r.im * r.im, -2 * r.re, Rational(1)};
    }
  }
  return p;
}

// Independent subset enumeration for Cheeger-type minima.
inline double subsetMinimum(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                            const std::function<bool(const std::vector<bool>&, std::size_t)>& admissible) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> in(n, false);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      in[v] = (mask >> v) & 1U;
      size += in[v] ? 1 : 0;
    }
    if (!admissible(in, size)) continue;
    std::size_t cut = 0;
    for (const auto& [a, b] : edges) cut += in[a] != in[b] ? 1 : 0;
    best = std::min(best, static_cast<double>(cut) / static_cast<double>(size));
  }
  return best;
}

inline double cheeger(const lpcoh::Graph& g) {
  return subsetMinimum(g.vertexCount(), g.edges(),
                       [&](const std::vector<bool>&, std::size_t size) { return 2 * size <= g.vertexCount(); });
}

inline double dirichletCheeger(const lpcoh::Graph& g) {
  return subsetMinimum(g.vertexCount(), g.edges(), [&](const std::vector<bool>& in, std::size_t) {
    for (std::size_t v = 0; v < in.size(); ++v) {
      if (in[v] && g.boundary()[v]) return false;
    }
    return true;
  });
}

// Dense Laplacian eigenvalues restricted to `keep`.
inline Eigen::VectorXd laplacianEigenvalues(const lpcoh::Graph& g, const std::vector<bool>& keep) {
  std::vector<std::size_t> idx;
  std::vector<long> pos(g.vertexCount(), -1);
  for (std::size_t v = 0; v < g.vertexCount(); ++v) {
    if (keep[v]) {
      pos[v] = static_cast<long>(idx.size());
      idx.push_back(v);
    }
  }
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<long>(idx.size()), static_cast<long>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    l(static_cast<long>(i), static_cast<long>(i)) = static_cast<double>(g.degree(idx[i]));
    for (auto w : g.adjacency()[idx[i]]) {
      if (pos[w] >= 0) l(static_cast<long>(i), pos[w]) = -1.0;
    }
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(l).eigenvalues();
}

inline Rational randomRational(std::mt19937_64& rng, int maxNum, int maxDen) {
  std::uniform_int_distribution<int> num(-maxNum, maxNum);
  std::uniform_int_distribution<int> den(1, maxDen);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace oracle
