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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lpcoh {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Finite simple undirected graph; each edge stored once as (a, b) with a < b,
/// edges sorted. `boundary` marks the vertices forced to zero by Dirichlet
/// problems (the outermost shell of a generated ball).
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on self-loops or out-of-range endpoints;
  /// duplicate and reversed edges are normalized.
  Graph(std::size_t vertexCount, std::vector<Edge> edges);

  std::size_t vertexCount() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<std::uint32_t>>& adjacency() const { return adj_; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t maxDegree() const;
  bool isConnected() const;

  const std::vector<bool>& boundary() const { return boundary_; }
  void setBoundary(std::vector<bool> flags);
  std::size_t interiorCount() const;

  // Ball metadata; empty for hand-built graphs.
  std::string model;
  std::optional<int> radius;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<bool> boundary_;
};

/// Ball models. SolLattice uses Z^2 x_A Z with (v,k)(w,l) = (v + A^k w, k + l);
/// DiscreteHeisenberg uses (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
struct BallModel {
  enum class Kind { Grid, SolLattice, DiscreteHeisenberg, RegularTree };
  Kind kind = Kind::Grid;
  int dimension = 2;                                  // Grid
  std::array<std::int64_t, 4> matrix{2, 1, 1, 1};     // SolLattice, row-major
  int valence = 3;                                    // RegularTree

  static BallModel grid(int d) { return {Kind::Grid, d, {2, 1, 1, 1}, 3}; }
  static BallModel sol(std::array<std::int64_t, 4> a) { return {Kind::SolLattice, 2, a, 3}; }
  static BallModel heisenberg() { return {Kind::DiscreteHeisenberg, 2, {2, 1, 1, 1}, 3}; }
  static BallModel tree(int k) { return {Kind::RegularTree, 2, {2, 1, 1, 1}, k}; }

  /// "grid2", "sol", "heisenberg", "tree3", ...
  std::string name() const;
  /// Accepts the names produced by name(); "sol" means A = [[2,1],[1,1]].
  static BallModel parse(const std::string& name);
};

/// Word-metric ball of the given radius around the identity (the root for
/// trees), vertices in BFS order with generators tried in a fixed order.
/// Boundary = vertices at distance exactly `radius`.
/// Throws InvalidModel (bad parameters, radius < 1).
Graph generateBall(const BallModel& model, int radius);

enum class EstimateMethod { SpectralSandwich, SweepCut, BruteForce, MinCut, Eigen, Descent };
std::string_view to_string(EstimateMethod m);

struct ConstantEstimate {
  double lowerBound = 0.0;
  double upperBound = 0.0;
  EstimateMethod method = EstimateMethod::SpectralSandwich;
  bool exact() const { return lowerBound == upperBound; }
};

/// Cheeger constant h = min |dS| / |S| over 0 < |S| <= n/2, dS the edge
/// boundary. The sandwich uses the combinatorial Laplacian:
/// lambda2 / 2 <= h <= sqrt(2 dmax lambda2).
struct CheegerReport {
  ConstantEstimate estimate;
  double lambda2 = 0.0;            // Rayleigh quotient of the Fiedler iterate
  double lambda2Lower = 0.0;       // lambda2 minus residual norm
  double sandwichLower = 0.0;
  double sandwichUpper = 0.0;
  double sweepUpper = 0.0;
  std::optional<double> bruteForce;  // vertexCount <= 16
};

/// Throws Disconnected, InvalidArgument for fewer than 2 vertices.
CheegerReport cheegerEstimate(const Graph& g);

/// Exact h by enumeration; throws InvalidArgument above 20 vertices.
double bruteForceCheeger(const Graph& g);

/// Dirichlet isoperimetric constant min |dS| / |S| over nonempty S inside the
/// interior; dS counts every edge leaving S, boundary edges included.
struct DirichletCut {
  std::int64_t boundaryEdges = 0;
  std::int64_t volume = 0;
  std::vector<std::uint32_t> set;
  double value() const { return static_cast<double>(boundaryEdges) / static_cast<double>(volume); }
};

/// Exact, by Dinkelbach iteration over integer min-cuts. Throws EmptyInterior.
DirichletCut dirichletCheeger(const Graph& g);
/// Exact by enumeration; throws InvalidArgument above 20 interior vertices.
DirichletCut bruteForceDirichletCheeger(const Graph& g);

struct SobolevOptions {
  int maxIterations = 200;
  double relativeStop = 1e-10;
};

/// min ||du||_p / ||u||_p over u vanishing on the boundary.
/// p = 1: exact min-cut value. p = 2: sqrt of the smallest Dirichlet
/// eigenvalue, bracketed by its residual. Other p: projected descent gives the
/// upper bound; the lower bound follows from the p = 1 constant by Hoelder.
/// Throws EmptyInterior, InvalidArgument for p < 1.
ConstantEstimate sobolevPConstant(const Graph& g, double p, const SobolevOptions& options = {});

/// ||du||_p / ||u||_p of the descent iterate, for any p >= 1.
double descentSobolev(const Graph& g, double p, const SobolevOptions& options = {});

/// Smallest eigenvalue of the Laplacian restricted to interior vertices.
double dirichletEigenvalue(const Graph& g);

struct ScanRow {
  int radius = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t interior = 0;
  CheegerReport cheeger;
  ConstantEstimate sobolev;
};

enum class Trend { Decreasing, BoundedBelow };
std::string_view to_string(Trend t);

struct DichotomyScan {
  std::string model;
  double p = 1.0;
  std::vector<ScanRow> rows;
  bool monotoneDecreasing = false;  // sobolev upper bounds non-increasing
  double decayRatio = 0.0;          // first upper / last upper
  double minLowerBound = 0.0;
  Trend trend = Trend::BoundedBelow;  // Decreasing iff monotone and ratio >= 2
};

/// Throws InvalidArgument unless radii are strictly increasing.
DichotomyScan dichotomyScan(const BallModel& model, const std::vector<int>& radii, double p);

}  // namespace lpcoh
