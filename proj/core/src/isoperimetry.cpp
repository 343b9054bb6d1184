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

#include "lpcoh/isoperimetry.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "lpcoh/error.hpp"

namespace lpcoh {

// --- Graph -------------------------------------------------------------------

Graph::Graph(std::size_t vertexCount, std::vector<Edge> edges) : n_(vertexCount) {
  for (auto& e : edges) {
    if (e.first == e.second) fail(ErrorCode::InvalidArgument, "self-loop in graph");
    if (e.first >= n_ || e.second >= n_) fail(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
  boundary_.assign(n_, false);
}

std::size_t Graph::maxDegree() const {
  std::size_t d = 0;
  for (const auto& row : adj_) d = std::max(d, row.size());
  return d;
}

bool Graph::isConnected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

void Graph::setBoundary(std::vector<bool> flags) {
  if (flags.size() != n_) fail(ErrorCode::DimensionMismatch, "boundary flags != vertex count");
  boundary_ = std::move(flags);
}

std::size_t Graph::interiorCount() const {
  return static_cast<std::size_t>(std::count(boundary_.begin(), boundary_.end(), false));
}

// --- ball models -------------------------------------------------------------

std::string BallModel::name() const {
  switch (kind) {
    case Kind::Grid: return "grid" + std::to_string(dimension);
    case Kind::SolLattice: return "sol";
    case Kind::DiscreteHeisenberg: return "heisenberg";
    case Kind::RegularTree: return "tree" + std::to_string(valence);
  }
  return "?";
}

BallModel BallModel::parse(const std::string& name) {
  auto suffix = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        rest.size() > 3) {
      return std::nullopt;
    }
    return std::stoi(rest);
  };
  if (name == "sol") return sol({2, 1, 1, 1});
  if (name == "heisenberg") return heisenberg();
  if (auto d = suffix("grid")) return grid(*d);
  if (auto k = suffix("tree")) return tree(*k);
  fail(ErrorCode::InvalidModel, "unknown graph model '" + name + "'");
}

namespace {

using Key = std::vector<std::int64_t>;
using Mat2 = std::array<std::int64_t, 4>;

Mat2 mul(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// BFS over a Cayley graph given by right-multiplication by each generator.
Graph cayleyBall(const Key& identity, int radius,
                 const std::function<std::vector<Key>(const Key&)>& neighbours) {
  std::map<Key, std::uint32_t> index;
  std::vector<Key> keys{identity};
  std::vector<int> dist{0};
  index.emplace(identity, 0);
  for (std::size_t head = 0; head < keys.size(); ++head) {
    if (dist[head] == radius) continue;
    for (auto& nb : neighbours(keys[head])) {
      if (index.count(nb)) continue;
      index.emplace(nb, static_cast<std::uint32_t>(keys.size()));
      keys.push_back(std::move(nb));
      dist.push_back(dist[head] + 1);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < keys.size(); ++v) {
    for (const auto& nb : neighbours(keys[v])) {
      auto it = index.find(nb);
      if (it != index.end() && it->second != v) edges.emplace_back(static_cast<std::uint32_t>(v), it->second);
    }
  }
  Graph g(keys.size(), std::move(edges));
  std::vector<bool> boundary(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) boundary[v] = dist[v] == radius;
  g.setBoundary(std::move(boundary));
  return g;
}

Graph treeBall(int k, int radius) {
  std::vector<Edge> edges;
  std::vector<int> depth{0};
  std::size_t frontierBegin = 0;
  std::size_t frontierEnd = 1;
  for (int d = 0; d < radius; ++d) {
    for (std::size_t v = frontierBegin; v < frontierEnd; ++v) {
      const int children = d == 0 ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        edges.emplace_back(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(depth.size()));
        depth.push_back(d + 1);
      }
    }
    frontierBegin = frontierEnd;
    frontierEnd = depth.size();
  }
  Graph g(depth.size(), std::move(edges));
  std::vector<bool> boundary(depth.size());
  for (std::size_t v = 0; v < depth.size(); ++v) boundary[v] = depth[v] == radius;
  g.setBoundary(std::move(boundary));
  return g;
}

}  // namespace

Graph generateBall(const BallModel& model, int radius) {
  if (radius < 1) fail(ErrorCode::InvalidModel, "radius must be >= 1");
  Graph g;
  switch (model.kind) {
    case BallModel::Kind::Grid: {
      const int d = model.dimension;
      if (d < 1 || d > 6) fail(ErrorCode::InvalidModel, "grid dimension must be in 1..6");
      g = cayleyBall(Key(static_cast<std::size_t>(d), 0), radius, [d](const Key& x) {
        std::vector<Key> out;
        for (int i = 0; i < d; ++i) {
          for (int s : {1, -1}) {
            Key y = x;
            y[static_cast<std::size_t>(i)] += s;
            out.push_back(std::move(y));
          }
        }
        return out;
      });
      break;
    }
    case BallModel::Kind::SolLattice: {
      const Mat2& a = model.matrix;
      const std::int64_t det = a[0] * a[3] - a[1] * a[2];
      const std::int64_t tr = a[0] + a[3];
      if (det != 1 && det != -1) fail(ErrorCode::InvalidModel, "Sol lattice matrix must have |det| = 1");
      if (tr <= 2 && tr >= -2) fail(ErrorCode::InvalidModel, "Sol lattice matrix must have |trace| > 2");
      const Mat2 inv{a[3] * det, -a[1] * det, -a[2] * det, a[0] * det};
      std::map<std::int64_t, Mat2> powers{{0, {1, 0, 0, 1}}};
      for (int k = 1; k <= radius; ++k) {
        powers[k] = mul(powers[k - 1], a);
        powers[-k] = mul(powers[-(k - 1)], inv);
      }
      g = cayleyBall(Key{0, 0, 0}, radius, [powers](const Key& x) {
        const Mat2& m = powers.at(x[2]);
        // Right multiplication by (e1,0), (e2,0) moves v by a column of A^k.
        return std::vector<Key>{{x[0] + m[0], x[1] + m[2], x[2]}, {x[0] - m[0], x[1] - m[2], x[2]},
                                {x[0] + m[1], x[1] + m[3], x[2]}, {x[0] - m[1], x[1] - m[3], x[2]},
                                {x[0], x[1], x[2] + 1},           {x[0], x[1], x[2] - 1}};
      });
      break;
    }
    case BallModel::Kind::DiscreteHeisenberg:
      g = cayleyBall(Key{0, 0, 0}, radius, [](const Key& x) {
        return std::vector<Key>{{x[0] + 1, x[1], x[2]}, {x[0] - 1, x[1], x[2]},
                                {x[0], x[1] + 1, x[2] + x[0]}, {x[0], x[1] - 1, x[2] - x[0]}};
      });
      break;
    case BallModel::Kind::RegularTree:
      if (model.valence < 2) fail(ErrorCode::InvalidModel, "tree valence must be >= 2");
      g = treeBall(model.valence, radius);
      break;
  }
  g.model = model.name();
  g.radius = radius;
  return g;
}

std::string_view to_string(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::SpectralSandwich: return "spectral-sandwich";
    case EstimateMethod::SweepCut: return "sweep-cut";
    case EstimateMethod::BruteForce: return "brute-force";
    case EstimateMethod::MinCut: return "min-cut";
    case EstimateMethod::Eigen: return "eigen";
    case EstimateMethod::Descent: return "descent";
  }
  return "?";
}

std::string_view to_string(Trend t) {
  return t == Trend::Decreasing ? "decreasing" : "bounded-below";
}

// --- Cheeger -----------------------------------------------------------------

namespace {

constexpr std::size_t kBruteForceLimit = 20;
constexpr std::size_t kBruteForceReplace = 16;

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

// Laplacian restricted to `keep` (reindexed), full degrees on the diagonal.
SpMat restrictedLaplacian(const Graph& g, const std::vector<std::uint32_t>& keep) {
  std::vector<std::int64_t> pos(g.vertexCount(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<std::int64_t>(i);
  std::vector<Eigen::Triplet<double>> t;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    t.emplace_back(i, i, static_cast<double>(g.degree(keep[i])));
    for (auto w : g.adjacency()[keep[i]]) {
      if (pos[w] >= 0) t.emplace_back(i, pos[w], -1.0);
    }
  }
  SpMat m(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(keep.size()));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

struct EigenPair {
  double value = 0.0;
  double residual = 0.0;
  Vec vector;
};

// Fiedler pair by inverse iteration on the complement of constants: vertex 0
// is grounded to make the solve non-singular, then the mean is removed.
EigenPair fiedler(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::uint32_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1U);
  const SpMat full = restrictedLaplacian(g, [&] {
    std::vector<std::uint32_t> all(n);
    std::iota(all.begin(), all.end(), 0U);
    return all;
  }());
  Eigen::SimplicialLDLT<SpMat> solver(restrictedLaplacian(g, rest));
  if (solver.info() != Eigen::Success) fail(ErrorCode::Internal, "grounded Laplacian factorization failed");
  Vec x(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) x[static_cast<Eigen::Index>(i)] = static_cast<double>(i);
  EigenPair out;
  for (int it = 0; it < 3000; ++it) {
    x.array() -= x.mean();
    x.normalize();
    const Vec lx = full * x;
    out.value = x.dot(lx);
    out.residual = (lx - out.value * x).norm();
    out.vector = x;
    if (out.residual <= 1e-11 * std::max(1.0, out.value)) break;
    Vec y = Vec::Zero(static_cast<Eigen::Index>(n));
    y.tail(static_cast<Eigen::Index>(n - 1)) = solver.solve(x.tail(static_cast<Eigen::Index>(n - 1)));
    x = y;
  }
  return out;
}

double bestSweep(const Graph& g, const Vec& f) {
  const std::size_t n = g.vertexCount();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return f[a] < f[b]; });
  std::vector<bool> in(n, false);
  std::int64_t boundary = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < n; ++k) {
    const auto v = order[k - 1];
    std::int64_t inside = 0;
    for (auto w : g.adjacency()[v]) inside += in[w] ? 1 : 0;
    boundary += static_cast<std::int64_t>(g.degree(v)) - 2 * inside;
    in[v] = true;
    const double vol = static_cast<double>(std::min(k, n - k));
    best = std::min(best, static_cast<double>(boundary) / vol);
  }
  return best;
}

}  // namespace

double bruteForceCheeger(const Graph& g) {
  const std::size_t n = g.vertexCount();
  if (n < 2 || n > kBruteForceLimit) fail(ErrorCode::InvalidArgument, "brute force needs 2..20 vertices");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (2 * size > n) continue;
    std::int64_t cut = 0;
    for (const auto& [a, b] : g.edges()) cut += ((mask >> a) ^ (mask >> b)) & 1U;
    best = std::min(best, static_cast<double>(cut) / static_cast<double>(size));
  }
  return best;
}

CheegerReport cheegerEstimate(const Graph& g) {
  if (g.vertexCount() < 2) fail(ErrorCode::InvalidArgument, "Cheeger constant needs >= 2 vertices");
  if (!g.isConnected()) fail(ErrorCode::Disconnected, "Cheeger estimate requires a connected graph");
  CheegerReport r;
  const EigenPair f = fiedler(g);
  r.lambda2 = f.value;
  r.lambda2Lower = std::max(0.0, f.value - f.residual);
  r.sandwichLower = r.lambda2Lower / 2.0;
  r.sandwichUpper = std::sqrt(2.0 * static_cast<double>(g.maxDegree()) * r.lambda2);
  r.sweepUpper = bestSweep(g, f.vector);
  if (g.vertexCount() <= kBruteForceReplace) {
    r.bruteForce = bruteForceCheeger(g);
    r.estimate = {*r.bruteForce, *r.bruteForce, EstimateMethod::BruteForce};
  } else if (r.sweepUpper < r.sandwichUpper) {
    r.estimate = {r.sandwichLower, r.sweepUpper, EstimateMethod::SweepCut};
  } else {
    r.estimate = {r.sandwichLower, r.sandwichUpper, EstimateMethod::SpectralSandwich};
  }
  return r;
}

// --- Dirichlet cut -----------------------------------------------------------

namespace {

std::vector<std::uint32_t> interiorVertices(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < g.vertexCount(); ++v) {
    if (!g.boundary()[v]) out.push_back(v);
  }
  if (out.empty()) fail(ErrorCode::EmptyInterior, "every vertex is on the boundary");
  return out;
}

std::int64_t leavingEdges(const Graph& g, const std::vector<bool>& in) {
  std::int64_t cut = 0;
  for (const auto& [a, b] : g.edges()) cut += in[a] != in[b] ? 1 : 0;
  return cut;
}

// Dinic max-flow on a small integer network.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : head_(n, -1), level_(n), it_(n) {}

  void addEdge(std::size_t u, std::size_t v, std::int64_t cap, std::int64_t reverseCap = 0) {
    arcs_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<std::int64_t>(arcs_.size()) - 1;
    arcs_.push_back({u, reverseCap, head_[v]});
    head_[v] = static_cast<std::int64_t>(arcs_.size()) - 1;
  }

  void maxFlow(std::size_t s, std::size_t t) {
    while (bfs(s, t)) {
      it_ = head_;
      while (dfs(s, t, std::numeric_limits<std::int64_t>::max()) > 0) {
      }
    }
  }

  // Source side of the minimum cut (smallest such set).
  std::vector<bool> reachable(std::size_t s) {
    bfs(s, s);
    std::vector<bool> out(head_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = level_[i] >= 0;
    return out;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<std::size_t> q{s};
    level_[s] = 0;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (auto e = head_[u]; e >= 0; e = arcs_[static_cast<std::size_t>(e)].next) {
        const Arc& a = arcs_[static_cast<std::size_t>(e)];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0 && s != t;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t pushed) {
    if (u == t) return pushed;
    for (auto& e = it_[u]; e >= 0; e = arcs_[static_cast<std::size_t>(e)].next) {
      Arc& a = arcs_[static_cast<std::size_t>(e)];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      const std::int64_t got = dfs(a.to, t, std::min(pushed, a.cap));
      if (got > 0) {
        a.cap -= got;
        arcs_[static_cast<std::size_t>(e) ^ 1U].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::int64_t> head_;
  std::vector<std::int64_t> level_;
  std::vector<std::int64_t> it_;
};

}  // namespace

DirichletCut dirichletCheeger(const Graph& g) {
  const auto interior = interiorVertices(g);
  const std::size_t m = interior.size();
  std::vector<std::int64_t> pos(g.vertexCount(), -1);
  for (std::size_t i = 0; i < m; ++i) pos[interior[i]] = static_cast<std::int64_t>(i);

  DirichletCut best;
  best.set = interior;
  best.volume = static_cast<std::int64_t>(m);
  best.boundaryEdges = leavingEdges(g, [&] {
    std::vector<bool> in(g.vertexCount(), false);
    for (auto v : interior) in[v] = true;
    return in;
  }());

  // Minimize volume * |dS| - boundaryEdges * |S| until no set beats the ratio.
  while (true) {
    const std::int64_t num = best.boundaryEdges;
    const std::int64_t den = best.volume;
    const std::size_t s = m;
    const std::size_t t = m + 1;
    FlowNetwork net(m + 2);
    for (std::size_t i = 0; i < m; ++i) net.addEdge(s, i, num);
    for (const auto& [a, b] : g.edges()) {
      const auto pa = pos[a];
      const auto pb = pos[b];
      if (pa >= 0 && pb >= 0) {
        net.addEdge(static_cast<std::size_t>(pa), static_cast<std::size_t>(pb), den, den);
      } else if (pa >= 0) {
        net.addEdge(static_cast<std::size_t>(pa), t, den);
      } else if (pb >= 0) {
        net.addEdge(static_cast<std::size_t>(pb), t, den);
      }
    }
    net.maxFlow(s, t);
    const auto side = net.reachable(s);
    std::vector<bool> in(g.vertexCount(), false);
    std::vector<std::uint32_t> set;
    for (std::size_t i = 0; i < m; ++i) {
      if (side[i]) {
        in[interior[i]] = true;
        set.push_back(interior[i]);
      }
    }
    if (set.empty()) break;
    const std::int64_t cut = leavingEdges(g, in);
    const auto vol = static_cast<std::int64_t>(set.size());
    if (den * cut - num * vol >= 0) break;
    best = DirichletCut{cut, vol, std::move(set)};
  }
  return best;
}

DirichletCut bruteForceDirichletCheeger(const Graph& g) {
  const auto interior = interiorVertices(g);
  const std::size_t m = interior.size();
  if (m > kBruteForceLimit) fail(ErrorCode::InvalidArgument, "brute force needs <= 20 interior vertices");
  DirichletCut best;
  bool have = false;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::vector<bool> in(g.vertexCount(), false);
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) in[interior[i]] = true;
    }
    const std::int64_t cut = leavingEdges(g, in);
    const auto vol = static_cast<std::int64_t>(std::popcount(mask));
    if (!have || cut * best.volume < best.boundaryEdges * vol) {
      have = true;
      best.boundaryEdges = cut;
      best.volume = vol;
      best.set.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) best.set.push_back(interior[i]);
      }
    }
  }
  return best;
}

// --- Sobolev constants -------------------------------------------------------

namespace {

EigenPair dirichletPair(const Graph& g) {
  const auto interior = interiorVertices(g);
  const SpMat l = restrictedLaplacian(g, interior);
  Eigen::SimplicialLDLT<SpMat> solver(l);
  EigenPair out;
  if (solver.info() != Eigen::Success) return out;  // singular: no boundary in reach
  Vec x = Vec::Ones(l.rows());
  for (int it = 0; it < 3000; ++it) {
    x.normalize();
    const Vec lx = l * x;
    out.value = x.dot(lx);
    out.residual = (lx - out.value * x).norm();
    out.vector = x;
    if (out.residual <= 1e-13 * std::max(1.0, out.value)) break;
    x = solver.solve(x);
    if (solver.info() != Eigen::Success) break;
  }
  return out;
}

double normP(const std::vector<double>& u, double p) {
  double s = 0.0;
  for (double x : u) s += std::pow(std::abs(x), p);
  return s;
}

double gradP(const Graph& g, const std::vector<double>& u, double p) {
  double s = 0.0;
  for (const auto& [a, b] : g.edges()) s += std::pow(std::abs(u[a] - u[b]), p);
  return s;
}

// Interior vertex farthest from the boundary, smallest index on ties.
std::uint32_t centerVertex(const Graph& g) {
  const std::size_t n = g.vertexCount();
  std::vector<std::int64_t> dist(n, -1);
  std::deque<std::uint32_t> q;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (g.boundary()[v]) {
      dist[v] = 0;
      q.push_back(v);
    }
  }
  while (!q.empty()) {
    const auto v = q.front();
    q.pop_front();
    for (auto w : g.adjacency()[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  std::uint32_t best = 0;
  std::int64_t bestDist = -2;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (g.boundary()[v]) continue;
    const std::int64_t d = dist[v] < 0 ? std::numeric_limits<std::int64_t>::max() : dist[v];
    if (d > bestDist) {
      bestDist = d;
      best = v;
    }
  }
  return best;
}

}  // namespace

double dirichletEigenvalue(const Graph& g) { return dirichletPair(g).value; }

double descentSobolev(const Graph& g, double p, const SobolevOptions& options) {
  if (!(p >= 1.0)) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  interiorVertices(g);
  const std::size_t n = g.vertexCount();
  const auto& bd = g.boundary();
  std::vector<double> u(n, 0.0);
  const auto c = centerVertex(g);
  u[c] = 1.0;
  for (auto w : g.adjacency()[c]) {
    if (!bd[w]) u[w] = 0.5;
  }
  auto quotient = [&](const std::vector<double>& x) { return gradP(g, x, p) / normP(x, p); };
  auto normalize = [&](std::vector<double>& x) {
    const double s = std::pow(normP(x, p), 1.0 / p);
    for (double& v : x) v /= s;
  };
  auto sgnPow = [p](double x) { return x == 0.0 ? 0.0 : std::copysign(std::pow(std::abs(x), p - 1.0), x); };

  normalize(u);
  double r = quotient(u);
  double step = 0.5;
  std::vector<double> grad(n);
  std::vector<double> trial(n);
  for (int it = 0; it < options.maxIterations; ++it) {
    // With ||u||_p = 1: grad R = p (sum_e |du|^{p-2} du - R |u|^{p-2} u).
    std::fill(grad.begin(), grad.end(), 0.0);
    for (const auto& [a, b] : g.edges()) {
      const double d = sgnPow(u[a] - u[b]);
      grad[a] += d;
      grad[b] -= d;
    }
    double gn = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      grad[v] = bd[v] ? 0.0 : p * (grad[v] - r * sgnPow(u[v]));
      gn += grad[v] * grad[v];
    }
    gn = std::sqrt(gn);
    if (gn == 0.0) break;
    bool improved = false;
    double next = r;
    for (int halving = 0; halving < 40; ++halving) {
      for (std::size_t v = 0; v < n; ++v) trial[v] = u[v] - step * grad[v] / gn;
      next = quotient(trial);
      if (next < r) {
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
    u = trial;
    normalize(u);
    const double rel = (r - next) / r;
    r = next;
    step *= 2.0;
    if (rel < options.relativeStop) break;
  }
  return std::pow(r, 1.0 / p);
}

ConstantEstimate sobolevPConstant(const Graph& g, double p, const SobolevOptions& options) {
  if (!(p >= 1.0)) fail(ErrorCode::InvalidArgument, "p must be >= 1");
  const DirichletCut cut = dirichletCheeger(g);
  const double h = cut.value();
  if (p == 1.0) return {h, h, EstimateMethod::MinCut};
  if (p == 2.0) {
    const EigenPair e = dirichletPair(g);
    return {std::sqrt(std::max(0.0, e.value - e.residual)), std::sqrt(e.value), EstimateMethod::Eigen};
  }
  // Indicator of the optimal cut set is a competitor: R_p(1_S) = |dS| / |S|.
  const double upper = std::min(descentSobolev(g, p, options), std::pow(h, 1.0 / p));
  // Hoelder on u^p against the p = 1 inequality.
  std::size_t dmax = 0;
  for (std::uint32_t v = 0; v < g.vertexCount(); ++v) {
    if (!g.boundary()[v]) dmax = std::max(dmax, g.degree(v));
  }
  const double q = p / (p - 1.0);
  const double lower = h / (p * std::pow(std::pow(2.0, q - 1.0) * static_cast<double>(dmax), 1.0 / q));
  return {std::min(lower, upper), upper, EstimateMethod::Descent};
}

DichotomyScan dichotomyScan(const BallModel& model, const std::vector<int>& radii, double p) {
  if (radii.empty()) fail(ErrorCode::InvalidArgument, "no radii given");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= radii[i - 1]) fail(ErrorCode::InvalidArgument, "radii must be strictly increasing");
  }
  DichotomyScan scan;
  scan.model = model.name();
  scan.p = p;
  for (int r : radii) {
    const Graph g = generateBall(model, r);
    ScanRow row;
    row.radius = r;
    row.vertices = g.vertexCount();
    row.edges = g.edges().size();
    row.interior = g.interiorCount();
    row.cheeger = cheegerEstimate(g);
    row.sobolev = sobolevPConstant(g, p);
    scan.rows.push_back(std::move(row));
  }
  scan.monotoneDecreasing = true;
  scan.minLowerBound = scan.rows.front().sobolev.lowerBound;
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    if (scan.rows[i].sobolev.upperBound > scan.rows[i - 1].sobolev.upperBound) scan.monotoneDecreasing = false;
    scan.minLowerBound = std::min(scan.minLowerBound, scan.rows[i].sobolev.lowerBound);
  }
  scan.decayRatio = scan.rows.front().sobolev.upperBound / scan.rows.back().sobolev.upperBound;
  scan.trend = scan.monotoneDecreasing && scan.decayRatio >= 2.0 ? Trend::Decreasing : Trend::BoundedBelow;
  return scan;
}

}  // namespace lpcoh
