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

// Acceptance driver: one PASS/FAIL line per criterion.
//   lpcoh_acceptance               run everything
//   lpcoh_acceptance --criterion N run one criterion
// Exit status is 0 iff every selected criterion passes.

#include <CLI11.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpcoh/cli/catalog.hpp"
#include "lpcoh/cli/report.hpp"
#include "lpcoh/error.hpp"
#include "lpcoh/lpcoh.hpp"

namespace {

using namespace lpcoh;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const Rational& r) { return toString(r); }

std::string str(const std::optional<RationalInterval>& e) {
  if (!e) return "none";
  if (e->isPoint()) return str(e->lo);
  return "[" + str(e->lo) + ", " + str(e->hi) + "]";
}

bool isPointAt(const std::optional<RationalInterval>& e, const Rational& v) {
  return e && e->isPoint() && e->lo == v;
}

// Small random rationals p/q, |p| <= span, 1 <= q <= 3.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  Rational draw(int span = 3) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 3);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  Rational positive() {
    std::uniform_int_distribution<int> num(1, 5);
    std::uniform_int_distribution<int> den(1, 3);
    Rational r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  RatMatrix invertible(std::size_t n) {
    for (;;) {
      RatMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = draw(2);
      if (m.determinant() != 0) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------

Outcome catalogRegression() {
  Outcome o;
  const auto start = Clock::now();
  const auto& entries = cli::catalog();
  std::size_t mismatches = 0;
  for (const auto& e : entries) {
    const Classification c = classify(e.algebra);
    bool ok = c.verdict == e.expected;
    if (e.expectedExponent) ok = ok && isPointAt(c.exponent, *e.expectedExponent);
    if (!ok) {
      ++mismatches;
      o.require(false, e.name + ": " + std::string(to_string(c.verdict)) + " " + str(c.exponent));
    }
  }
  const double secs = secondsSince(start);
  o.require(entries.size() >= 12, "catalog too small");
  o.require(secs < 5.0, "runtime");
  o.detail << " entries=" << entries.size() << " mismatches=" << mismatches << " seconds=" << secs;
  return o;
}

Outcome exactExponents() {
  Outcome o;
  struct Case {
    std::string name;
    LieAlgebra algebra;
    Rational expected;
  };
  std::vector<Case> cases;
  cases.push_back({"aff", models::aff(), 1});
  for (long n = 2; n <= 5; ++n) cases.push_back({"rh" + std::to_string(n), models::realHyperbolic(n), n - 1});
  for (long k = 1; k <= 3; ++k) cases.push_back({"ch" + std::to_string(k), models::complexHyperbolic(k), 2 * k});
  for (const auto& c : cases) {
    const Classification r = classify(c.algebra);
    const bool ok = r.verdict == Verdict::Heintze && isPointAt(r.exponent, c.expected);
    o.require(ok, c.name + ": got " + str(r.exponent) + ", expected " + str(c.expected));
  }
  o.detail << " cases=" << cases.size();
  return o;
}

// Every 2-dimensional non-abelian algebra is aff(R): with y spanning the
// derived algebra and [x, y] = c y, the basis (y, x / c) has the constants of
// aff. Returns true iff such a basis reproduces models::aff() exactly.
bool affWitness(const LieAlgebra& g) {
  if (g.dim() != 2) return false;
  const RatVector y = g.bracket(unitVector(2, 0), unitVector(2, 1));
  if (isZero(y)) return false;
  for (std::size_t i = 0; i < 2; ++i) {
    const RatVector x = unitVector(2, i);
    const RatVector xy = g.bracket(x, y);
    // xy = c y
    std::size_t pivot = y[0] != 0 ? 0 : 1;
    const Rational c = xy[pivot] / y[pivot];
    if (c == 0) continue;
    RatMatrix p(2, 2);
    p(0, 0) = y[0];
    p(1, 0) = y[1];
    p(0, 1) = x[0] / c;
    p(1, 1) = x[1] / c;
    if (p.determinant() == 0) continue;
    if (changeBasis(g, p) == models::aff()) return true;
  }
  return false;
}

Outcome hyperbolicPlaneUniqueness() {
  Outcome o;
  std::size_t yes = 0;
  for (const auto& e : cli::catalog()) {
    const Answer a = harmonicL2Query(e.algebra);
    const bool isAff = affWitness(e.algebra);
    o.require(a != Answer::Indeterminate, e.name + ": indeterminate");
    if (a == Answer::Yes) {
      ++yes;
      o.require(isAff, e.name + ": harmonic L2 functions but not isomorphic to aff");
    }
    if (e.expected == Verdict::Heintze && !isAff) {
      const Classification c = classify(e.algebra);
      o.require(c.exponent && c.exponent->lo >= 2, e.name + ": exponent " + str(c.exponent) + " < 2");
    }
  }
  o.require(yes >= 1, "aff itself not detected");
  o.detail << " yes=" << yes;
  return o;
}

Outcome thresholdVerification() {
  Outcome o;
  const auto start = Clock::now();
  const HeintzeModel model({1, 2});
  o.require(model.criticalExponent() == 3, "critical exponent");
  const std::vector<std::pair<Rational, Convergence>> cases = {
      {2, Convergence::Divergent},
      {Rational(5, 2), Convergence::Divergent},
      {3, Convergence::Divergent},
      {Rational(7, 2), Convergence::Convergent},
      {4, Convergence::Convergent}};
  for (const auto& [p, expected] : cases) {
    const ThresholdCheck c = verifyThreshold(model, p);
    o.require(c.rates.verdict == expected, "p=" + str(p) + ": rate verdict");
    o.require(c.numericsAgree, "p=" + str(p) + ": quadrature disagrees (ratio " +
                                   std::to_string(c.growthRatio) + ", rate " +
                                   std::to_string(c.measuredRate) + ")");
  }
  const double secs = secondsSince(start);
  o.require(secs < 30.0, "runtime");
  o.detail << " seconds=" << secs;
  return o;
}

Outcome flowDecay() {
  Outcome o;
  const HeintzeModel model({1, 2});
  const auto fn = FlowTestFunction::standard(2);
  double worst = 0.0;
  for (double p : {2.0, 3.0}) {
    for (double t : {0.5, 1.0}) {
      double previous = INFINITY;
      for (std::size_t res : {16u, 32u, 64u, 128u}) {
        const double err = flowDecayCheck(model, fn, p, t, res).relativeError;
        o.require(err < previous, "p=" + std::to_string(p) + " t=" + std::to_string(t) +
                                      ": error not decreasing at resolution " + std::to_string(res));
        previous = err;
      }
      o.require(previous < 1e-3, "p=" + std::to_string(p) + " t=" + std::to_string(t) + ": error " +
                                     std::to_string(previous));
      worst = std::max(worst, previous);
    }
  }
  o.detail << " worstAt128=" << worst;
  return o;
}

Outcome invariance() {
  Outcome o;
  RationalSource rng(20241018);
  const std::array<std::string, 5> names = {"aff", "ch2", "spiral", "heisenberg", "mixed-sign"};
  std::size_t basisChanges = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& e = cli::catalogEntry(names[static_cast<std::size_t>(trial) % names.size()]);
    const Classification ref = classify(e.algebra);
    const LieAlgebra moved = changeBasis(e.algebra, rng.invertible(e.algebra.dim()));
    const Classification c = classify(moved);
    ++basisChanges;
    o.require(c.verdict == ref.verdict && c.exponent == ref.exponent,
              e.name + " trial " + std::to_string(trial) + ": " + std::string(to_string(c.verdict)) +
                  " " + str(c.exponent));
  }

  // Direction changes need tau != 0.
  const std::array<std::string, 5> nonUnimodular = {"aff", "rh4", "ch2", "jordan", "mixed-sign"};
  std::size_t directions = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& e = cli::catalogEntry(nonUnimodular[static_cast<std::size_t>(trial) % nonUnimodular.size()]);
    const Classification ref = classify(e.algebra);
    const RatVector xi0 = defaultDirection(e.algebra);
    const Rational c = rng.positive();
    RatVector dir(xi0.size(), Rational(0));
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = c * xi0[i];
    for (const auto& b : kernelOfTau(e.algebra).basis()) {
      const Rational s = rng.draw();
      for (std::size_t i = 0; i < dir.size(); ++i) dir[i] += s * b[i];
    }
    const Classification r = classifyWithDirection(e.algebra, dir);
    ++directions;
    o.require(r.verdict == ref.verdict && r.exponent == ref.exponent,
              e.name + " direction trial " + std::to_string(trial) + ": " +
                  std::string(to_string(r.verdict)) + " " + str(r.exponent));
  }
  o.detail << " basisChanges=" << basisChanges << " directions=" << directions;
  return o;
}

Outcome spectralOracle() {
  Outcome o;
  RationalSource rng(7);
  std::size_t withInterval = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = rng.integer(1, 6);
    RatPolynomial p = RatPolynomial::constant(rng.positive() * (trial % 2 == 0 ? 1 : -1));
    SignTally expected;
    Rational sum = 0;
    std::optional<Rational> minRe;
    int placed = 0;
    while (placed < degree) {
      // Mostly nonzero real parts, some on the axis, some repeated.
      Rational re = rng.draw();
      if (trial % 3 == 0 && re < 0) re = -re;  // bias towards all-positive cases
      const bool pair = placed + 2 <= degree && rng.integer(0, 1) == 1;
      const int mult = pair ? 2 : 1;
      if (pair) {
        Rational im = rng.positive();
        p = p * RatPolynomial{re * re + im * im, -2 * re, Rational(1)};
      } else {
        p = p * RatPolynomial::linear(re);
      }
      const int s = sign(re);
      (s > 0 ? expected.positive : s == 0 ? expected.zero : expected.negative) += static_cast<std::size_t>(mult);
      sum += mult * re;
      if (!minRe || re < *minRe) minRe = re;
      placed += mult;
    }
    const RealPartReport r = realPartReport(p);
    const SignTally got{r.countPositive, r.countZero, r.countNegative};
    o.require(got == expected, "trial " + std::to_string(trial) + ": sign tally");
    o.require(r.sumRealParts == sum, "trial " + std::to_string(trial) + ": sum of real parts");
    o.require(r.sumRealParts == -p.coeff(static_cast<std::size_t>(degree - 1)) / p.leading(),
              "trial " + std::to_string(trial) + ": second coefficient");
    if (expected.positive == static_cast<std::size_t>(degree)) {
      ++withInterval;
      const bool contains = r.minPositiveRealPart &&
                            (r.minPositiveRealPart->isPoint() ? r.minPositiveRealPart->lo == *minRe
                                                              : r.minPositiveRealPart->contains(*minRe));
      o.require(contains, "trial " + std::to_string(trial) + ": min real part " +
                              str(r.minPositiveRealPart) + " vs " + str(*minRe));
    } else {
      o.require(!r.minPositiveRealPart, "trial " + std::to_string(trial) + ": spurious interval");
    }
  }
  o.detail << " polynomials=200 allPositive=" << withInterval;
  return o;
}

Outcome isoperimetryDichotomy() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<int> radii = {2, 3, 4, 5, 6};
  std::size_t checked = 0;
  auto sandwich = [&](const CheegerReport& c, const std::string& label) {
    if (!c.bruteForce) return;
    ++checked;
    o.require(c.sandwichLower <= *c.bruteForce + 1e-12 && *c.bruteForce <= c.sandwichUpper + 1e-12,
              label + ": brute force " + std::to_string(*c.bruteForce) + " outside [" +
                  std::to_string(c.sandwichLower) + ", " + std::to_string(c.sandwichUpper) + "]");
  };

  for (const auto& model : {BallModel::grid(2), BallModel::parse("sol")}) {
    const DichotomyScan s = dichotomyScan(model, radii, 1.0);
    const double first = s.rows.front().sobolev.upperBound;
    const double last = s.rows.back().sobolev.upperBound;
    o.require(s.monotoneDecreasing, s.model + ": not decreasing");
    o.require(first >= 2.0 * last, s.model + ": decay " + std::to_string(first / last));
    o.detail << " " << s.model << "=" << first << "->" << last;
    for (const auto& row : s.rows) sandwich(row.cheeger, s.model + " r=" + std::to_string(row.radius));
  }
  const DichotomyScan tree = dichotomyScan(BallModel::tree(3), radii, 1.0);
  o.require(tree.minLowerBound >= 0.2, "tree3 lower bound " + std::to_string(tree.minLowerBound));
  o.detail << " tree3.min=" << tree.minLowerBound;
  for (const auto& row : tree.rows) sandwich(row.cheeger, "tree3 r=" + std::to_string(row.radius));

  // Every small ball the generators produce.
  for (const std::string name : {"grid1", "grid2", "grid3", "sol", "heisenberg", "tree3", "tree4"}) {
    for (int r = 1;; ++r) {
      const Graph g = generateBall(BallModel::parse(name), r);
      if (g.vertexCount() > 16) break;
      sandwich(cheegerEstimate(g), name + " r=" + std::to_string(r));
    }
  }
  const double secs = secondsSince(start);
  o.require(checked >= 10, "too few small graphs");
  o.require(secs < 60.0, "runtime");
  o.detail << " bruteForceGraphs=" << checked << " seconds=" << secs;
  return o;
}

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  return out;
}

// All reports the tool and the library produce, concatenated.
std::string fullReportRun() {
  std::string all;
  for (const auto& e : cli::catalog()) {
    all += cli::toJson(cli::makeReport(cli::toAlgebraFile(e), defaultTolerance(), classify(e.algebra)));
  }
  const std::string tool = LPCOH_TOOL_PATH;
  const std::string data = LPCOH_DATA_DIR;
  for (const auto& e : cli::catalog()) {
    all += capture(tool + " classify --format json " + data + "/algebras/" + e.name + ".json");
    all += capture(tool + " classify --format text " + data + "/algebras/" + e.name + ".json");
  }
  all += capture(tool + " catalog --format json --check");
  all += capture(tool + " verify-threshold --weights 1,2 --scan 2:4:1/2");
  all += capture(tool + " cheeger --model grid2 --radii 2,3,4");
  all += capture(tool + " cheeger --model tree3 --radii 2,3 --p 2");
  return all;
}

Outcome determinism() {
  Outcome o;
  const std::string first = fullReportRun();
  const std::string second = fullReportRun();
  o.require(!first.empty(), "empty output");
  o.require(first == second, "runs differ");
  o.detail << " bytes=" << first.size();
  return o;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpcoh acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "catalog regression", catalogRegression},
      {2, "exact critical exponents", exactExponents},
      {3, "hyperbolic plane uniqueness", hyperbolicPlaneUniqueness},
      {4, "threshold verification", thresholdVerification},
      {5, "flow decay identity", flowDecay},
      {6, "invariance suite", invariance},
      {7, "spectral oracle", spectralOracle},
      {8, "isoperimetry dichotomy", isoperimetryDichotomy},
      {9, "determinism", determinism},
  };

  bool allPass = true;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail << " [exception: " << ex.what() << "]";
    }
    allPass = allPass && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "):"
              << o.detail.str() << "\n";
  }
  return allPass ? 0 : 1;
}
