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
#include <vector>

#include "lpcoh/lie_algebra.hpp"
#include "lpcoh/rational.hpp"

namespace lpcoh {

/// Diagonal Heintze group N ⋊ R with N = R^d abelian and derivation
/// diag(weights). Coordinates (x, t); left-invariant metric
/// dt^2 + sum_i e^{2 w_i t} dx_i^2 and volume e^{tau t} dx dt, tau = sum w_i.
/// Right translation by exp(s xi0) is (x, t) -> (x, t + s).
class HeintzeModel {
 public:
  /// Weights are sorted ascending; throws InvalidModel unless all are > 0.
  explicit HeintzeModel(std::vector<Rational> weights);

  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t fiberDim() const { return weights_.size(); }
  Rational tau() const;
  /// tau / smallest weight.
  Rational criticalExponent() const;
  /// The Lie algebra with basis x_1..x_d, xi0 and [xi0, x_i] = w_i x_i.
  LieAlgebra toAlgebra() const;
  std::vector<double> weightsAsDouble() const;

 private:
  std::vector<Rational> weights_;
};

enum class Convergence { Convergent, Divergent };
std::string_view to_string(Convergence c);

struct RateAnalysis {
  Convergence verdict;
  /// t -> +inf exponential rate of term i of |du|^p dvol: tau - p w_i.
  std::vector<Rational> rates;
  /// Largest rate, tau - p w_1.
  Rational dominantRate;
};

/// Exact rate bookkeeping for the test function u = chi(t) ubar(x).
/// The chi' term lives on a compact t-interval and never contributes a tail.
/// A zero dominant rate integrates a non-decaying term over a half-line and
/// is reported as Divergent. Throws InvalidArgument unless p > 0.
RateAnalysis rateAnalysis(const HeintzeModel& model, const Rational& p);

/// Polynomial bump a * prod_i (1 - ((x_i - c_i)/r)^2)^k on the box |x_i - c_i| < r.
struct Bump {
  std::vector<double> center;
  double radius = 1.0;
  int order = 4;
  double amplitude = 1.0;

  double value(const std::vector<double>& x) const;
  /// Partial derivative along coordinate i.
  double partial(const std::vector<double>& x, std::size_t i) const;
};

/// Quintic smoothstep: 0 for t <= start, 1 for t >= end.
struct SmoothStep {
  double start = 0.0;
  double end = 1.0;

  double value(double t) const;
  double derivative(double t) const;
  double width() const { return end - start; }
};

/// u(x, t) = chi(t) * ubar(x).
struct TestFunction {
  Bump bump;
  SmoothStep step;

  /// Centered unit bump on R^d with the default step on [0, 1].
  static TestFunction standard(std::size_t fiberDim);
};

/// Nodes and weights of composite 4-point Gauss-Legendre on [a, b] with
/// `nodes` points (rounded up to a multiple of 4).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  static QuadratureRule compositeGauss(double a, double b, std::size_t nodes);
};

/// ||du||_p^p restricted to t in [-T, T]; gradient measured in the
/// left-invariant metric. The t-axis is split at the step's ends, and each
/// segment of length step.width() gets `resolution` nodes; each fiber axis gets
/// `resolution` nodes over the bump's support.
/// Throws InvalidCutoff unless -T < step.start and T > step.end, and
/// InvalidArgument for resolution < 16 or p <= 0.
double quadratureNorm(const HeintzeModel& model, const TestFunction& fn, double p,
                      double cutoff, std::size_t resolution);

struct ThresholdCheck {
  Rational p;
  RateAnalysis rates;
  double cutoff = 0.0;
  double normAtCutoff = 0.0;        // Q(T)
  double normAtDoubleCutoff = 0.0;  // Q(2T)
  double growthRatio = 0.0;         // Q(2T) / Q(T)
  double measuredRate = 0.0;        // ln(Q(2T)/Q(T)) / T
  double predictedRate = 0.0;       // tau - p w_1
  /// Convergent: Q(T) and Q(2T) agree within 1%.
  /// Divergent, rate > 0: growth ratio > e^{rate T / 2} and measured rate
  /// within 10% of the prediction.
  /// Divergent, rate 0: growth ratio > 1 and |measured rate| <= w_1 / 10.
  bool numericsAgree = false;
};

struct ThresholdOptions {
  std::optional<double> cutoff;  // default: 10 * step width
  std::size_t resolution = 64;
};

ThresholdCheck verifyThreshold(const HeintzeModel& model, const Rational& p,
                               const ThresholdOptions& options = {});

/// Compactly supported f(x, t) = ubar(x) * psi(t), psi a polynomial bump.
struct FlowTestFunction {
  Bump fiber;
  double center = 0.0;
  double radius = 1.0;
  int order = 4;

  double psi(double t) const;
  double psiDerivative(double t) const;
  static FlowTestFunction standard(std::size_t fiberDim);
};

struct FlowWindow {
  double lo;
  double hi;
};

struct FlowDecayResult {
  double translatedNorm;  // ||(xi0 f) o phi_t||_p
  double predictedNorm;   // e^{-t tau / p} ||xi0 f||_p
  double relativeError;
};

/// Both norms use the same tensor grid on (fiber support) x window.
/// Default window: hull of the supports of xi0 f and its translate, padded
/// by (sqrt 5 - 1)/2 times the bump radius. Throws SupportEscapesWindow if a
/// given window does not contain both supports.
FlowDecayResult flowDecayCheck(const HeintzeModel& model, const FlowTestFunction& fn, double p,
                               double t, std::size_t resolution,
                               std::optional<FlowWindow> window = std::nullopt);

}  // namespace lpcoh
