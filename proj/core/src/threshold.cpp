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

#include "lpcoh/threshold.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lpcoh/error.hpp"

namespace lpcoh {

HeintzeModel::HeintzeModel(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) fail(ErrorCode::InvalidModel, "a Heintze model needs at least one weight");
  for (const auto& w : weights_) {
    if (w <= 0) fail(ErrorCode::InvalidModel, "weights must be positive, got " + toString(w));
  }
  std::sort(weights_.begin(), weights_.end());
}

Rational HeintzeModel::tau() const {
  Rational s = 0;
  for (const auto& w : weights_) s += w;
  return s;
}

Rational HeintzeModel::criticalExponent() const { return tau() / weights_.front(); }

LieAlgebra HeintzeModel::toAlgebra() const {
  const std::size_t d = weights_.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("xi0");
  LieAlgebra g(d + 1, std::move(names));
  for (std::size_t i = 0; i < d; ++i) g.setBracket(d, i, i, weights_[i]);
  return g;
}

std::vector<double> HeintzeModel::weightsAsDouble() const {
  std::vector<double> w;
  for (const auto& x : weights_) w.push_back(x.get_d());
  return w;
}

std::string_view to_string(Convergence c) {
  return c == Convergence::Convergent ? "Convergent" : "Divergent";
}

RateAnalysis rateAnalysis(const HeintzeModel& model, const Rational& p) {
  if (p <= 0) fail(ErrorCode::InvalidArgument, "p must be positive");
  RateAnalysis r;
  const Rational tau = model.tau();
  for (const auto& w : model.weights()) r.rates.push_back(tau - p * w);
  r.dominantRate = *std::max_element(r.rates.begin(), r.rates.end());
  r.verdict = r.dominantRate < 0 ? Convergence::Convergent : Convergence::Divergent;
  return r;
}

// --- test functions ----------------------------------------------------------

namespace {

double bumpProfile(double s, int k) {
  if (s <= -1.0 || s >= 1.0) return 0.0;
  return std::pow(1.0 - s * s, k);
}

double bumpProfileDerivative(double s, int k) {
  if (s <= -1.0 || s >= 1.0) return 0.0;
  return -2.0 * k * s * std::pow(1.0 - s * s, k - 1);
}

}  // namespace

double Bump::value(const std::vector<double>& x) const {
  double v = amplitude;
  for (std::size_t i = 0; i < center.size(); ++i) v *= bumpProfile((x[i] - center[i]) / radius, order);
  return v;
}

double Bump::partial(const std::vector<double>& x, std::size_t i) const {
  double v = amplitude * bumpProfileDerivative((x[i] - center[i]) / radius, order) / radius;
  for (std::size_t j = 0; j < center.size(); ++j) {
    if (j != i) v *= bumpProfile((x[j] - center[j]) / radius, order);
  }
  return v;
}

double SmoothStep::value(double t) const {
  if (t <= start) return 0.0;
  if (t >= end) return 1.0;
  const double s = (t - start) / (end - start);
  return s * s * s * (10.0 - 15.0 * s + 6.0 * s * s);
}

double SmoothStep::derivative(double t) const {
  if (t <= start || t >= end) return 0.0;
  const double s = (t - start) / (end - start);
  return 30.0 * s * s * (1.0 - s) * (1.0 - s) / (end - start);
}

TestFunction TestFunction::standard(std::size_t fiberDim) {
  return TestFunction{Bump{std::vector<double>(fiberDim, 0.0), 1.0, 4, 1.0}, SmoothStep{0.0, 1.0}};
}

double FlowTestFunction::psi(double t) const { return bumpProfile((t - center) / radius, order); }

double FlowTestFunction::psiDerivative(double t) const {
  return bumpProfileDerivative((t - center) / radius, order) / radius;
}

FlowTestFunction FlowTestFunction::standard(std::size_t fiberDim) {
  return FlowTestFunction{Bump{std::vector<double>(fiberDim, 0.0), 1.0, 4, 1.0}, 0.0, 1.0, 4};
}

// --- quadrature --------------------------------------------------------------

QuadratureRule QuadratureRule::compositeGauss(double a, double b, std::size_t nodes) {
  static constexpr std::array<double, 4> kX = {-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
  static constexpr std::array<double, 4> kW = {0.3478548451374538, 0.6521451548625461,
                                               0.6521451548625461, 0.3478548451374538};
  const std::size_t panels = std::max<std::size_t>(1, (nodes + 3) / 4);
  QuadratureRule q;
  q.nodes.reserve(panels * 4);
  q.weights.reserve(panels * 4);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t k = 0; k < panels; ++k) {
    const double mid = a + (static_cast<double>(k) + 0.5) * h;
    for (std::size_t j = 0; j < 4; ++j) {
      q.nodes.push_back(mid + 0.5 * h * kX[j]);
      q.weights.push_back(0.5 * h * kW[j]);
    }
  }
  return q;
}

namespace {

// Flattened tensor grid over the bump's support box.
struct FiberGrid {
  std::size_t dim = 0;
  std::vector<std::vector<double>> points;
  std::vector<double> weights;
};

FiberGrid fiberGrid(const Bump& bump, std::size_t resolution) {
  FiberGrid g;
  g.dim = bump.center.size();
  std::vector<QuadratureRule> axes;
  for (std::size_t i = 0; i < g.dim; ++i) {
    axes.push_back(QuadratureRule::compositeGauss(bump.center[i] - bump.radius,
                                                  bump.center[i] + bump.radius, resolution));
  }
  std::vector<std::size_t> idx(g.dim, 0);
  while (true) {
    std::vector<double> x(g.dim);
    double w = 1.0;
    for (std::size_t i = 0; i < g.dim; ++i) {
      x[i] = axes[i].nodes[idx[i]];
      w *= axes[i].weights[idx[i]];
    }
    g.points.push_back(std::move(x));
    g.weights.push_back(w);
    std::size_t i = 0;
    while (i < g.dim && ++idx[i] == axes[i].nodes.size()) idx[i++] = 0;
    if (i == g.dim) break;
  }
  return g;
}

void requireResolution(std::size_t resolution) {
  if (resolution < 16) fail(ErrorCode::InvalidArgument, "resolution must be >= 16 nodes per axis");
}

}  // namespace

double quadratureNorm(const HeintzeModel& model, const TestFunction& fn, double p, double cutoff,
                      std::size_t resolution) {
  requireResolution(resolution);
  if (!(p > 0)) fail(ErrorCode::InvalidArgument, "p must be positive");
  if (fn.bump.center.size() != model.fiberDim()) {
    fail(ErrorCode::DimensionMismatch, "bump dimension != fiber dimension");
  }
  const SmoothStep& step = fn.step;
  if (!(step.end > step.start)) fail(ErrorCode::InvalidArgument, "step interval is empty");
  if (!(cutoff > step.end) || !(-cutoff < step.start)) {
    fail(ErrorCode::InvalidCutoff, "cutoff must enclose the step transition interval");
  }
  const std::vector<double> w = model.weightsAsDouble();
  const double tau = model.tau().get_d();
  const std::size_t d = w.size();

  const FiberGrid grid = fiberGrid(fn.bump, resolution);
  const std::size_t nx = grid.points.size();
  std::vector<double> ubar2(nx);
  std::vector<double> grad2(nx * d);
  for (std::size_t j = 0; j < nx; ++j) {
    const double u = fn.bump.value(grid.points[j]);
    ubar2[j] = u * u;
    for (std::size_t i = 0; i < d; ++i) {
      const double g = fn.bump.partial(grid.points[j], i);
      grad2[j * d + i] = g * g;
    }
  }

  // chi vanishes below step.start, so [-T, step.start] contributes nothing.
  std::vector<std::pair<double, double>> segments{{step.start, step.end}};
  for (double a = step.end; a < cutoff; a += step.width()) {
    segments.emplace_back(a, std::min(a + step.width(), cutoff));
  }

  const double half = 0.5 * p;
  std::vector<double> decay(d);
  double total = 0.0;
  for (const auto& [a, b] : segments) {
    const QuadratureRule rule = QuadratureRule::compositeGauss(a, b, resolution);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = rule.nodes[k];
      const double chi = step.value(t);
      const double dchi = step.derivative(t);
      for (std::size_t i = 0; i < d; ++i) decay[i] = std::exp(-2.0 * w[i] * t);
      double inner = 0.0;
      for (std::size_t j = 0; j < nx; ++j) {
        double g = 0.0;
        for (std::size_t i = 0; i < d; ++i) g += decay[i] * grad2[j * d + i];
        const double q = dchi * dchi * ubar2[j] + chi * chi * g;
        if (q > 0.0) inner += grid.weights[j] * std::pow(q, half);
      }
      total += rule.weights[k] * std::exp(tau * t) * inner;
    }
  }
  return total;
}

ThresholdCheck verifyThreshold(const HeintzeModel& model, const Rational& p,
                               const ThresholdOptions& options) {
  ThresholdCheck c;
  c.p = p;
  c.rates = rateAnalysis(model, p);
  const TestFunction fn = TestFunction::standard(model.fiberDim());
  c.cutoff = options.cutoff.value_or(10.0 * fn.step.width());
  const double pd = p.get_d();
  c.normAtCutoff = quadratureNorm(model, fn, pd, c.cutoff, options.resolution);
  c.normAtDoubleCutoff = quadratureNorm(model, fn, pd, 2.0 * c.cutoff, options.resolution);
  c.growthRatio = c.normAtDoubleCutoff / c.normAtCutoff;
  c.measuredRate = std::log(c.growthRatio) / c.cutoff;
  c.predictedRate = c.rates.dominantRate.get_d();
  if (c.rates.verdict == Convergence::Convergent) {
    c.numericsAgree = std::abs(c.normAtDoubleCutoff - c.normAtCutoff) <= 0.01 * c.normAtCutoff;
  } else if (c.rates.dominantRate > 0) {
    c.numericsAgree = c.growthRatio > std::exp(0.5 * c.predictedRate * c.cutoff) &&
                      std::abs(c.measuredRate - c.predictedRate) <= 0.1 * c.predictedRate;
  } else {
    const double w1 = model.weights().front().get_d();
    c.numericsAgree = c.growthRatio > 1.0 && std::abs(c.measuredRate) <= 0.1 * w1;
  }
  return c;
}

FlowDecayResult flowDecayCheck(const HeintzeModel& model, const FlowTestFunction& fn, double p,
                               double t, std::size_t resolution,
                               std::optional<FlowWindow> window) {
  requireResolution(resolution);
  if (!(p > 0)) fail(ErrorCode::InvalidArgument, "p must be positive");
  if (fn.fiber.center.size() != model.fiberDim()) {
    fail(ErrorCode::DimensionMismatch, "bump dimension != fiber dimension");
  }
  // Support of xi0 f in t, and of its translate (xi0 f)(x, s + t).
  const double lo0 = fn.center - fn.radius;
  const double hi0 = fn.center + fn.radius;
  const double lo1 = lo0 - t;
  const double hi1 = hi0 - t;
  const double suppLo = std::min(lo0, lo1);
  const double suppHi = std::max(hi0, hi1);
  // Padding is incommensurate with rational shifts, so translated nodes never
  // land on nodes and the comparison measures genuine quadrature error.
  const double pad = 0.5 * (std::sqrt(5.0) - 1.0) * fn.radius;
  FlowWindow win{suppLo - pad, suppHi + pad};
  if (window) {
    if (window->lo > suppLo || window->hi < suppHi) {
      fail(ErrorCode::SupportEscapesWindow,
           "window does not contain the support of the function and its translate");
    }
    win = *window;
  }
  const double tau = model.tau().get_d();
  const FiberGrid grid = fiberGrid(fn.fiber, resolution);
  std::vector<double> ubarP(grid.points.size());
  for (std::size_t j = 0; j < grid.points.size(); ++j) {
    ubarP[j] = std::pow(std::abs(fn.fiber.value(grid.points[j])), p);
  }
  const QuadratureRule rule = QuadratureRule::compositeGauss(win.lo, win.hi, resolution);
  double translated = 0.0;
  double original = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double s = rule.nodes[k];
    const double vol = rule.weights[k] * std::exp(tau * s);
    const double a = std::pow(std::abs(fn.psiDerivative(s + t)), p);
    const double b = std::pow(std::abs(fn.psiDerivative(s)), p);
    for (std::size_t j = 0; j < grid.points.size(); ++j) {
      translated += vol * grid.weights[j] * ubarP[j] * a;
      original += vol * grid.weights[j] * ubarP[j] * b;
    }
  }
  FlowDecayResult r;
  r.translatedNorm = std::pow(translated, 1.0 / p);
  r.predictedNorm = std::exp(-t * tau / p) * std::pow(original, 1.0 / p);
  r.relativeError = std::abs(r.translatedNorm - r.predictedNorm) / r.predictedNorm;
  return r;
}

}  // namespace lpcoh
