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

#include <benchmark/benchmark.h>

#include "lpcoh/lpcoh.hpp"

namespace {

using namespace lpcoh;

void BM_CharPoly(benchmark::State& state) {
  const LieAlgebra g = models::complexHyperbolic(static_cast<std::size_t>(state.range(0)));
  const RatMatrix ad = adjoint(g, defaultDirection(g));
  for (auto _ : state) benchmark::DoNotOptimize(charPoly(ad));
}
BENCHMARK(BM_CharPoly)->Arg(2)->Arg(3)->Arg(4);

void BM_Classify(benchmark::State& state) {
  const LieAlgebra g = models::realHyperbolic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(g));
}
BENCHMARK(BM_Classify)->Arg(3)->Arg(5)->Arg(8);

// Irrational minimum real part: 2 +- sqrt 3 forces the bisection path.
void BM_RealPartReport(benchmark::State& state) {
  const RatPolynomial p{1, -4, 1};
  const Rational tol = pow2(-static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(realPartReport(p, tol));
}
BENCHMARK(BM_RealPartReport)->Arg(16)->Arg(64)->Arg(128);

void BM_QuadratureNorm(benchmark::State& state) {
  const HeintzeModel model({1, 2});
  const auto fn = TestFunction::standard(2);
  const auto res = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quadratureNorm(model, fn, 3.0, 10.0, res));
}
BENCHMARK(BM_QuadratureNorm)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_DirichletCheeger(benchmark::State& state) {
  const Graph g = generateBall(BallModel::parse("sol"), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dirichletCheeger(g));
}
BENCHMARK(BM_DirichletCheeger)->Arg(3)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CheegerEstimate(benchmark::State& state) {
  const Graph g = generateBall(BallModel::grid(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cheegerEstimate(g));
}
BENCHMARK(BM_CheegerEstimate)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
