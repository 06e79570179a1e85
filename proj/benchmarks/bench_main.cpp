/*
   Copyright 2026 The mockradial Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <benchmark/benchmark.h>

#include <vector>

#include "mockradial/exact.hpp"
#include "mockradial/mocktheta.hpp"
#include "mockradial/radial.hpp"
#include "mockradial/verify.hpp"

using namespace mockradial;

namespace {

CyclotomicNumber dense_element(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(order)));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(static_cast<long>(i % 7) - 3, static_cast<long>(i % 5) + 1);
  return CyclotomicNumber::from_coefficients(order, c);
}

void BM_ExactMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CyclotomicNumber a = dense_element(n), b = dense_element(n).conj();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ExactMultiply)->Arg(12)->Arg(60)->Arg(180);

void BM_ExactInverse(benchmark::State& state) {
  const CyclotomicNumber a = dense_element(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ExactInverse)->Arg(12)->Arg(60)->Arg(180);

// Evaluation near the unit circle, where the series is slowest.
void BM_G3Eval(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  const Precision p = Precision::digits(digits + 10);
  const BigComplex q = BigComplex(0.9, 0.0, p) * BigComplex::unit(mpq_class(1, 3), p);
  const BigComplex x = BigComplex::unit(mpq_class(1, 7), p);
  for (auto _ : state) benchmark::DoNotOptimize(g3_eval(x, q, digits));
}
BENCHMARK(BM_G3Eval)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_RadialLimitExact(benchmark::State& state) {
  const SpecializationParams p{1, 2, 0, 1};
  const long k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(radial_limit(p, 1, k, 30));
}
BENCHMARK(BM_RadialLimitExact)->Arg(1)->Arg(5)->Arg(9);

void BM_CuspClassification(benchmark::State& state) {
  for (auto _ : state) {
    long poles = 0;
    for (const Tuple& t : enumerate_tuples(6, 3, 4, 12)) poles += cusp_data(t.params, t.h, t.k).label == CaseLabel::Pole;
    benchmark::DoNotOptimize(poles);
  }
}
BENCHMARK(BM_CuspClassification)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
