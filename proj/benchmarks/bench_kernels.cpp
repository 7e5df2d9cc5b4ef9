// Copyright 2026 The riesz-lab Authors
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

#include "riesz/construction.hpp"
#include "riesz/polyeval.hpp"
#include "riesz/presets.hpp"
#include "riesz/riesz.hpp"
#include "riesz/rng.hpp"
#include "riesz/spectrum.hpp"

namespace {

using namespace riesz;

void BM_Philox(benchmark::State& state) {
  std::uint32_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_bits(1, Stream::kSpacers, i++, 0));
}
BENCHMARK(BM_Philox);

// One stage of the decay preset on a grid of state.range(0) points.
void BM_StagePolynomial(benchmark::State& state) {
  const auto p = preset("decay");
  const auto h = build_heights(p);
  const auto e = stage_exponents(p, h, sample_omega(p, 1, 1), 1);
  const CircleGrid g(static_cast<std::uint64_t>(state.range(0)), 12345);
  for (auto _ : state) benchmark::DoNotOptimize(eval_stage_polynomial(e, g));
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(e.size()));
}
BENCHMARK(BM_StagePolynomial)->Arg(1 << 12)->Arg(1 << 16);

void BM_PartialProduct(benchmark::State& state) {
  const auto p = preset("decay");
  const auto h = build_heights(p);
  const auto omega = sample_omega(p, 1, p.stages);
  const CircleGrid g(1 << 14, 999);
  for (auto _ : state) benchmark::DoNotOptimize(partial_abs_product(p, h, omega, p.stages, g));
}
BENCHMARK(BM_PartialProduct);

void BM_SpectrumMass(benchmark::State& state) {
  const auto p = preset("decay");
  const auto h = build_heights(p);
  const auto omega = sample_omega(p, 1, p.stages);
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_spectrum(p, h, omega, static_cast<int>(state.range(0))).mass());
  }
}
BENCHMARK(BM_SpectrumMass)->Arg(1)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
