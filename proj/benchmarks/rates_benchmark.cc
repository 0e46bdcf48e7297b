// Copyright 2026 The dpsqkd Authors
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

#include "dpsqkd/attack.h"
#include "dpsqkd/optimize.h"
#include "dpsqkd/profile.h"
#include "dpsqkd/security.h"

namespace dpsqkd {
namespace {

void BM_ErrorRateGaussian(benchmark::State& state) {
  const AmplitudeProfile profile = gaussian(static_cast<int>(state.range(0)), 1.6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(error_rate(profile));
  }
}
BENCHMARK(BM_ErrorRateGaussian)->Arg(4)->Arg(10)->Arg(20);

void BM_GaussianProfile(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaussian(9, 1.63));
  }
}
BENCHMARK(BM_GaussianProfile);

void BM_OptimizeSigma(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_sigma(k));
  }
}
BENCHMARK(BM_OptimizeSigma)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_BruteForceRates(benchmark::State& state) {
  const AmplitudeProfile profile = gaussian(5, 1.03);
  const int pad = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_rates(profile, pad));
  }
}
BENCHMARK(BM_BruteForceRates)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ScanNbar(benchmark::State& state) {
  const AttackCatalog catalog;
  ExperimentParams setup;
  setup.link = LinkParams{0.2, 95.0, 2.0, 0.1};
  setup.dark_count = 1e-5;
  setup.baseline_error = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_nbar(setup, NbarGrid{}, catalog));
  }
}
BENCHMARK(BM_ScanNbar)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dpsqkd

BENCHMARK_MAIN();
