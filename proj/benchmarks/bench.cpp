// Copyright 2026 The memchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "memchan/analysis.hpp"
#include "memchan/channel.hpp"
#include "memchan/linalg.hpp"
#include "memchan/schemes.hpp"

namespace memchan {
namespace {

const PauliProbs kDepol15 = make_probs(0.85, 0.05, 0.05, 0.05);

void BM_ApplyChannelSq2(benchmark::State& state) {
  const SchemeStateSet set = build_representative(SchemeKind::kSemiQuantum2);
  const DensityMatrix rho = DensityMatrix::from_pure(set.representative);
  const MemoryChannel channel(kDepol15, 0.4, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_channel(channel, rho, set.touched_qubits));
  }
}
BENCHMARK(BM_ApplyChannelSq2)->Unit(benchmark::kMillisecond);

void BM_HermitianSpectrum(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  ComplexMatrix g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) g(r, c) = Complex(normal(rng), normal(rng));
  }
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_spectrum(rho));
}
BENCHMARK(BM_HermitianSpectrum)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_BruteForceSq2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_spectrum(SchemeKind::kSemiQuantum2, kDepol15, 0.4));
  }
}
BENCHMARK(BM_BruteForceSq2)->Unit(benchmark::kMillisecond);

void BM_SweepAllSchemes(benchmark::State& state) {
  const std::vector<double> grid = uniform_grid(101);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(kDepol15, kAllSchemes, grid, Parallelism{1}));
  }
}
BENCHMARK(BM_SweepAllSchemes)->Unit(benchmark::kMillisecond);

void BM_MemoryThreshold(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        memory_threshold(SchemeKind::kSemiQuantum1, SchemeKind::kSemiQuantum2, kDepol15));
  }
}
BENCHMARK(BM_MemoryThreshold)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace memchan

BENCHMARK_MAIN();
