// Copyright 2026 The gmnl Authors
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

#include "gmnl/bell.h"
#include "gmnl/certify.h"
#include "gmnl/gme.h"
#include "gmnl/oracle.h"
#include "gmnl/state.h"

namespace {

void BM_Certify(benchmark::State& state) {
  const auto s = gmnl::random_near_symmetric(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(gmnl::certify(s));
}
BENCHMARK(BM_Certify)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

void BM_SelectAlpha(benchmark::State& state) {
  const auto s = gmnl::random_near_symmetric(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(gmnl::select_alpha(s));
}
BENCHMARK(BM_SelectAlpha)->Arg(3)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_JointProbability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = gmnl::random_near_symmetric(n, 3);
  const auto report = gmnl::certify(s);
  const auto psi = gmnl::embed(s);
  const auto q = gmnl::CorrelationQuery::zeros(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmnl::joint_probability(psi, *report.measurements, q));
  }
}
BENCHMARK(BM_JointProbability)->RangeMultiplier(2)->Range(4, 16);

void BM_FullProbability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = gmnl::random_near_symmetric(n, 3);
  const auto report = gmnl::certify(s);
  const auto psi = gmnl::embed(s);
  const auto q = gmnl::CorrelationQuery::zeros(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gmnl::oracle::full_probability(psi, *report.measurements, q));
  }
}
BENCHMARK(BM_FullProbability)->Arg(4)->Arg(8);

void BM_BilocalExhaustive(benchmark::State& state) {
  const auto gaps = gmnl::oracle::standard_gaps();
  for (auto _ : state) {
    const auto strategies = gmnl::oracle::enumerate_bilocal_extremes(3);
    benchmark::DoNotOptimize(gmnl::oracle::check_classical_bound(3, strategies, gaps));
  }
}
BENCHMARK(BM_BilocalExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
