// Copyright 2026 The halin-enum Authors
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

// Throughput of the enumeration engines and the exact counter.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "halin/enum_sink.h"
#include "halin/enumerator.h"
#include "halin/halin_graph.h"
#include "halin/oracles.h"
#include "halin/parallel.h"

namespace halin {
namespace {

// Seeded graph with n vertices and at most four children per vertex.
HalinGraph BenchGraph(std::int64_t n) {
  return RandomHalin(1234 + static_cast<std::uint64_t>(n),
                     static_cast<std::size_t>(n), 4);
}

void RunEngine(benchmark::State& state, EnumMode mode, bool materialize) {
  const HalinGraph h = BenchGraph(state.range(0));
  std::uint64_t trees = 0;
  for (auto _ : state) {
    SinkOptions so;
    if (materialize) {
      so.mode = SinkMode::kStream;
      so.on_tree = [](std::size_t, std::span<const Edge> edges) {
        benchmark::DoNotOptimize(edges.data());
      };
    }
    EnumSink sink(so);
    trees = Enumerate(h, mode, sink).total_emitted;
  }
  state.counters["n"] = static_cast<double>(h.n());
  state.counters["p"] = static_cast<double>(h.p());
  state.counters["trees"] = static_cast<double>(trees);
  state.counters["trees_per_s"] = benchmark::Counter(
      static_cast<double>(trees) * static_cast<double>(state.iterations()),
      benchmark::Counter::kIsRate);
}

void BM_DistinctCount(benchmark::State& state) {
  RunEngine(state, EnumMode::kDistinct, false);
}
void BM_DistinctStream(benchmark::State& state) {
  RunEngine(state, EnumMode::kDistinct, true);
}
void BM_NaiveCount(benchmark::State& state) {
  RunEngine(state, EnumMode::kNaive, false);
}

void BM_Parallel(benchmark::State& state) {
  const HalinGraph h = BenchGraph(state.range(0));
  ParallelOptions po;
  po.workers = static_cast<std::size_t>(state.range(1));
  std::uint64_t trees = 0;
  for (auto _ : state) {
    EnumSink sink;
    ConcurrentSink shared(sink);
    trees = RunParallel(h, EnumMode::kDistinct, shared, po)
                .enum_report.total_emitted;
  }
  state.counters["trees"] = static_cast<double>(trees);
  state.counters["trees_per_s"] = benchmark::Counter(
      static_cast<double>(trees) * static_cast<double>(state.iterations()),
      benchmark::Counter::kIsRate);
}

void BM_Kirchhoff(benchmark::State& state) {
  const HalinGraph h = BenchGraph(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(KirchhoffCount(h.n(), h.edges()));
  }
  state.counters["n"] = static_cast<double>(h.n());
}

BENCHMARK(BM_DistinctCount)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistinctStream)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NaiveCount)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)
    ->ArgsProduct({{16}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_Kirchhoff)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
}  // namespace halin

BENCHMARK_MAIN();
