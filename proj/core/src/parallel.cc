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

#include "halin/parallel.h"

#include <algorithm>
#include <atomic>
#include <memory>

#include "expander.h"
#include "halin/status.h"
#include "halin/task_pool.h"

namespace halin {
namespace {

using Clock = std::chrono::steady_clock;

void AtomicMax(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load(std::memory_order_relaxed);
  while (cur < value &&
         !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

class ParallelRun {
 public:
  ParallelRun(const HalinGraph& h, EnumMode mode, ConcurrentSink& sink,
              const ParallelOptions& options)
      : h_(h),
        mode_(mode),
        expander_(h, mode, options.enum_options),
        sink_(sink),
        wants_edges_(sink.wants_edges()),
        pool_({options.workers, options.randomize, options.seed,
               options.max_queued_tasks}) {}

  void Run(ParallelReport& report) {
    sink_.Start();
    auto base = std::make_shared<const PartialTree>(PartialTree::Base(h_));
    Emit(*base);
    for (std::size_t i = 0; i < h_.p(); ++i) Spawn(base, i);
    try {
      pool_.Wait();
    } catch (const HalinError& e) {
      if (e.code() == ErrorCode::kSinkOverflow) throw;
      report.partial = true;
      report.error = e.what();
    } catch (const std::exception& e) {
      report.partial = true;
      report.error = e.what();
    }
    report.tasks_spawned = tasks_.load();
    report.max_task_depth = static_cast<std::size_t>(max_depth_.load());
    report.max_emissions_per_task = max_emissions_.load();
    report.max_spawns_per_task = max_spawns_.load();
    report.color_sets_created = color_sets_.load();
    report.steals = pool_.steals();
  }

 private:
  using TreePtr = std::shared_ptr<const PartialTree>;

  void Emit(const PartialTree& t) {
    std::vector<Edge> edges;
    if (wants_edges_) expander_.EdgesOf(t, edges);
    sink_.Emit(t.level(), edges);
  }

  void Spawn(const TreePtr& tree, std::size_t i) {
    TaskPool::Task task = [this, tree, i] { Expand(*tree, i); };
    if (!pool_.Submit(task)) task();
  }

  void Expand(const PartialTree& t, std::size_t i) {
    if (pool_.cancelled()) return;
    tasks_.fetch_add(1, std::memory_order_relaxed);
    AtomicMax(max_depth_, t.level() + 1);
    std::uint64_t spawns = 0;
    const std::size_t children = expander_.Expand(t, i, [&](PartialTree&& c) {
      if (mode_ == EnumMode::kDistinct) {
        color_sets_.fetch_add(1, std::memory_order_relaxed);
      }
      Emit(c);
      if (i + 1 >= h_.p()) return;
      auto child = std::make_shared<const PartialTree>(std::move(c));
      for (std::size_t j = i + 1; j < h_.p(); ++j) {
        ++spawns;
        Spawn(child, j);
      }
    });
    AtomicMax(max_emissions_, children);
    AtomicMax(max_spawns_, spawns);
  }

  const HalinGraph& h_;
  EnumMode mode_;
  internal::Expander expander_;
  ConcurrentSink& sink_;
  bool wants_edges_;
  std::atomic<std::uint64_t> tasks_{0};
  std::atomic<std::uint64_t> max_depth_{0};
  std::atomic<std::uint64_t> max_emissions_{0};
  std::atomic<std::uint64_t> max_spawns_{0};
  std::atomic<std::uint64_t> color_sets_{0};
  // Declared last: its destructor joins workers before the rest goes away.
  TaskPool pool_;
};

}  // namespace

ParallelResult RunParallel(const HalinGraph& h, EnumMode mode,
                           ConcurrentSink& sink,
                           const ParallelOptions& options) {
  if (options.workers == 0) {
    throw HalinError(ErrorCode::kInvalidArgument, "workers must be >= 1");
  }
  ParallelResult result;
  result.parallel.workers = options.workers;
  const auto start = Clock::now();
  if (options.workers == 1) {
    result.enum_report =
        Enumerate(h, mode, sink.underlying(), options.enum_options);
    result.parallel.tasks_spawned = result.enum_report.expansions;
    result.parallel.wall_time = Clock::now() - start;
    return result;
  }
  {
    ParallelRun run(h, mode, sink, options);
    run.Run(result.parallel);
    result.enum_report = sink.underlying().Report(h.p() + 1);
    result.enum_report.expansions = result.parallel.tasks_spawned;
    result.enum_report.partial = result.parallel.partial;
  }
  result.parallel.wall_time = Clock::now() - start;
  return result;
}

std::vector<SpeedupRow> SpeedupReport(const HalinGraph& h, EnumMode mode,
                                      const std::vector<std::size_t>& workers,
                                      std::size_t repeats) {
  auto time_run = [&](std::size_t k) {
    std::chrono::nanoseconds best = std::chrono::nanoseconds::max();
    for (std::size_t r = 0; r < std::max<std::size_t>(1, repeats); ++r) {
      SinkOptions sopts;
      sopts.track_delays = false;
      EnumSink sink(sopts);
      ConcurrentSink shared(sink);
      ParallelOptions options;
      options.workers = k;
      best = std::min(best, RunParallel(h, mode, shared, options)
                                .parallel.wall_time);
    }
    return best;
  };
  const auto t1 = time_run(1);
  std::vector<SpeedupRow> rows;
  for (std::size_t k : workers) {
    SpeedupRow row;
    row.workers = k;
    row.wall_time = k == 1 ? t1 : time_run(k);
    row.speedup = row.wall_time.count() > 0
                      ? static_cast<double>(t1.count()) /
                            static_cast<double>(row.wall_time.count())
                      : 1.0;
    row.efficiency = row.speedup / static_cast<double>(k);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace halin
