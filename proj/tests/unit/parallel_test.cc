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
#include <stdexcept>

#include <gtest/gtest.h>

#include "halin/status.h"
#include "support/test_graphs.h"

namespace halin {
namespace {

using ::halin::testing::Corpus;
using ::halin::testing::K4Spec;
using ::halin::testing::RunKeys;
using ::halin::testing::RunKeysParallel;

ParallelOptions Workers(std::size_t k, bool randomize = false,
                        std::uint64_t seed = 0) {
  ParallelOptions o;
  o.workers = k;
  o.randomize = randomize;
  o.seed = seed;
  return o;
}

TEST(RunParallelTest, K4DistinctFourWorkers) {
  const HalinGraph h = BuildHalin(K4Spec());
  const auto seq = RunKeys(h, EnumMode::kDistinct);
  const auto par = RunKeysParallel(h, EnumMode::kDistinct, Workers(4));
  EXPECT_EQ(par.report.total_emitted, 16u);
  EXPECT_EQ(par.KeySet(), seq.KeySet());
  EXPECT_EQ(par.MaxMultiplicity(), 1u);
}

TEST(RunParallelTest, K4NaiveIsNineteenUnderAnySchedule) {
  const HalinGraph h = BuildHalin(K4Spec());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto par =
        RunKeysParallel(h, EnumMode::kNaive, Workers(2, true, seed));
    EXPECT_EQ(par.report.total_emitted, 19u);
    EXPECT_EQ(par.report.distinct_count, 16u);
  }
}

TEST(RunParallelTest, OneWorkerMatchesSequentialOrder) {
  for (const auto& entry : Corpus(8)) {
    for (EnumMode mode : {EnumMode::kNaive, EnumMode::kDistinct}) {
      const auto seq = RunKeys(entry.graph, mode);
      const auto par = RunKeysParallel(entry.graph, mode, Workers(1));
      EXPECT_EQ(par.order, seq.order);
    }
  }
}

TEST(RunParallelTest, SetsAndLevelsMatchSequential) {
  for (const auto& entry : Corpus(12, 4, 12)) {
    for (EnumMode mode : {EnumMode::kNaive, EnumMode::kDistinct}) {
      const auto seq = RunKeys(entry.graph, mode);
      for (std::size_t k : {2, 3, 8}) {
        ParallelReport pr;
        const auto par = RunKeysParallel(entry.graph, mode,
                                         Workers(k, true, entry.seed + k), &pr);
        EXPECT_EQ(par.keys, seq.keys) << "seed " << entry.seed;
        EXPECT_EQ(par.report.per_level, seq.report.per_level);
        EXPECT_EQ(pr.tasks_spawned, seq.report.expansions);
        EXPECT_EQ(pr.workers, k);
        EXPECT_FALSE(pr.partial);
      }
    }
  }
}

TEST(RunParallelTest, TinyQueueLimitStillMatches) {
  const HalinGraph h = RandomHalin(5, 11, 4);
  const auto seq = RunKeys(h, EnumMode::kDistinct);
  ParallelOptions o = Workers(4);
  o.max_queued_tasks = 2;
  ParallelReport pr;
  const auto par = RunKeysParallel(h, EnumMode::kDistinct, o, &pr);
  EXPECT_EQ(par.keys, seq.keys);
  EXPECT_EQ(pr.tasks_spawned, seq.report.expansions);
}

// Each distinct-mode child owns one color set; sets are never shared.
TEST(RunParallelTest, ColorSetsArePerTask) {
  const HalinGraph h = RandomHalin(3, 10, 3);
  ParallelReport pr;
  const auto par = RunKeysParallel(h, EnumMode::kDistinct, Workers(4), &pr);
  EXPECT_EQ(pr.color_sets_created, par.report.total_emitted - 1);

  std::mutex mu;
  std::set<const void*> children_seen;
  ParallelOptions o = Workers(4, true, 9);
  o.enum_options.on_step = [&](const ExchangeStep& s) {
    EXPECT_NE(static_cast<const void*>(&s.parent.colored),
              static_cast<const void*>(&s.child.colored));
    std::lock_guard lock(mu);
    children_seen.insert(&s.child);
  };
  RunKeysParallel(h, EnumMode::kDistinct, o);
  EXPECT_FALSE(children_seen.empty());
}

// Counter bounds: an expansion emits at most one child per non-cycle edge of
// C*, so fewer than n, and each child spawns at most p-1 follow-ups.
TEST(RunParallelTest, PerTaskCountersAreBounded) {
  for (const auto& entry : Corpus(10, 6, 14)) {
    const HalinGraph& h = entry.graph;
    ParallelReport pr;
    RunKeysParallel(h, EnumMode::kDistinct, Workers(3), &pr);
    EXPECT_LE(pr.max_emissions_per_task, h.n() - 1);
    EXPECT_LE(pr.max_spawns_per_task,
              pr.max_emissions_per_task * (h.p() - 1));
    EXPECT_LE(pr.max_task_depth, h.p());
    EXPECT_GE(pr.max_task_depth, 1u);
  }
}

TEST(RunParallelTest, SinkOverflowPropagates) {
  const HalinGraph h = RandomHalin(2, 10, 3);
  SinkOptions so;
  so.mode = SinkMode::kStore;
  so.store_cap = 10;
  EnumSink sink(so);
  ConcurrentSink shared(sink);
  try {
    RunParallel(h, EnumMode::kDistinct, shared, Workers(4));
    FAIL();
  } catch (const HalinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSinkOverflow);
  }
}

TEST(RunParallelTest, TaskFailureMarksPartial) {
  const HalinGraph h = RandomHalin(2, 10, 3);
  EnumSink sink;
  ConcurrentSink shared(sink);
  ParallelOptions o = Workers(3);
  std::atomic<int> steps{0};
  o.enum_options.on_step = [&](const ExchangeStep&) {
    if (steps.fetch_add(1) == 20) throw std::runtime_error("injected");
  };
  const ParallelResult r = RunParallel(h, EnumMode::kDistinct, shared, o);
  EXPECT_TRUE(r.parallel.partial);
  EXPECT_TRUE(r.enum_report.partial);
  EXPECT_EQ(r.parallel.error, "injected");
}

TEST(RunParallelTest, ZeroWorkersRejected) {
  const HalinGraph h = BuildHalin(K4Spec());
  EnumSink sink;
  ConcurrentSink shared(sink);
  EXPECT_THROW(RunParallel(h, EnumMode::kDistinct, shared, Workers(0)),
               HalinError);
}

TEST(SpeedupReportTest, BaselineAndEfficiency) {
  const HalinGraph h = RandomHalin(4, 12, 4);
  const auto rows = SpeedupReport(h, EnumMode::kDistinct, {1, 2}, 1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].workers, 1u);
  EXPECT_DOUBLE_EQ(rows[0].speedup, 1.0);
  EXPECT_DOUBLE_EQ(rows[0].efficiency, 1.0);
  EXPECT_GT(rows[1].efficiency, 0.0);
  EXPECT_GT(rows[1].wall_time.count(), 0);
}

}  // namespace
}  // namespace halin
