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

// Fork-join execution of the enumeration engines. Every (tree, e_i)
// expansion is an independent task that owns its PartialTree and colored
// set; the sink is the only shared mutable state.

#ifndef HALIN_PARALLEL_H_
#define HALIN_PARALLEL_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halin/enum_sink.h"
#include "halin/enumerator.h"
#include "halin/halin_graph.h"

namespace halin {

struct ParallelOptions {
  std::size_t workers = 1;
  // Randomized local scheduling, for schedule-independence tests.
  bool randomize = false;
  std::uint64_t seed = 0;
  // Task-queue depth limit; beyond it expansions run inline (0: unbounded).
  std::size_t max_queued_tasks = 1 << 16;
  EnumOptions enum_options;
};

struct ParallelReport {
  // (tree, e_j) expansions executed, queued or inline.
  std::uint64_t tasks_spawned = 0;
  // Largest level of a tree handed to an expansion task, plus one.
  std::size_t max_task_depth = 0;
  std::chrono::nanoseconds wall_time{0};
  std::optional<std::chrono::nanoseconds> sequential_wall_time;
  std::size_t workers = 1;
  // Children emitted by a single expansion, maximum over tasks.
  std::uint64_t max_emissions_per_task = 0;
  // Follow-up expansions a single task created, maximum over tasks.
  std::uint64_t max_spawns_per_task = 0;
  // Colored sets allocated; one per distinct-mode child, never shared.
  std::uint64_t color_sets_created = 0;
  std::uint64_t steals = 0;
  bool partial = false;
  std::string error;
};

struct ParallelResult {
  EnumReport enum_report;
  ParallelReport parallel;
};

// Runs `mode` on `h` with `options.workers` workers. With one worker the
// sequential engine runs directly, so order matches it exactly. Rethrows
// kSinkOverflow; any other task failure stops the run and sets `partial`.
ParallelResult RunParallel(const HalinGraph& h, EnumMode mode,
                           ConcurrentSink& sink,
                           const ParallelOptions& options = {});

struct SpeedupRow {
  std::size_t workers = 1;
  std::chrono::nanoseconds wall_time{0};
  double speedup = 1.0;     // T_1 / T_k
  double efficiency = 1.0;  // speedup / k
};

// Times a count-only run for each worker count; the row for one worker is
// the baseline. Best of `repeats` per row.
std::vector<SpeedupRow> SpeedupReport(const HalinGraph& h, EnumMode mode,
                                      const std::vector<std::size_t>& workers,
                                      std::size_t repeats = 3);

}  // namespace halin

#endif  // HALIN_PARALLEL_H_
