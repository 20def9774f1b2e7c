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

#ifndef HALIN_ENUM_SINK_H_
#define HALIN_ENUM_SINK_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "halin/graph.h"

namespace halin {

struct LevelCount {
  std::size_t level = 0;
  std::uint64_t emitted = 0;

  friend bool operator==(const LevelCount&, const LevelCount&) = default;
};

struct EnumReport {
  std::uint64_t total_emitted = 0;
  // Known only when the sink tracked canonical keys.
  std::optional<std::uint64_t> distinct_count;
  // Levels 0..p, level = number of accompanying cycle edges in the tree.
  std::vector<LevelCount> per_level;
  // multiplicity -> number of keys emitted that many times.
  std::map<std::uint64_t, std::uint64_t> duplicate_multiplicities;
  // Per level, how many keys were emitted more than once.
  std::vector<std::uint64_t> repeated_keys_per_level;
  std::chrono::nanoseconds max_delay{0};
  std::chrono::nanoseconds mean_delay{0};
  // (tree, cycle edge) expansions performed by the engine.
  std::uint64_t expansions = 0;
  // Set when the run stopped early (cap reached or a worker failed).
  bool partial = false;

  std::uint64_t duplicates() const {
    return distinct_count ? total_emitted - *distinct_count : 0;
  }
};

// Emitted counts grouped by level; level 0 is always the characteristic tree.
std::vector<LevelCount> CollectLevels(const EnumReport& report);

enum class SinkMode { kStore, kStream, kCountOnly };

inline constexpr std::size_t kDefaultStoreCap = 10'000'000;

struct SinkOptions {
  SinkMode mode = SinkMode::kCountOnly;
  // Keep a canonical-key multiset for distinct counts and duplicate stats.
  bool track_keys = false;
  // kStore throws kSinkOverflow past this many trees.
  std::size_t store_cap = kDefaultStoreCap;
  bool track_delays = true;
  // kStream callback; edges arrive sorted.
  std::function<void(std::size_t level, std::span<const Edge> edges)> on_tree;
};

struct KeyTally {
  std::uint64_t count = 0;
  std::size_t level = 0;
};

using KeyMultiset =
    std::unordered_map<CanonicalTreeKey, KeyTally, CanonicalTreeKeyHash>;

// Receives every spanning tree an engine produces. Single producer; wrap it
// in a ConcurrentSink for the parallel engine.
class EnumSink {
 public:
  explicit EnumSink(SinkOptions options = {});

  // False for a count-only sink without key tracking, letting engines skip
  // materializing edge lists.
  bool wants_edges() const;

  // Resets the delay clock; engines call it right before the first emission.
  void Start();
  void Emit(std::size_t level, std::span<const Edge> edges);

  std::uint64_t total() const { return total_; }
  const std::vector<CanonicalTreeKey>& stored() const { return stored_; }
  const std::vector<std::size_t>& stored_levels() const {
    return stored_levels_;
  }
  const KeyMultiset& multiplicities() const { return multiplicity_; }

  // Report with per_level padded to `num_levels` entries.
  EnumReport Report(std::size_t num_levels) const;

 private:
  SinkOptions options_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> per_level_;
  std::vector<CanonicalTreeKey> stored_;
  std::vector<std::size_t> stored_levels_;
  KeyMultiset multiplicity_;
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point last_;
  std::chrono::nanoseconds max_delay_{0};
};

// EnumSink behind a mutex: the only synchronization point of a parallel run.
class ConcurrentSink {
 public:
  explicit ConcurrentSink(EnumSink& sink) : sink_(sink) {}

  bool wants_edges() const { return sink_.wants_edges(); }
  void Start();
  void Emit(std::size_t level, std::span<const Edge> edges);

  EnumSink& underlying() { return sink_; }

 private:
  EnumSink& sink_;
  std::mutex mu_;
};

}  // namespace halin

#endif  // HALIN_ENUM_SINK_H_
