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

#include "halin/enum_sink.h"

#include <algorithm>
#include <utility>

#include "halin/status.h"

namespace halin {

std::vector<LevelCount> CollectLevels(const EnumReport& report) {
  return report.per_level;
}

EnumSink::EnumSink(SinkOptions options) : options_(std::move(options)) {
  Start();
}

bool EnumSink::wants_edges() const {
  return options_.mode != SinkMode::kCountOnly || options_.track_keys;
}

void EnumSink::Start() {
  start_ = std::chrono::steady_clock::now();
  last_ = start_;
}

void EnumSink::Emit(std::size_t level, std::span<const Edge> edges) {
  if (options_.mode == SinkMode::kStore && stored_.size() >= options_.store_cap) {
    throw HalinError(ErrorCode::kSinkOverflow,
                     "store cap of " + std::to_string(options_.store_cap) +
                         " trees exceeded");
  }
  if (options_.track_delays) {
    const auto now = std::chrono::steady_clock::now();
    max_delay_ = std::max<std::chrono::nanoseconds>(max_delay_, now - last_);
    last_ = now;
  }
  ++total_;
  if (level >= per_level_.size()) per_level_.resize(level + 1, 0);
  ++per_level_[level];

  if (!wants_edges()) return;
  if (options_.mode == SinkMode::kStream && options_.on_tree) {
    options_.on_tree(level, edges);
  }
  if (options_.mode == SinkMode::kStore || options_.track_keys) {
    CanonicalTreeKey key(std::vector<Edge>(edges.begin(), edges.end()));
    if (options_.track_keys) {
      KeyTally& tally = multiplicity_[key];
      ++tally.count;
      tally.level = level;
    }
    if (options_.mode == SinkMode::kStore) {
      stored_.push_back(std::move(key));
      stored_levels_.push_back(level);
    }
  }
}

EnumReport EnumSink::Report(std::size_t num_levels) const {
  EnumReport report;
  report.total_emitted = total_;
  const std::size_t levels = std::max(num_levels, per_level_.size());
  for (std::size_t l = 0; l < levels; ++l) {
    report.per_level.push_back(
        {l, l < per_level_.size() ? per_level_[l] : 0});
  }
  if (options_.track_keys) {
    report.distinct_count = multiplicity_.size();
    report.repeated_keys_per_level.assign(levels, 0);
    for (const auto& [key, tally] : multiplicity_) {
      ++report.duplicate_multiplicities[tally.count];
      if (tally.count > 1) ++report.repeated_keys_per_level[tally.level];
    }
  }
  if (options_.track_delays && total_ > 0) {
    report.max_delay = max_delay_;
    report.mean_delay = (last_ - start_) / static_cast<std::int64_t>(total_);
  }
  return report;
}

void ConcurrentSink::Start() {
  std::lock_guard lock(mu_);
  sink_.Start();
}

void ConcurrentSink::Emit(std::size_t level, std::span<const Edge> edges) {
  std::lock_guard lock(mu_);
  sink_.Emit(level, edges);
}

}  // namespace halin
