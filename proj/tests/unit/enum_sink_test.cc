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

#include <gtest/gtest.h>

#include "halin/status.h"

namespace halin {
namespace {

const std::vector<Edge> kA{Edge::Of(0, 1), Edge::Of(0, 2)};
const std::vector<Edge> kB{Edge::Of(0, 1), Edge::Of(1, 2)};

TEST(EnumSinkTest, CountsPerLevelAndMultiplicities) {
  SinkOptions options;
  options.track_keys = true;
  EnumSink sink(options);
  sink.Emit(0, kA);
  sink.Emit(1, kB);
  sink.Emit(1, kB);
  const EnumReport r = sink.Report(3);
  EXPECT_EQ(r.total_emitted, 3u);
  EXPECT_EQ(r.distinct_count, 2u);
  EXPECT_EQ(r.duplicates(), 1u);
  EXPECT_EQ(r.per_level, (std::vector<LevelCount>{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(r.duplicate_multiplicities,
            (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}}));
  EXPECT_EQ(r.repeated_keys_per_level, (std::vector<std::uint64_t>{0, 1, 0}));
}

TEST(EnumSinkTest, CountOnlySkipsEdges) {
  EnumSink sink;
  EXPECT_FALSE(sink.wants_edges());
  sink.Emit(2, {});
  const EnumReport r = sink.Report(0);
  EXPECT_EQ(r.total_emitted, 1u);
  EXPECT_FALSE(r.distinct_count.has_value());
  EXPECT_EQ(r.per_level.size(), 3u);
}

TEST(EnumSinkTest, StoreKeepsOrderAndHonoursCap) {
  SinkOptions options;
  options.mode = SinkMode::kStore;
  options.store_cap = 2;
  EnumSink sink(options);
  sink.Emit(0, kB);
  sink.Emit(1, kA);
  ASSERT_EQ(sink.stored().size(), 2u);
  EXPECT_EQ(sink.stored()[0], CanonicalKey(kB));
  EXPECT_EQ(sink.stored_levels()[1], 1u);
  try {
    sink.Emit(1, kA);
    FAIL();
  } catch (const HalinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSinkOverflow);
  }
  EXPECT_EQ(sink.total(), 2u);
}

TEST(EnumSinkTest, StreamCallbackSeesEveryTree) {
  std::vector<std::size_t> levels;
  SinkOptions options;
  options.mode = SinkMode::kStream;
  options.on_tree = [&](std::size_t level, std::span<const Edge> edges) {
    levels.push_back(level);
    EXPECT_EQ(edges.size(), 2u);
  };
  EnumSink sink(options);
  sink.Emit(0, kA);
  sink.Emit(3, kB);
  EXPECT_EQ(levels, (std::vector<std::size_t>{0, 3}));
}

TEST(EnumSinkTest, DelaysAreMeasured) {
  EnumSink sink;
  sink.Start();
  for (int i = 0; i < 10; ++i) sink.Emit(0, {});
  const EnumReport r = sink.Report(1);
  EXPECT_GE(r.max_delay, r.mean_delay);
  EXPECT_GE(r.mean_delay.count(), 0);
}

}  // namespace
}  // namespace halin
