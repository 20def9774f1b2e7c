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

#include "halin/bounds.h"

#include <gtest/gtest.h>

#include "halin/status.h"
#include "support/test_graphs.h"

namespace halin {
namespace {

using ::halin::testing::Corpus;
using ::halin::testing::Depth2Spec;
using ::halin::testing::K4Spec;
using ::halin::testing::RunKeys;

// Independent evaluation with doubles, exact for these small values.
double Level(std::size_t p, std::size_t d, std::size_t i) {
  double c = 1;
  for (std::size_t k = 1; k <= i; ++k) c = c * double(p - i + k) / double(k);
  double f = 1;
  for (std::size_t k = 2; k <= i; ++k) f *= double(k);
  double pw = 1;
  for (std::size_t k = 0; k < i; ++k) pw *= double(2 * d);
  return c * f * pw;
}

TEST(ComputeBoundsTest, TriangleStar) {
  const BoundSet b = ComputeBounds(3, 1);
  EXPECT_EQ(b.headline, 216);
  EXPECT_EQ(b.per_level, (std::vector<BigInt>{1, 6, 24}));
  EXPECT_EQ(b.total, 31);
  EXPECT_EQ(b.NodeBound(1), 2);
  EXPECT_EQ(b.NodeBound(2), 8);
}

TEST(ComputeBoundsTest, MatchesDirectEvaluation) {
  for (std::size_t p = 3; p <= 9; ++p) {
    for (std::size_t d = 1; d <= 4; ++d) {
      const BoundSet b = ComputeBounds(p, d);
      ASSERT_EQ(b.per_level.size(), p);
      for (std::size_t i = 0; i < p; ++i) {
        EXPECT_EQ(b.per_level[i].convert_to<double>(), Level(p, d, i));
        EXPECT_GT(b.per_level[i], 0);
      }
      EXPECT_LE(b.total, b.headline);
    }
  }
}

TEST(ComputeBoundsTest, HeadlineStrictlyIncreasing) {
  for (std::size_t p = 3; p < 20; ++p) {
    for (std::size_t d = 1; d < 8; ++d) {
      EXPECT_LT(ComputeBounds(p, d).headline, ComputeBounds(p + 1, d).headline);
      EXPECT_LT(ComputeBounds(p, d).headline, ComputeBounds(p, d + 1).headline);
    }
  }
}

TEST(ComputeBoundsTest, InvalidParams) {
  for (auto [p, d] : {std::pair{2, 1}, std::pair{3, 0}}) {
    try {
      ComputeBounds(p, d);
      FAIL();
    } catch (const HalinError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidParams);
    }
  }
}

TEST(ComputeBoundsTest, K4NodeE1E2WithinNodeBound) {
  const HalinGraph h = BuildHalin(K4Spec());
  std::size_t node = 0;
  EnumOptions options;
  options.on_step = [&](const ExchangeStep& s) {
    node += s.child.added == std::vector<std::uint32_t>{0, 1};
  };
  RunKeys(h, EnumMode::kDistinct, options);
  EXPECT_EQ(node, 3u);
  EXPECT_LE(BigInt(node), ComputeBounds(3, 1).NodeBound(2));
}

TEST(CheckDepthBoundTest, Examples) {
  EXPECT_TRUE(CheckDepthBound(BuildHalin(K4Spec())));
  EXPECT_TRUE(CheckDepthBound(BuildHalin(Depth2Spec())));
}

TEST(BoundsTest, CorpusWithinBounds) {
  for (const auto& entry : Corpus(40, 4, 13)) {
    const HalinGraph& h = entry.graph;
    EXPECT_TRUE(CheckDepthBound(h));
    const BoundSet b = ComputeBounds(h.p(), h.d());
    for (EnumMode mode : {EnumMode::kNaive, EnumMode::kDistinct}) {
      EnumSink sink;
      const EnumReport report = Enumerate(h, mode, sink);
      for (const LevelCount& lc : report.per_level) {
        if (lc.level < h.p()) {
          EXPECT_LE(BigInt(lc.emitted), b.per_level[lc.level])
              << "seed " << entry.seed << " level " << lc.level;
        } else {
          EXPECT_EQ(lc.emitted, 0u);
        }
      }
      EXPECT_LE(BigInt(report.total_emitted), b.headline);
    }
  }
}

}  // namespace
}  // namespace halin
