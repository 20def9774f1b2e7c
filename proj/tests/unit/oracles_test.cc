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

#include "halin/oracles.h"

#include <gtest/gtest.h>

#include "halin/graph_format.h"
#include "halin/status.h"
#include "support/test_graphs.h"

namespace halin {
namespace {

using ::halin::testing::Corpus;

std::vector<Edge> Complete(VertexId n) {
  std::vector<Edge> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) out.push_back(Edge::Of(a, b));
  }
  return out;
}

std::vector<Edge> Cycle(VertexId n) {
  std::vector<Edge> out;
  for (VertexId a = 0; a < n; ++a) out.push_back(Edge::Of(a, (a + 1) % n));
  return out;
}

TEST(KirchhoffCountTest, CayleyFormula) {
  EXPECT_EQ(KirchhoffCount(4, Complete(4)).value, 16);
  for (VertexId n = 2; n <= 12; ++n) {
    BigInt cayley = 1;
    for (VertexId i = 0; i + 2 < n; ++i) cayley *= n;
    EXPECT_EQ(KirchhoffCount(n, Complete(n)).value, cayley) << "n=" << n;
  }
}

TEST(KirchhoffCountTest, CycleAndTree) {
  EXPECT_EQ(KirchhoffCount(5, Cycle(5)).value, 5);
  const std::vector<Edge> tree{Edge::Of(0, 1), Edge::Of(1, 2), Edge::Of(1, 3)};
  EXPECT_EQ(KirchhoffCount(4, tree).value, 1);
}

TEST(KirchhoffCountTest, DisconnectedIsZeroWithFlag) {
  const std::vector<Edge> edges{Edge::Of(0, 1), Edge::Of(2, 3)};
  const ExactCount c = KirchhoffCount(4, edges);
  EXPECT_EQ(c.value, 0);
  EXPECT_FALSE(c.connected);
}

TEST(KirchhoffCountTest, ExactBeyondMachineWords) {
  // K30 has 30^28 spanning trees, far above 2^64.
  BigInt expected = 1;
  for (int i = 0; i < 28; ++i) expected *= 30;
  EXPECT_EQ(KirchhoffCount(30, Complete(30)).value, expected);
}

TEST(BruteForceTreesTest, K4HasSixteen) {
  const auto trees = BruteForceTrees(4, Complete(4));
  EXPECT_EQ(trees.size(), 16u);
  // Star {u v1, u v2, u v3} and {e1, e2, u v3} with u=0.
  EXPECT_TRUE(trees.contains(CanonicalTreeKey(
      std::vector<Edge>{Edge::Of(0, 1), Edge::Of(0, 2), Edge::Of(0, 3)})));
  EXPECT_TRUE(trees.contains(CanonicalTreeKey(
      std::vector<Edge>{Edge::Of(1, 2), Edge::Of(2, 3), Edge::Of(0, 3)})));
}

TEST(BruteForceTreesTest, Triangle) {
  EXPECT_EQ(BruteForceTrees(3, Cycle(3)).size(), 3u);
}

TEST(BruteForceTreesTest, GuardRaisesTooLarge) {
  try {
    BruteForceTrees(15, Cycle(15));
    FAIL();
  } catch (const HalinError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(BruteForceTreesTest, BothStrategiesAgree) {
  // K8 has 28 edges, so the backtracking branch runs; K7 has 21.
  EXPECT_EQ(BruteForceTrees(7, Complete(7)).size(), 16807u);
  EXPECT_EQ(BruteForceTrees(8, Complete(8)).size(), 262144u);
}

TEST(OraclesTest, BruteForceMatchesKirchhoffOnCorpus) {
  for (const auto& entry : Corpus(40, 4, 14)) {
    const HalinGraph& h = entry.graph;
    const auto trees = BruteForceTrees(h.n(), h.edges());
    EXPECT_EQ(BigInt(trees.size()), KirchhoffCount(h.n(), h.edges()).value)
        << "seed " << entry.seed;
    for (const auto& k : trees) {
      ASSERT_TRUE(IsSpanningTree(k.edges(), h.n()));
    }
  }
}

}  // namespace
}  // namespace halin
