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

// Spanning-tree enumeration for Halin graphs by cycle-edge exchange.
//
// Both engines start from the characteristic tree T and expand a
// computational tree: a node holds a spanning tree T' whose accompanying
// cycle edges were added in increasing σ order, and expanding it with cycle
// edge e_i (i larger than every edge already added) closes the fundamental
// cycle C* and removes one non-cycle edge of C*.
//
// * Naive mode removes every non-cycle edge of C* in turn. It reaches all
//   spanning trees, some of them several times.
// * Distinct mode splits C* at the junction v into a left part (v_i..v) and
//   a right part (v..v_{i+1}) and marks edges blue:
//     - removing a left edge marks the whole right part blue;
//     - removing right edge xw (x nearer v_{i+1}) marks the right part
//       below it, from x down to v_{i+1}, blue.
//   Blue edges are never removed further down the same branch. The colored
//   set travels with the branch; siblings never see each other's marks.
//
//   The junction is the lowest common ancestor of v_i and v_{i+1} in T'
//   rooted at the anchor: the top vertex of the characteristic-tree path
//   between v_p and v_1. For the default σ the anchor is the root of T.
//
//   The closing edge e_p (v_p v_1) is expanded differently: the only edges it
//   may remove are those of C* on the characteristic-tree path between v_p
//   and v_1, regardless of color. Nothing is expanded after e_p, so no marks
//   are produced there. With these two rules every spanning tree of H is
//   emitted exactly once, for every rotation and reflection of σ.

#ifndef HALIN_ENUMERATOR_H_
#define HALIN_ENUMERATOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "halin/enum_sink.h"
#include "halin/graph.h"
#include "halin/halin_graph.h"

namespace halin {

enum class EnumMode { kNaive, kDistinct };

std::string_view ModeName(EnumMode mode);

// Bitmask over HalinGraph edge ids.
using EdgeMask = boost::dynamic_bitset<std::uint64_t>;

// A spanning tree of H inside the computational tree.
struct PartialTree {
  // Current spanning tree: retained tree edges plus added cycle edges.
  EdgeMask edges;
  // Blue edges; always a subset of the retained tree edges.
  EdgeMask colored;
  // σ positions of the added cycle edges, strictly increasing.
  std::vector<std::uint32_t> added;

  static PartialTree Base(const HalinGraph& h);

  std::size_t level() const { return added.size(); }
  // Sorted edge list (edge ids follow lexicographic edge order).
  std::vector<Edge> Edges(const HalinGraph& h) const;
  EdgeSet KeptTreeEdges(const HalinGraph& h) const;
  EdgeSet ColoredEdges(const HalinGraph& h) const;
};

// Split of the fundamental cycle closed by cycle edge e_i.
struct CyclePartition {
  VertexId junction = 0;
  // Removable edges between v_i and the junction, ordered from v_i up.
  std::vector<Edge> left;
  // Removable edges between the junction and v_{i+1}, ordered downwards.
  std::vector<Edge> right;
  // Non-cycle edges of C* that may not be removed in this expansion: the
  // blue ones, or for the closing edge those off the face path.
  EdgeSet blocked;
};

// Partition of C* for adding cycle edge `cycle_index` (0-based σ position)
// to `tree`. Throws kEdgeInTree when that edge is already in the tree.
CyclePartition PartitionCycle(const HalinGraph& h, const PartialTree& tree,
                              std::size_t cycle_index);

// One exchange step: `parent` + cycle edge `cycle_index` - `removed`.
struct ExchangeStep {
  const PartialTree& parent;
  std::size_t cycle_index;
  EdgeId removed;
  const PartialTree& child;
};

struct EnumOptions {
  // Negative control: distinct mode without blue marks. Produces duplicates.
  bool disable_coloring = false;
  // Called for each emitted child before its subtree is expanded.
  std::function<void(const ExchangeStep&)> on_step;
};

EnumReport EnumerateNaive(const HalinGraph& h, EnumSink& sink,
                          const EnumOptions& options = {});
EnumReport EnumerateDistinct(const HalinGraph& h, EnumSink& sink,
                             const EnumOptions& options = {});
EnumReport Enumerate(const HalinGraph& h, EnumMode mode, EnumSink& sink,
                     const EnumOptions& options = {});

}  // namespace halin

#endif  // HALIN_ENUMERATOR_H_
