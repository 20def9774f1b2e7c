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

#ifndef HALIN_HALIN_GRAPH_H_
#define HALIN_HALIN_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halin/graph.h"

namespace halin {

// Label-level description of a characteristic tree: the root, every internal
// vertex with its children listed left to right, and optionally an explicit
// cyclic order of the leaves.
struct TreeSpec {
  std::string root;
  std::vector<std::pair<std::string, std::vector<std::string>>> children;
  std::optional<std::vector<std::string>> cycle;
};

// Dense edge index into HalinGraph::edges().
using EdgeId = std::uint32_t;

struct Incidence {
  VertexId to;
  EdgeId edge;
};

// A Halin graph H = T ∪ C with T rooted at root() and the accompanying cycle
// C given by the leaf sequence v_1..v_p (cycle_vertex(0..p-1)). Cycle edge i
// joins cycle_vertex(i) to cycle_vertex((i + 1) % p); the last one closes the
// cycle.
//
// Vertex ids are assigned in preorder of the children ordering, so the root
// is always vertex 0. Edge ids follow lexicographic order of the normalized
// endpoint pairs, which makes any ascending id scan emit a sorted edge list.
//
// Immutable after construction.
class HalinGraph {
 public:
  // Validates `spec`. Throws kNotATree, kDegreeTwoVertex, kTooFewLeaves,
  // kLeafOrderMismatch or kInvalidArgument.
  static HalinGraph Build(const TreeSpec& spec);

  std::size_t n() const { return labels_.size(); }
  std::size_t p() const { return cycle_.size(); }
  std::size_t d() const { return depth_; }
  std::size_t num_edges() const { return edges_.size(); }
  VertexId root() const { return 0; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> FindLabel(std::string_view label) const;

  VertexId parent(VertexId v) const { return parent_[v]; }
  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  std::uint32_t depth_of(VertexId v) const { return depth_of_[v]; }
  bool is_leaf(VertexId v) const { return children_[v].empty(); }

  VertexId cycle_vertex(std::size_t i) const { return cycle_[i]; }
  std::span<const VertexId> cycle_vertices() const { return cycle_; }
  // (v_i, v_{i+1}) for cycle edge i, orientation included.
  std::pair<VertexId, VertexId> cycle_ends(std::size_t i) const {
    return {cycle_[i], cycle_[(i + 1) % cycle_.size()]};
  }
  Edge cycle_edge(std::size_t i) const;
  EdgeId cycle_edge_id(std::size_t i) const { return cycle_edge_ids_[i]; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::optional<EdgeId> FindEdge(const Edge& e) const;
  bool is_cycle_edge(EdgeId id) const { return cycle_index_[id] >= 0; }
  // Position of a cycle edge in σ, or -1 for tree edges.
  int cycle_index(EdgeId id) const { return cycle_index_[id]; }
  std::span<const EdgeId> tree_edge_ids() const { return tree_edge_ids_; }
  std::vector<Edge> TreeEdges() const;
  std::span<const Incidence> incident(VertexId v) const { return adj_[v]; }

  // Rotation of σ relative to the TreeSpec leaf order.
  std::size_t sigma_start() const { return sigma_start_; }
  // Same graph with v_1 moved to position `start` of the current order.
  HalinGraph WithSigmaStart(std::size_t start) const;

  // Label-level TreeSpec that rebuilds this graph. The cycle line is included
  // when the order was given explicitly or rotated.
  TreeSpec ToSpec() const;

  std::string EdgeLabel(const Edge& e) const;

 private:
  HalinGraph() = default;
  void IndexEdges();

  std::vector<std::string> labels_;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::uint32_t> depth_of_;
  std::size_t depth_ = 0;
  std::vector<VertexId> cycle_;
  bool explicit_cycle_ = false;
  std::size_t sigma_start_ = 0;

  std::vector<Edge> edges_;
  std::vector<int> cycle_index_;
  std::vector<EdgeId> cycle_edge_ids_;
  std::vector<EdgeId> tree_edge_ids_;
  std::vector<std::vector<Incidence>> adj_;
};

inline HalinGraph BuildHalin(const TreeSpec& spec) {
  return HalinGraph::Build(spec);
}

// Length of the longest root-to-leaf path of the characteristic tree.
inline std::size_t Depth(const HalinGraph& h) { return h.d(); }

// Grows a characteristic tree top-down from a root with 3..max_children
// children, expanding leaves into 2..max_children children, then closes the
// leaf cycle. Labels are the preorder ids. Deterministic for a given seed;
// n lands on target_n except when the last step has to overshoot by one.
// Throws kInfeasibleParams when target_n < 4 or max_children < 3.
HalinGraph RandomHalin(std::uint64_t seed, std::size_t target_n,
                       std::size_t max_children);

}  // namespace halin

#endif  // HALIN_HALIN_GRAPH_H_
