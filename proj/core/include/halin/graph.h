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

// Generic undirected-graph vocabulary shared by the Halin model, the
// enumeration engines and the oracles: normalized edges, edge sets, path
// and cycle queries on trees, and canonical spanning-tree fingerprints.

#ifndef HALIN_GRAPH_H_
#define HALIN_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace halin {

// Dense vertex index in [0, n).
using VertexId = std::uint32_t;

// An undirected edge stored as (min, max). Orientation never matters for
// equality or hashing.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  // Normalizes the endpoint order. Throws kInvalidArgument on a self-loop.
  static Edge Of(VertexId a, VertexId b);

  bool Touches(VertexId x) const { return u == x || v == x; }
  // The endpoint that is not `x`. `x` must be an endpoint.
  VertexId Other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string ToString(const Edge& e);

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
  }
};

// Set of edges with O(1) amortized membership.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges);
  explicit EdgeSet(std::span<const Edge> edges);

  // Returns false when the edge was already present.
  bool Insert(const Edge& e) { return members_.insert(e).second; }
  bool Erase(const Edge& e) { return members_.erase(e) > 0; }
  bool Contains(const Edge& e) const { return members_.contains(e); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::vector<Edge> Sorted() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::unordered_set<Edge, EdgeHash> members_;
};

// Order-independent fingerprint of a spanning tree: its edges sorted
// lexicographically. Two trees of one graph have equal keys iff their edge
// sets are equal.
class CanonicalTreeKey {
 public:
  CanonicalTreeKey() = default;
  // `edges` may be in any order; duplicates are rejected.
  explicit CanonicalTreeKey(std::vector<Edge> edges);
  // Parses the `u-v,u-v,...` form produced by ToString().
  static CanonicalTreeKey Parse(std::string_view text);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  std::string ToString() const;

  friend auto operator<=>(const CanonicalTreeKey&,
                          const CanonicalTreeKey&) = default;
  friend bool operator==(const CanonicalTreeKey&,
                         const CanonicalTreeKey&) = default;

 private:
  std::vector<Edge> edges_;
};

struct CanonicalTreeKeyHash {
  std::size_t operator()(const CanonicalTreeKey& key) const noexcept;
};

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t Find(std::size_t x);
  // Returns false when `a` and `b` were already joined.
  bool Union(std::size_t a, std::size_t b);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

// A spanning tree over vertices [0, n) rooted at `root`, answering path and
// lowest-common-ancestor queries by walking parent pointers.
class RootedTree {
 public:
  static constexpr VertexId kNoParent = static_cast<VertexId>(-1);

  // Throws kNotATree unless `edges` is a spanning tree of [0, n).
  RootedTree(std::size_t num_vertices, std::span<const Edge> edges,
             VertexId root = 0);

  std::size_t num_vertices() const { return parent_.size(); }
  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }

  VertexId Lca(VertexId a, VertexId b) const;
  // Edges of the unique a→b path, in walking order.
  std::vector<Edge> Path(VertexId a, VertexId b) const;

 private:
  VertexId root_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> depth_;
};

bool IsSpanningTree(std::span<const Edge> candidate, std::size_t num_vertices);
bool IsSpanningTree(const EdgeSet& candidate, std::size_t num_vertices);

// Edges of the unique a→b path in `tree`; empty when a == b. Throws
// kNotATree when `tree` is not a spanning tree of [0, n).
std::vector<Edge> TreePath(std::size_t num_vertices, const EdgeSet& tree,
                           VertexId a, VertexId b);

// The cycle closed by adding `e` to `tree`: `e` first, then the tree path
// from e.v back to e.u. Throws kEdgeInTree when `e` is already a tree edge.
std::vector<Edge> FundamentalCycle(std::size_t num_vertices,
                                   const EdgeSet& tree, const Edge& e);

CanonicalTreeKey CanonicalKey(const EdgeSet& tree);
CanonicalTreeKey CanonicalKey(std::span<const Edge> tree);

}  // namespace halin

#endif  // HALIN_GRAPH_H_
