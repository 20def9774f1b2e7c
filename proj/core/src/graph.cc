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

#include "halin/graph.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <utility>

#include "halin/status.h"

namespace halin {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kEdgeInTree: return "EdgeInTree";
    case ErrorCode::kDegreeTwoVertex: return "DegreeTwoVertex";
    case ErrorCode::kTooFewLeaves: return "TooFewLeaves";
    case ErrorCode::kLeafOrderMismatch: return "LeafOrderMismatch";
    case ErrorCode::kInfeasibleParams: return "InfeasibleParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSinkOverflow: return "SinkOverflow";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

Edge Edge::Of(VertexId a, VertexId b) {
  if (a == b) {
    throw HalinError(ErrorCode::kInvalidArgument,
                     "self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string ToString(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) : members_(edges) {}

EdgeSet::EdgeSet(std::span<const Edge> edges)
    : members_(edges.begin(), edges.end()) {}

std::vector<Edge> EdgeSet::Sorted() const {
  std::vector<Edge> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalTreeKey::CanonicalTreeKey(std::vector<Edge> edges)
    : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw HalinError(ErrorCode::kInvalidArgument,
                     "duplicate edge in canonical key");
  }
}

CanonicalTreeKey CanonicalTreeKey::Parse(std::string_view text) {
  std::vector<Edge> edges;
  auto bad = [&] {
    return HalinError(ErrorCode::kParseError,
                      "malformed tree key: " + std::string(text));
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw bad();
    VertexId a = 0;
    VertexId b = 0;
    const auto ra = std::from_chars(item.data(), item.data() + dash, a);
    const auto rb =
        std::from_chars(item.data() + dash + 1, item.data() + item.size(), b);
    if (ra.ec != std::errc() || ra.ptr != item.data() + dash ||
        rb.ec != std::errc() || rb.ptr != item.data() + item.size()) {
      throw bad();
    }
    edges.push_back(Edge::Of(a, b));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return CanonicalTreeKey(std::move(edges));
}

std::string CanonicalTreeKey::ToString() const {
  std::string out;
  for (const Edge& e : edges_) {
    if (!out.empty()) out += ',';
    out += halin::ToString(e);
  }
  return out;
}

std::size_t CanonicalTreeKeyHash::operator()(
    const CanonicalTreeKey& key) const noexcept {
  std::size_t h = key.size();
  for (const Edge& e : key.edges()) {
    h ^= EdgeHash{}(e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

DisjointSets::DisjointSets(std::size_t n)
    : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::Find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::Union(std::size_t a, std::size_t b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

RootedTree::RootedTree(std::size_t num_vertices, std::span<const Edge> edges,
                       VertexId root)
    : root_(root),
      parent_(num_vertices, kNoParent),
      depth_(num_vertices, 0) {
  if (root >= num_vertices) {
    throw HalinError(ErrorCode::kInvalidArgument, "root out of range");
  }
  if (edges.size() + 1 != num_vertices) {
    throw HalinError(ErrorCode::kNotATree,
                     "expected " + std::to_string(num_vertices - 1) +
                         " edges, got " + std::to_string(edges.size()));
  }
  std::vector<std::vector<VertexId>> adj(num_vertices);
  for (const Edge& e : edges) {
    if (e.v >= num_vertices) {
      throw HalinError(ErrorCode::kInvalidArgument, "vertex out of range");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(num_vertices, false);
  std::deque<VertexId> queue{root};
  seen[root] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      ++reached;
      parent_[y] = x;
      depth_[y] = depth_[x] + 1;
      queue.push_back(y);
    }
  }
  // n-1 edges and connected implies acyclic.
  if (reached != num_vertices) {
    throw HalinError(ErrorCode::kNotATree, "edge set is not connected");
  }
}

VertexId RootedTree::Lca(VertexId a, VertexId b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

std::vector<Edge> RootedTree::Path(VertexId a, VertexId b) const {
  std::vector<Edge> from_a;
  std::vector<Edge> from_b;
  while (depth_[a] > depth_[b]) {
    from_a.push_back(Edge::Of(a, parent_[a]));
    a = parent_[a];
  }
  while (depth_[b] > depth_[a]) {
    from_b.push_back(Edge::Of(b, parent_[b]));
    b = parent_[b];
  }
  while (a != b) {
    from_a.push_back(Edge::Of(a, parent_[a]));
    from_b.push_back(Edge::Of(b, parent_[b]));
    a = parent_[a];
    b = parent_[b];
  }
  from_a.insert(from_a.end(), from_b.rbegin(), from_b.rend());
  return from_a;
}

bool IsSpanningTree(std::span<const Edge> candidate,
                    std::size_t num_vertices) {
  if (num_vertices == 0 || candidate.size() + 1 != num_vertices) return false;
  DisjointSets sets(num_vertices);
  for (const Edge& e : candidate) {
    if (e.u == e.v || e.v >= num_vertices) return false;
    if (!sets.Union(e.u, e.v)) return false;
  }
  return sets.components() == 1;
}

bool IsSpanningTree(const EdgeSet& candidate, std::size_t num_vertices) {
  const std::vector<Edge> edges = candidate.Sorted();
  return IsSpanningTree(std::span<const Edge>(edges), num_vertices);
}

std::vector<Edge> TreePath(std::size_t num_vertices, const EdgeSet& tree,
                           VertexId a, VertexId b) {
  if (a >= num_vertices || b >= num_vertices) {
    throw HalinError(ErrorCode::kInvalidArgument, "path endpoint out of range");
  }
  const std::vector<Edge> edges = tree.Sorted();
  return RootedTree(num_vertices, edges, a).Path(a, b);
}

std::vector<Edge> FundamentalCycle(std::size_t num_vertices,
                                   const EdgeSet& tree, const Edge& e) {
  if (tree.Contains(e)) {
    throw HalinError(ErrorCode::kEdgeInTree,
                     "edge " + ToString(e) + " is already in the tree");
  }
  std::vector<Edge> cycle{e};
  const std::vector<Edge> path = TreePath(num_vertices, tree, e.v, e.u);
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

CanonicalTreeKey CanonicalKey(const EdgeSet& tree) {
  return CanonicalTreeKey(tree.Sorted());
}

CanonicalTreeKey CanonicalKey(std::span<const Edge> tree) {
  return CanonicalTreeKey(std::vector<Edge>(tree.begin(), tree.end()));
}

}  // namespace halin
