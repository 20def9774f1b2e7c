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

#include "halin/enumerator.h"

#include <algorithm>
#include <limits>
#include <string>

#include "expander.h"
#include "halin/status.h"

namespace halin {
namespace internal {
namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

}  // namespace

Expander::Expander(const HalinGraph& h, EnumMode mode,
                   const EnumOptions& options)
    : h_(h), mode_(mode), options_(options), closing_face_(h.num_edges()) {
  if (h.p() == 0) return;
  const auto [vp, v1] = h.cycle_ends(h.p() - 1);
  VertexId a = vp;
  VertexId b = v1;
  while (a != b) {
    if (h.depth_of(a) >= h.depth_of(b)) {
      closing_face_.set(*h.FindEdge(Edge::Of(a, h.parent(a))));
      a = h.parent(a);
    } else {
      closing_face_.set(*h.FindEdge(Edge::Of(b, h.parent(b))));
      b = h.parent(b);
    }
  }
  anchor_ = a;
}

CycleScan Expander::Scan(const EdgeMask& tree, std::size_t cycle_index) const {
  const EdgeId added = h_.cycle_edge_id(cycle_index);
  if (tree.test(added)) {
    throw HalinError(ErrorCode::kEdgeInTree,
                     "cycle edge " + ToString(h_.edge(added)) +
                         " is already in the tree");
  }
  const std::size_t n = h_.n();
  std::vector<VertexId> up(n, kNone);
  std::vector<EdgeId> up_edge(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  queue.push_back(anchor_);
  up[anchor_] = anchor_;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (const Incidence& inc : h_.incident(v)) {
      if (!tree.test(inc.edge) || up[inc.to] != kNone) continue;
      up[inc.to] = v;
      up_edge[inc.to] = inc.edge;
      depth[inc.to] = depth[v] + 1;
      queue.push_back(inc.to);
    }
  }
  if (queue.size() != n) {
    throw HalinError(ErrorCode::kNotATree, "edge mask does not span H");
  }

  CycleScan scan;
  auto [a, b] = h_.cycle_ends(cycle_index);
  std::vector<EdgeId> from_right;
  while (a != b) {
    if (depth[a] >= depth[b]) {
      if (!h_.is_cycle_edge(up_edge[a])) scan.left_path.push_back(up_edge[a]);
      a = up[a];
    } else {
      if (!h_.is_cycle_edge(up_edge[b])) from_right.push_back(up_edge[b]);
      b = up[b];
    }
  }
  scan.junction = a;
  scan.right_path.assign(from_right.rbegin(), from_right.rend());
  return scan;
}

IdPartition Expander::Partition(const PartialTree& tree,
                                std::size_t cycle_index) const {
  CycleScan scan = Scan(tree.edges, cycle_index);
  IdPartition part;
  part.junction = scan.junction;
  const bool closing = is_closing(cycle_index);
  auto removable = [&](EdgeId e) {
    return closing ? closing_face_.test(e) : !tree.colored.test(e);
  };
  for (EdgeId e : scan.left_path) {
    (removable(e) ? part.left : part.blocked).push_back(e);
  }
  for (std::size_t k = 0; k < scan.right_path.size(); ++k) {
    const EdgeId e = scan.right_path[k];
    if (removable(e)) {
      part.right.push_back(e);
      part.right_pos.push_back(k);
    } else {
      part.blocked.push_back(e);
    }
  }
  part.right_path = std::move(scan.right_path);
  return part;
}

PartialTree Expander::MakeChild(const PartialTree& tree,
                                std::size_t cycle_index,
                                EdgeId removed) const {
  PartialTree child{tree.edges, tree.colored, tree.added};
  child.edges.reset(removed);
  child.edges.set(h_.cycle_edge_id(cycle_index));
  child.colored.reset(removed);
  child.added.push_back(static_cast<std::uint32_t>(cycle_index));
  return child;
}

void Expander::EdgesOf(const PartialTree& tree, std::vector<Edge>& out) const {
  out.clear();
  for (auto id = tree.edges.find_first(); id != EdgeMask::npos;
       id = tree.edges.find_next(id)) {
    out.push_back(h_.edge(static_cast<EdgeId>(id)));
  }
}

}  // namespace internal

namespace {

class SequentialRun {
 public:
  SequentialRun(const HalinGraph& h, EnumMode mode, EnumSink& sink,
                const EnumOptions& options)
      : h_(h), expander_(h, mode, options), sink_(sink),
        wants_edges_(sink.wants_edges()) {}

  EnumReport Run() {
    sink_.Start();
    const PartialTree base = PartialTree::Base(h_);
    Emit(base);
    for (std::size_t i = 0; i < h_.p(); ++i) Expand(base, i);
    EnumReport report = sink_.Report(h_.p() + 1);
    report.expansions = expansions_;
    return report;
  }

 private:
  void Emit(const PartialTree& t) {
    if (wants_edges_) expander_.EdgesOf(t, scratch_);
    sink_.Emit(t.level(), scratch_);
  }

  void Expand(const PartialTree& t, std::size_t i) {
    ++expansions_;
    expander_.Expand(t, i, [&](PartialTree&& child) {
      Emit(child);
      for (std::size_t j = i + 1; j < h_.p(); ++j) Expand(child, j);
    });
  }

  const HalinGraph& h_;
  internal::Expander expander_;
  EnumSink& sink_;
  bool wants_edges_;
  std::vector<Edge> scratch_;
  std::uint64_t expansions_ = 0;
};

}  // namespace

std::string_view ModeName(EnumMode mode) {
  return mode == EnumMode::kNaive ? "naive" : "distinct";
}

PartialTree PartialTree::Base(const HalinGraph& h) {
  PartialTree t{EdgeMask(h.num_edges()), EdgeMask(h.num_edges()), {}};
  for (EdgeId id : h.tree_edge_ids()) t.edges.set(id);
  return t;
}

std::vector<Edge> PartialTree::Edges(const HalinGraph& h) const {
  std::vector<Edge> out;
  for (auto id = edges.find_first(); id != EdgeMask::npos;
       id = edges.find_next(id)) {
    out.push_back(h.edge(static_cast<EdgeId>(id)));
  }
  return out;
}

EdgeSet PartialTree::KeptTreeEdges(const HalinGraph& h) const {
  EdgeSet out;
  for (auto id = edges.find_first(); id != EdgeMask::npos;
       id = edges.find_next(id)) {
    if (!h.is_cycle_edge(static_cast<EdgeId>(id))) {
      out.Insert(h.edge(static_cast<EdgeId>(id)));
    }
  }
  return out;
}

EdgeSet PartialTree::ColoredEdges(const HalinGraph& h) const {
  EdgeSet out;
  for (auto id = colored.find_first(); id != EdgeMask::npos;
       id = colored.find_next(id)) {
    out.Insert(h.edge(static_cast<EdgeId>(id)));
  }
  return out;
}

CyclePartition PartitionCycle(const HalinGraph& h, const PartialTree& tree,
                              std::size_t cycle_index) {
  if (cycle_index >= h.p()) {
    throw HalinError(ErrorCode::kInvalidArgument,
                     "cycle index " + std::to_string(cycle_index) +
                         " out of range");
  }
  const EnumOptions options;
  const internal::Expander expander(h, EnumMode::kDistinct, options);
  const internal::IdPartition ids = expander.Partition(tree, cycle_index);
  CyclePartition out;
  out.junction = ids.junction;
  for (EdgeId e : ids.left) out.left.push_back(h.edge(e));
  for (EdgeId e : ids.right) out.right.push_back(h.edge(e));
  for (EdgeId e : ids.blocked) out.blocked.Insert(h.edge(e));
  return out;
}

EnumReport EnumerateNaive(const HalinGraph& h, EnumSink& sink,
                          const EnumOptions& options) {
  return SequentialRun(h, EnumMode::kNaive, sink, options).Run();
}

EnumReport EnumerateDistinct(const HalinGraph& h, EnumSink& sink,
                             const EnumOptions& options) {
  return SequentialRun(h, EnumMode::kDistinct, sink, options).Run();
}

EnumReport Enumerate(const HalinGraph& h, EnumMode mode, EnumSink& sink,
                     const EnumOptions& options) {
  return SequentialRun(h, mode, sink, options).Run();
}

}  // namespace halin
