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

#include "halin/halin_graph.h"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "halin/status.h"

namespace halin {
namespace {

constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// True when `candidate` is `base` read cyclically forwards or backwards.
bool IsRotationOrReflection(std::span<const VertexId> base,
                            std::span<const VertexId> candidate) {
  const std::size_t p = base.size();
  if (candidate.size() != p) return false;
  const auto it = std::find(base.begin(), base.end(), candidate[0]);
  if (it == base.end()) return false;
  const std::size_t offset = static_cast<std::size_t>(it - base.begin());
  bool forward = true;
  bool backward = true;
  for (std::size_t k = 0; k < p; ++k) {
    forward = forward && candidate[k] == base[(offset + k) % p];
    backward = backward && candidate[k] == base[(offset + p - k) % p];
  }
  return forward || backward;
}

// Uniform integer in [lo, hi] from raw engine output; unlike
// std::uniform_int_distribution this is identical across standard libraries.
std::size_t UniformIn(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::size_t>(x % span);
}

}  // namespace

HalinGraph HalinGraph::Build(const TreeSpec& spec) {
  std::unordered_map<std::string, const std::vector<std::string>*> kids;
  for (const auto& [vertex, children] : spec.children) {
    if (!kids.emplace(vertex, &children).second) {
      throw HalinError(ErrorCode::kNotATree,
                       "vertex " + vertex + " has two child lists");
    }
  }
  if (spec.root.empty()) {
    throw HalinError(ErrorCode::kInvalidArgument, "missing root");
  }

  HalinGraph h;
  std::unordered_map<std::string, VertexId> ids;
  // Preorder: root is 0 and every subtree occupies a contiguous id range.
  std::vector<std::pair<std::string, VertexId>> stack{{spec.root, kNoVertex}};
  while (!stack.empty()) {
    auto [label, parent] = std::move(stack.back());
    stack.pop_back();
    const VertexId id = static_cast<VertexId>(h.labels_.size());
    if (!ids.emplace(label, id).second) {
      throw HalinError(ErrorCode::kNotATree,
                       "vertex " + label + " is reached twice");
    }
    h.labels_.push_back(label);
    h.parent_.push_back(parent);
    h.children_.emplace_back();
    h.depth_of_.push_back(parent == kNoVertex ? 0 : h.depth_of_[parent] + 1);
    if (parent != kNoVertex) h.children_[parent].push_back(id);
    if (auto it = kids.find(label); it != kids.end()) {
      const auto& list = *it->second;
      for (auto c = list.rbegin(); c != list.rend(); ++c) {
        stack.emplace_back(*c, id);
      }
    }
  }
  for (const auto& [vertex, children] : spec.children) {
    if (!ids.contains(vertex)) {
      throw HalinError(ErrorCode::kNotATree,
                       "vertex " + vertex + " is not reachable from root " +
                           spec.root);
    }
  }

  const std::size_t root_children = h.children_[0].size();
  if (root_children == 2) {
    throw HalinError(ErrorCode::kDegreeTwoVertex,
                     "vertex " + spec.root + " has degree two");
  }
  if (root_children < 3 && h.labels_.size() > 1) {
    throw HalinError(ErrorCode::kInvalidArgument,
                     "root " + spec.root + " needs at least three children");
  }
  for (VertexId v = 1; v < h.labels_.size(); ++v) {
    if (h.children_[v].size() == 1) {
      throw HalinError(ErrorCode::kDegreeTwoVertex,
                       "vertex " + h.labels_[v] + " has degree two");
    }
  }

  std::vector<VertexId> traversal;
  for (VertexId v = 0; v < h.labels_.size(); ++v) {
    if (h.children_[v].empty()) traversal.push_back(v);
    h.depth_ = std::max<std::size_t>(h.depth_, h.depth_of_[v]);
  }
  if (traversal.size() < 3) {
    throw HalinError(ErrorCode::kTooFewLeaves,
                     "need at least 3 leaves, got " +
                         std::to_string(traversal.size()));
  }

  if (spec.cycle) {
    std::vector<VertexId> order;
    order.reserve(spec.cycle->size());
    for (const std::string& label : *spec.cycle) {
      auto it = ids.find(label);
      if (it == ids.end()) {
        throw HalinError(ErrorCode::kLeafOrderMismatch,
                         "cycle names unknown vertex " + label);
      }
      order.push_back(it->second);
    }
    if (!IsRotationOrReflection(traversal, order)) {
      throw HalinError(ErrorCode::kLeafOrderMismatch,
                       "cycle order is not a rotation or reflection of the "
                       "left-to-right leaf order");
    }
    h.cycle_ = std::move(order);
    h.explicit_cycle_ = true;
  } else {
    h.cycle_ = std::move(traversal);
  }

  h.IndexEdges();
  return h;
}

void HalinGraph::IndexEdges() {
  const std::size_t p = cycle_.size();
  std::vector<std::pair<Edge, int>> tagged;
  tagged.reserve(labels_.size() - 1 + p);
  for (VertexId v = 1; v < labels_.size(); ++v) {
    tagged.emplace_back(Edge::Of(v, parent_[v]), -1);
  }
  for (std::size_t i = 0; i < p; ++i) {
    tagged.emplace_back(cycle_edge(i), static_cast<int>(i));
  }
  std::sort(tagged.begin(), tagged.end());

  edges_.clear();
  cycle_index_.clear();
  tree_edge_ids_.clear();
  cycle_edge_ids_.assign(p, 0);
  adj_.assign(labels_.size(), {});
  for (const auto& [e, index] : tagged) {
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    cycle_index_.push_back(index);
    if (index < 0) {
      tree_edge_ids_.push_back(id);
    } else {
      cycle_edge_ids_[index] = id;
    }
    adj_[e.u].push_back({e.v, id});
    adj_[e.v].push_back({e.u, id});
  }
}

std::optional<VertexId> HalinGraph::FindLabel(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

Edge HalinGraph::cycle_edge(std::size_t i) const {
  const auto [a, b] = cycle_ends(i);
  return Edge::Of(a, b);
}

std::optional<EdgeId> HalinGraph::FindEdge(const Edge& e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::vector<Edge> HalinGraph::TreeEdges() const {
  std::vector<Edge> out;
  out.reserve(tree_edge_ids_.size());
  for (EdgeId id : tree_edge_ids_) out.push_back(edges_[id]);
  return out;
}

HalinGraph HalinGraph::WithSigmaStart(std::size_t start) const {
  if (start >= cycle_.size()) {
    throw HalinError(ErrorCode::kInvalidArgument,
                     "sigma start " + std::to_string(start) +
                         " out of range for p=" +
                         std::to_string(cycle_.size()));
  }
  HalinGraph out = *this;
  std::rotate(out.cycle_.begin(), out.cycle_.begin() + start,
              out.cycle_.end());
  out.sigma_start_ = (sigma_start_ + start) % cycle_.size();
  out.IndexEdges();
  return out;
}

TreeSpec HalinGraph::ToSpec() const {
  TreeSpec spec;
  spec.root = labels_[0];
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (children_[v].empty()) continue;
    std::vector<std::string> names;
    for (VertexId c : children_[v]) names.push_back(labels_[c]);
    spec.children.emplace_back(labels_[v], std::move(names));
  }
  if (explicit_cycle_ || sigma_start_ != 0) {
    std::vector<std::string> names;
    for (VertexId v : cycle_) names.push_back(labels_[v]);
    spec.cycle = std::move(names);
  }
  return spec;
}

std::string HalinGraph::EdgeLabel(const Edge& e) const {
  return labels_[e.u] + "-" + labels_[e.v];
}

HalinGraph RandomHalin(std::uint64_t seed, std::size_t target_n,
                       std::size_t max_children) {
  if (target_n < 4) {
    throw HalinError(ErrorCode::kInfeasibleParams,
                     "a Halin graph has at least 4 vertices");
  }
  if (max_children < 3) {
    throw HalinError(ErrorCode::kInfeasibleParams,
                     "max_children must be at least 3 for the root");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> children(1);
  auto add_child = [&](std::size_t parent, std::size_t position) {
    children.emplace_back();
    auto& list = children[parent];
    list.insert(list.begin() + static_cast<std::ptrdiff_t>(position),
                children.size() - 1);
  };

  const std::size_t root_kids =
      UniformIn(rng, 3, std::min(max_children, target_n - 1));
  for (std::size_t k = 0; k < root_kids; ++k) add_child(0, k);

  while (children.size() < target_n) {
    const std::size_t remaining = target_n - children.size();
    std::vector<std::size_t> leaves;
    std::vector<std::size_t> roomy;
    for (std::size_t v = 0; v < children.size(); ++v) {
      if (children[v].empty()) {
        leaves.push_back(v);
      } else if (children[v].size() < max_children) {
        roomy.push_back(v);
      }
    }
    const bool expand =
        roomy.empty() || (remaining >= 2 && UniformIn(rng, 0, 1) == 0);
    if (expand) {
      const std::size_t leaf = leaves[UniformIn(rng, 0, leaves.size() - 1)];
      const std::size_t cap = std::max<std::size_t>(
          2, std::min(max_children, remaining));
      const std::size_t k = UniformIn(rng, 2, cap);
      for (std::size_t c = 0; c < k; ++c) add_child(leaf, c);
    } else {
      const std::size_t v = roomy[UniformIn(rng, 0, roomy.size() - 1)];
      add_child(v, UniformIn(rng, 0, children[v].size()));
    }
  }

  // Relabel in preorder so labels coincide with the ids Build() assigns.
  std::vector<std::size_t> preorder_id(children.size());
  std::size_t next = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    preorder_id[v] = next++;
    for (auto c = children[v].rbegin(); c != children[v].rend(); ++c) {
      stack.push_back(*c);
    }
  }
  TreeSpec spec;
  spec.root = "0";
  std::vector<std::size_t> order(children.size());
  for (std::size_t v = 0; v < children.size(); ++v) order[preorder_id[v]] = v;
  for (std::size_t v : order) {
    if (children[v].empty()) continue;
    std::vector<std::string> names;
    for (std::size_t c : children[v]) {
      names.push_back(std::to_string(preorder_id[c]));
    }
    spec.children.emplace_back(std::to_string(preorder_id[v]),
                               std::move(names));
  }
  return HalinGraph::Build(spec);
}

}  // namespace halin
