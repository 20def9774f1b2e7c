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

// Single (tree, cycle edge) expansion shared by the sequential and parallel
// engines. Stateless after construction, so one instance can serve every
// worker.

#ifndef HALIN_SRC_EXPANDER_H_
#define HALIN_SRC_EXPANDER_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "halin/enumerator.h"
#include "halin/halin_graph.h"

namespace halin::internal {

// Non-cycle edges of C*, split at the junction.
struct CycleScan {
  VertexId junction = 0;
  // From v_i up to the junction.
  std::vector<EdgeId> left_path;
  // From the junction down to v_{i+1}.
  std::vector<EdgeId> right_path;
};

struct IdPartition {
  VertexId junction = 0;
  std::vector<EdgeId> left;
  std::vector<EdgeId> right;
  std::vector<EdgeId> blocked;
  // right_path position of each `right` entry, for the below-f marks.
  std::vector<std::size_t> right_pos;
  std::vector<EdgeId> right_path;
};

class Expander {
 public:
  Expander(const HalinGraph& h, EnumMode mode, const EnumOptions& options);

  const HalinGraph& graph() const { return h_; }
  bool is_closing(std::size_t cycle_index) const {
    return cycle_index + 1 == h_.p();
  }

  CycleScan Scan(const EdgeMask& tree, std::size_t cycle_index) const;
  IdPartition Partition(const PartialTree& tree,
                        std::size_t cycle_index) const;

  // Calls on_child(PartialTree&&) once per tree produced by adding cycle
  // edge `cycle_index` to `tree`, in σ* order: left part, then right part.
  // Returns the number of children.
  template <typename OnChild>
  std::size_t Expand(const PartialTree& tree, std::size_t cycle_index,
                     OnChild&& on_child) const;

  // Edge list of `tree`, sorted.
  void EdgesOf(const PartialTree& tree, std::vector<Edge>& out) const;

 private:
  PartialTree MakeChild(const PartialTree& tree, std::size_t cycle_index,
                        EdgeId removed) const;

  const HalinGraph& h_;
  EnumMode mode_;
  const EnumOptions& options_;
  // Non-cycle edges on the characteristic-tree path v_p .. v_1.
  EdgeMask closing_face_;
  // Junctions are lowest common ancestors with T' rooted here: the top
  // vertex of the characteristic-tree path between v_p and v_1.
  VertexId anchor_ = 0;
};

template <typename OnChild>
std::size_t Expander::Expand(const PartialTree& tree, std::size_t cycle_index,
                             OnChild&& on_child) const {
  std::size_t produced = 0;
  auto emit = [&](EdgeId removed, const std::vector<EdgeId>* marks,
                  std::size_t marks_from) {
    PartialTree child = MakeChild(tree, cycle_index, removed);
    if (marks != nullptr) {
      for (std::size_t k = marks_from; k < marks->size(); ++k) {
        child.colored.set((*marks)[k]);
      }
    }
    if (options_.on_step) {
      options_.on_step(ExchangeStep{tree, cycle_index, removed, child});
    }
    ++produced;
    on_child(std::move(child));
  };

  if (mode_ == EnumMode::kNaive) {
    const CycleScan scan = Scan(tree.edges, cycle_index);
    for (EdgeId e : scan.left_path) emit(e, nullptr, 0);
    for (EdgeId e : scan.right_path) emit(e, nullptr, 0);
    return produced;
  }

  const IdPartition part = Partition(tree, cycle_index);
  const bool mark = !options_.disable_coloring && !is_closing(cycle_index);
  for (EdgeId e : part.left) {
    emit(e, mark ? &part.right_path : nullptr, 0);
  }
  for (std::size_t k = 0; k < part.right.size(); ++k) {
    emit(part.right[k], mark ? &part.right_path : nullptr,
         part.right_pos[k] + 1);
  }
  return produced;
}

}  // namespace halin::internal

#endif  // HALIN_SRC_EXPANDER_H_
