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

#include <algorithm>
#include <string>
#include <vector>

#include "halin/status.h"

namespace halin {
namespace {

std::vector<Edge> Dedup(std::span<const Edge> edges, std::size_t n) {
  std::vector<Edge> out(edges.begin(), edges.end());
  for (const Edge& e : out) {
    if (e.v >= n) {
      throw HalinError(ErrorCode::kInvalidArgument,
                       "edge " + ToString(e) + " out of range");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  DisjointSets ds(n);
  std::size_t parts = n;
  for (const Edge& e : edges) {
    if (ds.Union(e.u, e.v)) --parts;
  }
  return parts == 1;
}

void SubsetFilter(std::size_t n, const std::vector<Edge>& edges,
                  std::set<CanonicalTreeKey>& out) {
  const std::size_t m = edges.size();
  const std::size_t k = n - 1;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Edge> chosen(k);
  while (true) {
    DisjointSets ds(n);
    bool acyclic = true;
    for (std::size_t i = 0; i < k && acyclic; ++i) {
      chosen[i] = edges[pick[i]];
      acyclic = ds.Union(chosen[i].u, chosen[i].v);
    }
    if (acyclic) out.insert(CanonicalTreeKey(chosen));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Include/exclude each edge in order; prune when the remaining edges cannot
// complete a tree or the chosen ones close a cycle.
class Backtracker {
 public:
  Backtracker(std::size_t n, const std::vector<Edge>& edges,
              std::set<CanonicalTreeKey>& out)
      : n_(n), edges_(edges), out_(out) {}

  void Run() { Go(0); }

 private:
  bool Reaches(VertexId from, VertexId to) const {
    std::vector<bool> seen(n_, false);
    std::vector<VertexId> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (const Edge& e : chosen_) {
        if (!e.Touches(v)) continue;
        const VertexId w = e.Other(v);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  bool StillSpannable(std::size_t next) const {
    DisjointSets ds(n_);
    std::size_t parts = n_;
    for (const Edge& e : chosen_) parts -= ds.Union(e.u, e.v) ? 1 : 0;
    for (std::size_t i = next; i < edges_.size(); ++i) {
      parts -= ds.Union(edges_[i].u, edges_[i].v) ? 1 : 0;
    }
    return parts == 1;
  }

  void Go(std::size_t next) {
    if (chosen_.size() == n_ - 1) {
      out_.insert(CanonicalTreeKey(chosen_));
      return;
    }
    if (next == edges_.size() || !StillSpannable(next)) return;
    const Edge& e = edges_[next];
    if (!Reaches(e.u, e.v)) {
      chosen_.push_back(e);
      Go(next + 1);
      chosen_.pop_back();
    }
    Go(next + 1);
  }

  std::size_t n_;
  const std::vector<Edge>& edges_;
  std::set<CanonicalTreeKey>& out_;
  std::vector<Edge> chosen_;
};

}  // namespace

ExactCount KirchhoffCount(std::size_t num_vertices,
                          std::span<const Edge> edges) {
  const std::vector<Edge> simple = Dedup(edges, num_vertices);
  ExactCount result;
  if (num_vertices <= 1) {
    result.value = 1;
    return result;
  }
  if (!Connected(num_vertices, simple)) {
    result.value = 0;
    result.connected = false;
    return result;
  }
  // Laplacian with row and column 0 removed.
  const std::size_t m = num_vertices - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (const Edge& e : simple) {
    for (VertexId x : {e.u, e.v}) {
      if (x > 0) a[x - 1][x - 1] += 1;
    }
    if (e.u > 0 && e.v > 0) {
      a[e.u - 1][e.v - 1] -= 1;
      a[e.v - 1][e.u - 1] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < m && a[r][k] == 0) ++r;
      if (r == m) {
        result.value = 0;
        return result;
      }
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  result.value = sign * a[m - 1][m - 1];
  return result;
}

ExactCount KirchhoffCount(std::size_t num_vertices, const EdgeSet& edges) {
  const std::vector<Edge> list = edges.Sorted();
  return KirchhoffCount(num_vertices, list);
}

std::set<CanonicalTreeKey> BruteForceTrees(std::size_t num_vertices,
                                           std::span<const Edge> edges,
                                           std::size_t guard) {
  if (num_vertices > guard) {
    throw HalinError(ErrorCode::kTooLarge,
                     "brute force limited to n <= " + std::to_string(guard) +
                         ", got n=" + std::to_string(num_vertices));
  }
  const std::vector<Edge> simple = Dedup(edges, num_vertices);
  std::set<CanonicalTreeKey> out;
  if (num_vertices <= 1) {
    out.insert(CanonicalTreeKey(std::vector<Edge>{}));
    return out;
  }
  if (!Connected(num_vertices, simple)) return out;
  if (simple.size() <= kSubsetFilterMaxEdges) {
    SubsetFilter(num_vertices, simple, out);
  } else {
    Backtracker(num_vertices, simple, out).Run();
  }
  return out;
}

}  // namespace halin
