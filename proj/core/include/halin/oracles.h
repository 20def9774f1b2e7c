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

// Ground truth that shares no code with the enumerators.

#ifndef HALIN_ORACLES_H_
#define HALIN_ORACLES_H_

#include <cstddef>
#include <set>
#include <span>

#include <boost/multiprecision/cpp_int.hpp>

#include "halin/graph.h"

namespace halin {

using BigInt = boost::multiprecision::cpp_int;

struct ExactCount {
  BigInt value;
  // False when the graph is disconnected; value is then 0.
  bool connected = true;
};

// Number of spanning trees by the matrix-tree theorem, with fraction-free
// Bareiss elimination over arbitrary-precision integers.
ExactCount KirchhoffCount(std::size_t num_vertices, std::span<const Edge> edges);
ExactCount KirchhoffCount(std::size_t num_vertices, const EdgeSet& edges);

inline constexpr std::size_t kBruteForceGuard = 14;
// Edge count up to which subsets are filtered directly.
inline constexpr std::size_t kSubsetFilterMaxEdges = 24;

// Every spanning tree of the graph. Filters all (n-1)-subsets for small edge
// counts and grows trees by backtracking otherwise. Throws kTooLarge above
// `guard` vertices.
std::set<CanonicalTreeKey> BruteForceTrees(std::size_t num_vertices,
                                           std::span<const Edge> edges,
                                           std::size_t guard = kBruteForceGuard);

}  // namespace halin

#endif  // HALIN_ORACLES_H_
