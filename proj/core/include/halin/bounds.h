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

// Closed-form bounds on the computational tree of a Halin graph with p
// leaves and characteristic-tree depth d.

#ifndef HALIN_BOUNDS_H_
#define HALIN_BOUNDS_H_

#include <cstddef>
#include <vector>

#include "halin/halin_graph.h"
#include "halin/oracles.h"

namespace halin {

struct BoundSet {
  std::size_t p = 0;
  std::size_t d = 0;
  // per_level[i] = C(p,i) * i! * (2d)^i for i in [0, p-1].
  std::vector<BigInt> per_level;
  BigInt total;
  // (2pd)^p
  BigInt headline;

  // Trees below one level-i node of the computational tree: i! * (2d)^i.
  BigInt NodeBound(std::size_t i) const;
};

// Throws kInvalidParams unless p >= 3 and d >= 1.
BoundSet ComputeBounds(std::size_t p, std::size_t d);

// d <= floor(n/2) - 1.
bool CheckDepthBound(const HalinGraph& h);

}  // namespace halin

#endif  // HALIN_BOUNDS_H_
