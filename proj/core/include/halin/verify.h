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

// Batch verdict for one graph: engine output against both oracles and the
// closed-form bounds.

#ifndef HALIN_VERIFY_H_
#define HALIN_VERIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halin/bounds.h"
#include "halin/enum_sink.h"
#include "halin/enumerator.h"
#include "halin/halin_graph.h"
#include "halin/oracles.h"

namespace halin {

struct CheckOptions {
  EnumOptions enum_options;
  // Vertex limit for the brute-force set comparison.
  std::size_t guard = kBruteForceGuard;
  // Key tracking is skipped when the Kirchhoff count exceeds this.
  std::uint64_t max_tracked_trees = 2'000'000;
  std::size_t workers = 1;
  // Duplicate keys listed per failing clause.
  std::size_t max_listed = 5;
};

struct CheckClause {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct CheckVerdict {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t d = 0;
  EnumReport report;
  BigInt kirchhoff;
  std::optional<std::size_t> brute_force_size;
  std::vector<CheckClause> clauses;

  bool passed() const;
  // Names of the failing clauses.
  std::vector<std::string> failures() const;
};

// Clause names: "count", "set", "unique", "depth", "level_bounds",
// "headline".
CheckVerdict CheckGraph(const HalinGraph& h, const CheckOptions& options = {});

}  // namespace halin

#endif  // HALIN_VERIFY_H_
