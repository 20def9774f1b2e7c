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

// Shared fixtures for the unit and acceptance suites.

#ifndef HALIN_TESTS_SUPPORT_TEST_GRAPHS_H_
#define HALIN_TESTS_SUPPORT_TEST_GRAPHS_H_

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "halin/enum_sink.h"
#include "halin/enumerator.h"
#include "halin/halin_graph.h"
#include "halin/parallel.h"

namespace halin::testing {

// u with three leaf children; H is K4.
inline TreeSpec K4Spec() {
  return TreeSpec{"u", {{"u", {"v1", "v2", "v3"}}}, std::nullopt};
}

// Smallest depth-2 instance: n=6, p=4, d=2.
inline TreeSpec Depth2Spec() {
  return TreeSpec{"u", {{"u", {"a", "v3", "v4"}}, {"a", {"v1", "v2"}}},
                  std::nullopt};
}

// u:(1,2,3), 2:(4,5). Leaves 1,4,5,3. The first expansion can mark an edge
// of the right part of a later expansion blue.
inline TreeSpec BlueRightSpec() {
  return TreeSpec{"0", {{"0", {"1", "2", "3"}}, {"2", {"4", "5"}}},
                  std::nullopt};
}

struct CorpusEntry {
  std::uint64_t seed;
  HalinGraph graph;
};

// Deterministic random Halin graphs with n in [min_n, max_n].
inline std::vector<CorpusEntry> Corpus(std::size_t count,
                                       std::size_t min_n = 4,
                                       std::size_t max_n = 12,
                                       std::uint64_t first_seed = 1) {
  std::vector<CorpusEntry> out;
  for (std::uint64_t s = first_seed; out.size() < count; ++s) {
    const std::size_t target = min_n + s * 7 % (max_n - min_n + 1);
    const std::size_t max_children = 3 + s % 3;
    HalinGraph h = RandomHalin(s, target, max_children);
    if (h.n() < min_n || h.n() > max_n) continue;
    out.push_back({s, std::move(h)});
  }
  return out;
}

struct KeyRun {
  EnumReport report;
  // Canonical key -> multiplicity.
  std::map<CanonicalTreeKey, std::uint64_t> keys;
  // Emission order.
  std::vector<CanonicalTreeKey> order;

  std::set<CanonicalTreeKey> KeySet() const {
    std::set<CanonicalTreeKey> s;
    for (const auto& [k, c] : keys) s.insert(k);
    return s;
  }
  std::uint64_t MaxMultiplicity() const {
    std::uint64_t m = 0;
    for (const auto& [k, c] : keys) m = std::max(m, c);
    return m;
  }
};

inline KeyRun Collect(const EnumSink& sink, EnumReport report) {
  KeyRun run;
  run.report = std::move(report);
  for (const CanonicalTreeKey& k : sink.stored()) {
    ++run.keys[k];
    run.order.push_back(k);
  }
  return run;
}

inline KeyRun RunKeys(const HalinGraph& h, EnumMode mode,
                      const EnumOptions& options = {}) {
  SinkOptions so;
  so.mode = SinkMode::kStore;
  so.track_keys = true;
  EnumSink sink(so);
  EnumReport report = Enumerate(h, mode, sink, options);
  return Collect(sink, std::move(report));
}

inline KeyRun RunKeysParallel(const HalinGraph& h, EnumMode mode,
                              const ParallelOptions& options,
                              ParallelReport* parallel = nullptr) {
  SinkOptions so;
  so.mode = SinkMode::kStore;
  so.track_keys = true;
  EnumSink sink(so);
  ConcurrentSink shared(sink);
  ParallelResult result = RunParallel(h, mode, shared, options);
  if (parallel != nullptr) *parallel = result.parallel;
  return Collect(sink, std::move(result.enum_report));
}

}  // namespace halin::testing

#endif  // HALIN_TESTS_SUPPORT_TEST_GRAPHS_H_
