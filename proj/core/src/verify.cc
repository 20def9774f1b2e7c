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

#include "halin/verify.h"

#include <set>
#include <sstream>

#include "halin/parallel.h"

namespace halin {

bool CheckVerdict::passed() const {
  for (const CheckClause& c : clauses) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<std::string> CheckVerdict::failures() const {
  std::vector<std::string> out;
  for (const CheckClause& c : clauses) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

CheckVerdict CheckGraph(const HalinGraph& h, const CheckOptions& options) {
  CheckVerdict v;
  v.n = h.n();
  v.p = h.p();
  v.d = h.d();
  v.kirchhoff = KirchhoffCount(h.n(), h.edges()).value;

  const bool track = v.kirchhoff <= options.max_tracked_trees;
  SinkOptions sopts;
  sopts.track_keys = track;
  sopts.track_delays = false;
  EnumSink sink(sopts);
  ConcurrentSink shared(sink);
  ParallelOptions popts;
  popts.workers = options.workers;
  popts.enum_options = options.enum_options;
  v.report = RunParallel(h, EnumMode::kDistinct, shared, popts).enum_report;

  {
    CheckClause c;
    c.name = "count";
    c.passed = BigInt(v.report.total_emitted) == v.kirchhoff;
    c.detail = std::to_string(v.report.total_emitted) + " emitted, " +
               v.kirchhoff.str() + " by Kirchhoff";
    v.clauses.push_back(c);
  }
  {
    CheckClause c;
    c.name = "set";
    if (!track || h.n() > options.guard) {
      c.skipped = true;
      c.detail = "above oracle guard";
    } else {
      const auto brute = BruteForceTrees(h.n(), h.edges(), options.guard);
      v.brute_force_size = brute.size();
      std::size_t missing = 0;
      for (const CanonicalTreeKey& k : brute) {
        if (!sink.multiplicities().contains(k)) ++missing;
      }
      std::size_t extra = 0;
      for (const auto& [k, tally] : sink.multiplicities()) {
        if (!brute.contains(k)) ++extra;
      }
      c.passed = missing == 0 && extra == 0;
      c.detail = std::to_string(brute.size()) + " brute-force trees, " +
                 std::to_string(missing) + " missing, " +
                 std::to_string(extra) + " extra";
    }
    v.clauses.push_back(c);
  }
  {
    CheckClause c;
    c.name = "unique";
    if (!track) {
      c.skipped = true;
      c.detail = "keys not tracked";
    } else {
      std::ostringstream detail;
      std::size_t repeated = 0;
      // Sorted so the listed keys are reproducible.
      std::set<std::string> listed;
      for (const auto& [k, tally] : sink.multiplicities()) {
        if (tally.count < 2) continue;
        ++repeated;
        std::string text;
        for (const Edge& e : k.edges()) {
          text += (text.empty() ? "" : ",") + h.EdgeLabel(e);
        }
        listed.insert(text + " x" + std::to_string(tally.count));
      }
      c.passed = repeated == 0;
      detail << repeated << " duplicate keys";
      std::size_t shown = 0;
      for (const std::string& s : listed) {
        if (shown++ == options.max_listed) break;
        detail << (shown == 1 ? ": " : "; ") << s;
      }
      c.detail = detail.str();
    }
    v.clauses.push_back(c);
  }
  {
    CheckClause c;
    c.name = "depth";
    c.passed = CheckDepthBound(h);
    c.detail = "d=" + std::to_string(h.d()) + " limit " +
               std::to_string(h.n() / 2 - 1);
    v.clauses.push_back(c);
  }
  const BoundSet bounds = ComputeBounds(h.p(), h.d());
  {
    CheckClause c;
    c.name = "level_bounds";
    std::ostringstream detail;
    for (const LevelCount& lc : v.report.per_level) {
      const BigInt limit =
          lc.level < bounds.per_level.size() ? bounds.per_level[lc.level] : 0;
      if (BigInt(lc.emitted) > limit) {
        c.passed = false;
        detail << "level " << lc.level << ": " << lc.emitted << " > "
               << limit << "; ";
      }
    }
    if (c.passed) detail << "all " << v.report.per_level.size() << " levels";
    c.detail = detail.str();
    v.clauses.push_back(c);
  }
  {
    CheckClause c;
    c.name = "headline";
    c.passed = BigInt(v.report.total_emitted) <= bounds.headline;
    c.detail = std::to_string(v.report.total_emitted) + " <= " +
               bounds.headline.str();
    v.clauses.push_back(c);
  }
  return v;
}

}  // namespace halin
