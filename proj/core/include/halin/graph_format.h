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

// Text format for Halin graphs:
//
//   halin <n>
//   <vertex> : <child> <child> ...     (one line per internal vertex)
//   cycle: <leaf> <leaf> ...           (optional explicit leaf order)
//
// Children are listed left to right. `#` starts a comment. The root is the
// only vertex that never appears as a child. "cycle" is reserved.

#ifndef HALIN_GRAPH_FORMAT_H_
#define HALIN_GRAPH_FORMAT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "halin/halin_graph.h"

namespace halin {

// Syntax only; throws kParseError with a line number. Structural checks
// are left to HalinGraph::Build().
TreeSpec ParseTreeSpec(std::string_view text);

// Parse + Build. Also rejects a header whose n disagrees with the tree.
HalinGraph ParseHalinGraph(std::string_view text);

std::string SerializeHalinGraph(const HalinGraph& h);

HalinGraph LoadHalinGraph(const std::filesystem::path& path);
void SaveHalinGraph(const HalinGraph& h, const std::filesystem::path& path);

}  // namespace halin

#endif  // HALIN_GRAPH_FORMAT_H_
