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

#include "halin/graph_format.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "halin/status.h"

namespace halin {
namespace {

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

HalinError ParseFailure(std::size_t line, const std::string& what) {
  return HalinError(ErrorCode::kParseError,
                    "line " + std::to_string(line) + ": " + what);
}

// Declared vertex count from the header, checked against the built graph.
struct ParsedFile {
  TreeSpec spec;
  std::size_t declared_n = 0;
};

ParsedFile Parse(std::string_view text) {
  ParsedFile out;
  bool seen_header = false;
  std::unordered_set<std::string> parents;
  std::unordered_set<std::string> as_child;
  std::vector<std::string> first_seen;
  std::size_t line_no = 0;

  while (!text.empty() || line_no == 0) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto colon = line.find(':');
    const auto head = Tokens(line.substr(0, colon));
    if (head.empty() && colon == std::string_view::npos) {
      if (text.empty()) break;
      continue;
    }

    if (!seen_header) {
      if (colon != std::string_view::npos || head.size() != 2 ||
          head[0] != "halin") {
        throw ParseFailure(line_no, "expected header `halin <n>`");
      }
      const auto r = std::from_chars(head[1].data(),
                                     head[1].data() + head[1].size(),
                                     out.declared_n);
      if (r.ec != std::errc() || r.ptr != head[1].data() + head[1].size()) {
        throw ParseFailure(line_no, "bad vertex count `" +
                                        std::string(head[1]) + "`");
      }
      seen_header = true;
      continue;
    }

    if (colon == std::string_view::npos || head.size() != 1) {
      throw ParseFailure(line_no, "expected `<vertex> : <children...>`");
    }
    const auto rest = Tokens(line.substr(colon + 1));
    if (head[0] == "cycle") {
      if (out.spec.cycle) throw ParseFailure(line_no, "second cycle line");
      out.spec.cycle.emplace(rest.begin(), rest.end());
      continue;
    }
    std::string vertex(head[0]);
    if (!parents.insert(vertex).second) {
      throw ParseFailure(line_no, "vertex " + vertex + " listed twice");
    }
    if (!as_child.contains(vertex)) first_seen.push_back(vertex);
    std::vector<std::string> kids;
    for (std::string_view c : rest) {
      std::string child(c);
      if (child == "cycle") {
        throw ParseFailure(line_no, "`cycle` is a reserved name");
      }
      if (!as_child.insert(child).second) {
        throw ParseFailure(line_no, "vertex " + child + " has two parents");
      }
      kids.push_back(std::move(child));
    }
    out.spec.children.emplace_back(std::move(vertex), std::move(kids));
  }

  if (!seen_header) throw ParseFailure(line_no, "empty input");
  std::vector<std::string> roots;
  for (const std::string& v : first_seen) {
    if (!as_child.contains(v)) roots.push_back(v);
  }
  if (roots.size() != 1) {
    throw ParseFailure(line_no, "expected exactly one root, found " +
                                    std::to_string(roots.size()));
  }
  out.spec.root = roots.front();
  return out;
}

}  // namespace

TreeSpec ParseTreeSpec(std::string_view text) { return Parse(text).spec; }

HalinGraph ParseHalinGraph(std::string_view text) {
  ParsedFile parsed = Parse(text);
  HalinGraph h = HalinGraph::Build(parsed.spec);
  if (h.n() != parsed.declared_n) {
    throw HalinError(ErrorCode::kParseError,
                     "line 1: header declares n=" +
                         std::to_string(parsed.declared_n) +
                         " but the tree has " + std::to_string(h.n()) +
                         " vertices");
  }
  return h;
}

std::string SerializeHalinGraph(const HalinGraph& h) {
  const TreeSpec spec = h.ToSpec();
  std::ostringstream out;
  out << "halin " << h.n() << "\n";
  for (const auto& [vertex, kids] : spec.children) {
    out << vertex << " :";
    for (const std::string& c : kids) out << ' ' << c;
    out << "\n";
  }
  if (spec.cycle) {
    out << "cycle:";
    for (const std::string& v : *spec.cycle) out << ' ' << v;
    out << "\n";
  }
  return out.str();
}

HalinGraph LoadHalinGraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw HalinError(ErrorCode::kParseError,
                     "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseHalinGraph(buf.str());
}

void SaveHalinGraph(const HalinGraph& h, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw HalinError(ErrorCode::kInvalidArgument,
                     "cannot write " + path.string());
  }
  out << SerializeHalinGraph(h);
}

}  // namespace halin
