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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "halin/bounds.h"
#include "halin/enum_sink.h"
#include "halin/enumerator.h"
#include "halin/graph_format.h"
#include "halin/halin_graph.h"
#include "halin/oracles.h"
#include "halin/parallel.h"
#include "halin/status.h"
#include "halin/verify.h"

namespace halin::cli {
namespace {

using Json = nlohmann::ordered_json;

enum class Format { kHuman, kKeys, kJsonl };
enum class SinkChoice { kAuto, kStore, kStream, kCount };

// Failure with a ready exit code and message.
struct Failure {
  int code;
  std::string message;
};

struct InputOptions {
  std::string path;
  std::optional<std::size_t> random_n;
  std::uint64_t random_seed = 1;
  std::size_t max_children = 4;
  std::size_t sigma_start = 0;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidParams:
    case ErrorCode::kInfeasibleParams:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kSinkOverflow:
    case ErrorCode::kTooLarge:
      return kExitResource;
    default:
      return kExitInvalid;
  }
}

std::string Describe(const HalinError& e) {
  return "error: " + std::string(ErrorCodeName(e.code())) + ": " + e.what();
}

void AddInputOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.path, "Graph file");
  cmd->add_option("--random-n", in.random_n,
                  "Generate a random graph with about this many vertices");
  cmd->add_option("--random-seed", in.random_seed, "Generator seed");
  cmd->add_option("--max-children", in.max_children,
                  "Generator fan-out limit")
      ->check(CLI::Range(3, 64));
  cmd->add_option("--sigma-start", in.sigma_start,
                  "Index of the leaf that starts the cycle order");
}

HalinGraph LoadInput(const InputOptions& in) {
  if (in.path.empty() && !in.random_n) {
    throw Failure{kExitUsage, "error: need a graph file or --random-n"};
  }
  try {
    HalinGraph h = in.path.empty()
                       ? RandomHalin(in.random_seed, *in.random_n,
                                     in.max_children)
                       : LoadHalinGraph(in.path);
    if (in.sigma_start == 0) return h;
    if (in.sigma_start >= h.p()) {
      throw Failure{kExitUsage, "error: --sigma-start " +
                                    std::to_string(in.sigma_start) +
                                    " out of range for p=" +
                                    std::to_string(h.p())};
    }
    return h.WithSigmaStart(in.sigma_start);
  } catch (const HalinError& e) {
    const int code =
        e.code() == ErrorCode::kParseError ||
                e.code() == ErrorCode::kInfeasibleParams
            ? kExitUsage
            : kExitInvalid;
    throw Failure{code, Describe(e)};
  }
}

std::string TreeLabel(const HalinGraph& h, std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ',';
    out += h.EdgeLabel(e);
  }
  return out;
}

Json ReportJson(const HalinGraph& h, EnumMode mode, const EnumReport& r,
                const ParallelReport* par) {
  Json j;
  j["type"] = "report";
  j["mode"] = std::string(ModeName(mode));
  j["n"] = h.n();
  j["p"] = h.p();
  j["d"] = h.d();
  j["total"] = r.total_emitted;
  if (r.distinct_count) {
    j["distinct"] = *r.distinct_count;
    j["duplicates"] = r.duplicates();
  }
  Json levels = Json::array();
  for (const LevelCount& lc : r.per_level) levels.push_back(lc.emitted);
  j["per_level"] = levels;
  if (!r.duplicate_multiplicities.empty()) {
    Json hist = Json::object();
    for (const auto& [mult, keys] : r.duplicate_multiplicities) {
      hist[std::to_string(mult)] = keys;
    }
    j["multiplicities"] = hist;
  }
  j["expansions"] = r.expansions;
  j["max_delay_ns"] = r.max_delay.count();
  j["mean_delay_ns"] = r.mean_delay.count();
  j["partial"] = r.partial;
  if (par != nullptr) {
    Json p;
    p["workers"] = par->workers;
    p["tasks_spawned"] = par->tasks_spawned;
    p["max_task_depth"] = par->max_task_depth;
    p["wall_time_ns"] = par->wall_time.count();
    p["max_emissions_per_task"] = par->max_emissions_per_task;
    p["max_spawns_per_task"] = par->max_spawns_per_task;
    p["color_sets_created"] = par->color_sets_created;
    p["steals"] = par->steals;
    if (!par->error.empty()) p["error"] = par->error;
    j["parallel"] = p;
  }
  return j;
}

void PrintReport(std::ostream& err, Format format, const HalinGraph& h,
                 EnumMode mode, const EnumReport& r,
                 const ParallelReport* par) {
  if (format == Format::kJsonl) {
    err << ReportJson(h, mode, r, par).dump() << "\n";
    return;
  }
  err << "mode=" << ModeName(mode) << " n=" << h.n() << " p=" << h.p()
      << " d=" << h.d() << "\n";
  err << "total=" << r.total_emitted;
  if (r.distinct_count) {
    err << " distinct=" << *r.distinct_count
        << " duplicates=" << r.duplicates();
  }
  err << "\n";
  for (const LevelCount& lc : r.per_level) {
    err << "  level " << lc.level << ": " << lc.emitted;
    if (lc.level < r.repeated_keys_per_level.size() &&
        r.repeated_keys_per_level[lc.level] > 0) {
      err << " (" << r.repeated_keys_per_level[lc.level] << " repeated keys)";
    }
    err << "\n";
  }
  err << "expansions=" << r.expansions << " max_delay_us="
      << std::fixed << std::setprecision(1) << r.max_delay.count() / 1e3
      << " mean_delay_us=" << r.mean_delay.count() / 1e3 << "\n";
  if (par != nullptr) {
    err << "workers=" << par->workers << " tasks=" << par->tasks_spawned
        << " wall_ms=" << par->wall_time.count() / 1e6
        << " steals=" << par->steals << "\n";
    if (!par->error.empty()) err << "worker error: " << par->error << "\n";
  }
  if (r.partial) err << "partial=true\n";
}

// enumerate ------------------------------------------------------------------

struct EnumerateOptions {
  InputOptions input;
  EnumMode mode = EnumMode::kDistinct;
  std::size_t parallel = 0;
  Format format = Format::kHuman;
  SinkChoice sink = SinkChoice::kAuto;
  std::size_t cap = kDefaultStoreCap;
  std::optional<std::uint64_t> seed;
  std::optional<bool> track_keys;
};

int Enumerate(const EnumerateOptions& o, std::ostream& out,
              std::ostream& err) {
  const HalinGraph h = LoadInput(o.input);
  SinkChoice choice = o.sink;
  if (choice == SinkChoice::kAuto) {
    choice = o.format == Format::kKeys ? SinkChoice::kStore
                                       : SinkChoice::kStream;
  }
  if (o.format == Format::kKeys && choice != SinkChoice::kStore &&
      choice != SinkChoice::kCount) {
    throw Failure{kExitUsage, "error: --format keys needs --sink store"};
  }

  SinkOptions so;
  so.store_cap = o.cap;
  so.track_keys = o.track_keys.value_or(h.n() <= kBruteForceGuard);
  std::uint64_t streamed = 0;
  switch (choice) {
    case SinkChoice::kStore:
      so.mode = SinkMode::kStore;
      break;
    case SinkChoice::kCount:
      so.mode = SinkMode::kCountOnly;
      break;
    default:
      so.mode = SinkMode::kStream;
      so.on_tree = [&](std::size_t level, std::span<const Edge> edges) {
        if (++streamed > o.cap) {
          throw HalinError(ErrorCode::kSinkOverflow,
                           "emission cap of " + std::to_string(o.cap) +
                               " trees exceeded");
        }
        if (o.format == Format::kJsonl) {
          Json line;
          line["level"] = level;
          Json list = Json::array();
          for (const Edge& e : edges) list.push_back(h.EdgeLabel(e));
          line["edges"] = list;
          out << line.dump() << "\n";
        } else {
          out << "level=" << level << " edges=" << TreeLabel(h, edges)
              << "\n";
        }
      };
  }
  EnumSink sink(so);
  ConcurrentSink shared(sink);

  EnumReport report;
  ParallelReport par;
  const bool parallel = o.parallel > 0;
  int code = kExitOk;
  try {
    if (parallel) {
      ParallelOptions po;
      po.workers = o.parallel;
      po.randomize = o.seed.has_value();
      po.seed = o.seed.value_or(0);
      ParallelResult r = RunParallel(h, o.mode, shared, po);
      report = r.enum_report;
      par = r.parallel;
      if (par.partial) code = kExitInvalid;
    } else {
      report = halin::Enumerate(h, o.mode, sink);
    }
  } catch (const HalinError& e) {
    if (e.code() != ErrorCode::kSinkOverflow) throw;
    err << Describe(e) << "\n";
    report = sink.Report(h.p() + 1);
    report.partial = true;
    code = kExitResource;
  }

  if (choice == SinkChoice::kStore) {
    std::vector<std::string> lines;
    lines.reserve(sink.stored().size());
    for (std::size_t i = 0; i < sink.stored().size(); ++i) {
      const std::string edges = TreeLabel(h, sink.stored()[i].edges());
      if (o.format == Format::kKeys) {
        lines.push_back(edges);
      } else if (o.format == Format::kJsonl) {
        Json line;
        line["level"] = sink.stored_levels()[i];
        Json list = Json::array();
        for (const Edge& e : sink.stored()[i].edges()) {
          list.push_back(h.EdgeLabel(e));
        }
        line["edges"] = list;
        lines.push_back(line.dump());
      } else {
        lines.push_back("level=" + std::to_string(sink.stored_levels()[i]) +
                        " edges=" + edges);
      }
    }
    if (o.format == Format::kKeys) std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) out << line << "\n";
  }
  PrintReport(err, o.format, h, o.mode, report, parallel ? &par : nullptr);
  return code;
}

// check ----------------------------------------------------------------------

struct CheckCommandOptions {
  InputOptions input;
  std::size_t workers = 1;
  std::size_t guard = kBruteForceGuard;
  bool disable_coloring = false;
  Format format = Format::kHuman;
};

int Check(const CheckCommandOptions& o, std::ostream& out) {
  const HalinGraph h = LoadInput(o.input);
  CheckOptions co;
  co.workers = std::max<std::size_t>(1, o.workers);
  co.guard = o.guard;
  co.enum_options.disable_coloring = o.disable_coloring;
  const CheckVerdict v = CheckGraph(h, co);
  if (o.format == Format::kJsonl) {
    Json j;
    j["type"] = "check";
    j["n"] = v.n;
    j["p"] = v.p;
    j["d"] = v.d;
    j["verdict"] = v.passed() ? "PASS" : "FAIL";
    j["emitted"] = v.report.total_emitted;
    j["kirchhoff"] = v.kirchhoff.str();
    Json clauses = Json::array();
    for (const CheckClause& c : v.clauses) {
      clauses.push_back({{"name", c.name},
                         {"status", c.skipped  ? "SKIP"
                                    : c.passed ? "PASS"
                                               : "FAIL"},
                         {"detail", c.detail}});
    }
    j["clauses"] = clauses;
    j["failures"] = v.failures();
    out << j.dump() << "\n";
  } else {
    out << "n=" << v.n << " p=" << v.p << " d=" << v.d << "\n";
    for (const CheckClause& c : v.clauses) {
      out << "  " << std::left << std::setw(13) << c.name
          << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  "
          << c.detail << "\n";
    }
    if (v.passed()) {
      out << "PASS\n";
    } else {
      out << "FAIL:";
      for (const std::string& f : v.failures()) out << ' ' << f;
      out << "\n";
    }
  }
  return v.passed() ? kExitOk : kExitCheckFailed;
}

// gen ------------------------------------------------------------------------

struct GenOptions {
  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::size_t count = 1;
  std::size_t max_children = 4;
  std::string out_dir = ".";
  std::string prefix = "halin";
};

int Gen(const GenOptions& o, std::ostream& out) {
  std::filesystem::create_directories(o.out_dir);
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = o.seed + i;
    const HalinGraph h = RandomHalin(seed, o.n, o.max_children);
    const std::filesystem::path path =
        std::filesystem::path(o.out_dir) /
        (o.prefix + "_n" + std::to_string(o.n) + "_s" + std::to_string(seed) +
         ".halin");
    SaveHalinGraph(h, path);
    out << path.string() << " n=" << h.n() << " p=" << h.p()
        << " d=" << h.d() << "\n";
  }
  return kExitOk;
}

// bounds ---------------------------------------------------------------------

struct BoundsOptions {
  InputOptions input;
  std::optional<std::size_t> p;
  std::optional<std::size_t> d;
  Format format = Format::kHuman;
};

int Bounds(const BoundsOptions& o, std::ostream& out) {
  std::optional<HalinGraph> h;
  std::size_t p = o.p.value_or(0);
  std::size_t d = o.d.value_or(0);
  if (!o.input.path.empty() || o.input.random_n) {
    h = LoadInput(o.input);
    p = h->p();
    d = h->d();
  } else if (!o.p || !o.d) {
    throw Failure{kExitUsage, "error: need a graph or both --p and --d"};
  }
  const BoundSet b = ComputeBounds(p, d);
  std::optional<EnumReport> observed;
  if (h) {
    EnumSink sink;
    observed = EnumerateDistinct(*h, sink);
  }
  bool ok = !h || CheckDepthBound(*h);
  Json levels = Json::array();
  std::ostringstream table;
  for (std::size_t i = 0; i < b.per_level.size(); ++i) {
    table << "  level " << i << ": bound " << b.per_level[i];
    Json row{{"level", i}, {"bound", b.per_level[i].str()}};
    if (observed) {
      const std::uint64_t seen = observed->per_level[i].emitted;
      const bool within = BigInt(seen) <= b.per_level[i];
      ok = ok && within;
      table << "  observed " << seen << (within ? "" : "  VIOLATED");
      row["observed"] = seen;
    }
    table << "\n";
    levels.push_back(row);
  }
  if (observed) ok = ok && BigInt(observed->total_emitted) <= b.headline;

  if (o.format == Format::kJsonl) {
    Json j{{"type", "bounds"}, {"p", p}, {"d", d}};
    j["per_level"] = levels;
    j["total"] = b.total.str();
    j["headline"] = b.headline.str();
    if (h) {
      j["n"] = h->n();
      j["depth_bound"] = CheckDepthBound(*h);
      j["observed_total"] = observed->total_emitted;
    }
    j["ok"] = ok;
    out << j.dump() << "\n";
  } else {
    out << "p=" << p << " d=" << d;
    if (h) {
      out << " n=" << h->n() << " depth_bound="
          << (CheckDepthBound(*h) ? "ok" : "VIOLATED");
    }
    out << "\n" << table.str();
    out << "total=" << b.total << " headline=(2pd)^p=" << b.headline;
    if (observed) out << " observed=" << observed->total_emitted;
    out << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

// bench ----------------------------------------------------------------------

struct BenchOptions {
  InputOptions input;
  EnumMode mode = EnumMode::kDistinct;
  std::vector<std::size_t> workers{1, 2, 4, 8};
  std::size_t repeats = 3;
  Format format = Format::kHuman;
};

int Bench(const BenchOptions& o, std::ostream& out) {
  const HalinGraph h = LoadInput(o.input);
  const auto rows = SpeedupReport(h, o.mode, o.workers, o.repeats);
  if (o.format == Format::kJsonl) {
    for (const SpeedupRow& r : rows) {
      out << Json{{"type", "speedup"},
                  {"workers", r.workers},
                  {"wall_time_ns", r.wall_time.count()},
                  {"speedup", r.speedup},
                  {"efficiency", r.efficiency}}
                 .dump()
          << "\n";
    }
    return kExitOk;
  }
  out << "n=" << h.n() << " p=" << h.p() << " d=" << h.d()
      << " mode=" << ModeName(o.mode) << " hardware_threads="
      << std::thread::hardware_concurrency() << "\n";
  out << "workers  wall_ms    S_p     E_p\n";
  for (const SpeedupRow& r : rows) {
    out << std::left << std::setw(9) << r.workers << std::fixed
        << std::setprecision(2) << std::setw(11)
        << r.wall_time.count() / 1e6 << std::setw(8) << r.speedup
        << r.efficiency << "\n";
  }
  return kExitOk;
}

const std::map<std::string, EnumMode> kModes{{"naive", EnumMode::kNaive},
                                             {"distinct", EnumMode::kDistinct}};
const std::map<std::string, Format> kFormats{{"human", Format::kHuman},
                                             {"keys", Format::kKeys},
                                             {"jsonl", Format::kJsonl}};
const std::map<std::string, SinkChoice> kSinks{{"auto", SinkChoice::kAuto},
                                               {"store", SinkChoice::kStore},
                                               {"stream", SinkChoice::kStream},
                                               {"count", SinkChoice::kCount}};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Spanning-tree enumeration for Halin graphs", "halin"};
  app.require_subcommand(1);

  InputOptions validate_in;
  auto* validate = app.add_subcommand("validate", "Parse and validate a graph");
  AddInputOptions(validate, validate_in);

  EnumerateOptions en;
  auto* enumerate = app.add_subcommand("enumerate", "List spanning trees");
  AddInputOptions(enumerate, en.input);
  enumerate->add_option("--mode", en.mode, "naive or distinct")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  enumerate->add_option("--parallel", en.parallel, "Worker count")
      ->check(CLI::Range(1, 1024));
  enumerate->add_option("--format", en.format, "human, keys or jsonl")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  enumerate->add_option("--sink", en.sink, "auto, store, stream or count")
      ->transform(CLI::CheckedTransformer(kSinks, CLI::ignore_case));
  enumerate->add_option("--cap", en.cap, "Maximum number of trees emitted")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--seed", en.seed,
                        "Randomize parallel scheduling with this seed");
  enumerate->add_option("--track-keys", en.track_keys,
                        "Count distinct keys (default: n <= 14)");

  CheckCommandOptions ck;
  auto* check = app.add_subcommand("check", "Verify against the oracles");
  AddInputOptions(check, ck.input);
  check->add_option("--parallel", ck.workers, "Worker count")
      ->check(CLI::Range(1, 1024));
  check->add_option("--guard", ck.guard, "Vertex limit for brute force");
  check->add_flag("--disable-coloring", ck.disable_coloring,
                  "Run without blue marks (negative control)");
  check->add_option("--format", ck.format, "human or jsonl")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Write random Halin graphs");
  gen->add_option("--seed", gen_opts.seed, "First seed");
  gen->add_option("--n", gen_opts.n, "Target vertex count")->required();
  gen->add_option("--count", gen_opts.count, "Number of graphs");
  gen->add_option("--max-children", gen_opts.max_children, "Fan-out limit");
  gen->add_option("--out", gen_opts.out_dir, "Output directory");
  gen->add_option("--prefix", gen_opts.prefix, "File name prefix");

  BoundsOptions bo;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  AddInputOptions(bounds, bo.input);
  bounds->add_option("--p", bo.p, "Leaf count");
  bounds->add_option("--d", bo.d, "Depth");
  bounds->add_option("--format", bo.format, "human or jsonl")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  BenchOptions be;
  auto* bench = app.add_subcommand("bench", "Parallel speed-up table");
  AddInputOptions(bench, be.input);
  bench->add_option("--mode", be.mode, "naive or distinct")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  bench->add_option("--workers", be.workers, "Worker counts")->delimiter(',');
  bench->add_option("--repeats", be.repeats, "Runs per row (best kept)");
  bench->add_option("--format", be.format, "human or jsonl")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  std::vector<std::string> argv_store{"halin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) {
      const HalinGraph h = LoadInput(validate_in);
      out << "n=" << h.n() << " p=" << h.p() << " d=" << h.d() << "\n";
      return kExitOk;
    }
    if (*enumerate) return Enumerate(en, out, err);
    if (*check) return Check(ck, out);
    if (*gen) return Gen(gen_opts, out);
    if (*bounds) return Bounds(bo, out);
    if (*bench) return Bench(be, out);
  } catch (const Failure& f) {
    err << f.message << "\n";
    return f.code;
  } catch (const HalinError& e) {
    err << Describe(e) << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace halin::cli
