// Copyright 2026 The twotree-enum Authors.
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

#include "twotree/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "twotree/errors.h"
#include "twotree/graph.h"
#include "twotree/oracles.h"
#include "twotree/parallel.h"
#include "twotree/peo.h"
#include "twotree/spanning_trees.h"

namespace twotree {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::optional<int> gen_n;
  std::uint64_t seed = 1;
  std::string output;
  int workers = 1;
  int chunk_size = 4096;
  bool count_only = false;
  bool sorted = false;
  bool stats = false;
  int cap_n = kDefaultCapN;
  bool allow_large = false;
  std::string bench_list = "1,2,4,8";
  bool dump_tree = false;
};

Graph load_graph(const RunConfig& cfg) {
  const bool from_file = !cfg.input.empty();
  if (from_file == cfg.gen_n.has_value()) {
    throw UsageError("exactly one of --input or --gen is required");
  }
  if (cfg.gen_n) {
    if (*cfg.gen_n < 3) throw UsageError("--gen needs N >= 3");
    return random_two_tree(*cfg.gen_n, cfg.seed);
  }
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw UsageError("cannot read " + cfg.input);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const GraphFormatError& e) {
    throw UsageError(cfg.input + ": " + e.what());
  }
}

ParallelConfig parallel_config(const RunConfig& cfg) {
  if (cfg.workers < 1) throw UsageError("--workers must be >= 1");
  if (cfg.chunk_size < 1) throw UsageError("--chunk-size must be >= 1");
  if (cfg.cap_n < 3) throw UsageError("--cap-n must be >= 3");
  if (cfg.cap_n > kDefaultCapN && !cfg.allow_large) {
    throw UsageError("--cap-n above " + std::to_string(kDefaultCapN) +
                     " requires --allow-large");
  }
  return ParallelConfig{cfg.workers, cfg.chunk_size, cfg.cap_n};
}

std::vector<int> parse_worker_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      int p = std::stoi(item, &used);
      if (used != item.size() || p < 1) throw std::invalid_argument(item);
      out.push_back(p);
    } catch (const std::exception&) {
      throw UsageError("--bench expects a comma-separated list of positive "
                       "integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError("--bench list is empty");
  return out;
}

// Writes to --output when given, else to the provided stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void print_stats(const std::vector<IterationStats>& stats, std::ostream& err) {
  err << "i\tvertex\thn\tparents\tleaf\tnonleaf_raw\tnonleaf_kept\tmax_cycle\n";
  for (const auto& s : stats) {
    err << s.i << '\t' << s.vertex << '\t' << s.higher_nbr.u << '-'
        << s.higher_nbr.v << '\t' << s.parents << '\t' << s.leaf_count << '\t'
        << s.nonleaf_raw << '\t' << s.nonleaf_kept << '\t' << s.max_cycle_len
        << '\n';
  }
}

int st_enumerate(const RunConfig& cfg, bool count_only, std::ostream& out,
                 std::ostream& err) {
  const ParallelConfig pc = parallel_config(cfg);
  const Graph g = load_graph(cfg);
  Output sink_out(cfg.output, out);
  std::ostream& os = sink_out.get();
  std::vector<IterationStats> stats;
  if (count_only) {
    StreamSummary s = parallel_stream_spanning_trees(g, pc, TreeSink());
    os << s.count << '\n';
    stats = std::move(s.stats);
  } else if (cfg.sorted) {
    Enumeration e = parallel_enumerate_spanning_trees(g, pc);
    for (const std::string& line : e.trees.sorted_lines()) os << line << '\n';
    stats = std::move(e.stats);
  } else {
    StreamSummary s = parallel_stream_spanning_trees(
        g, pc, [&](const SpanningTree& t) { os << format_tree(t) << '\n'; });
    stats = std::move(s.stats);
  }
  if (cfg.stats) print_stats(stats, err);
  return kExitOk;
}

int st_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParallelConfig pc = parallel_config(cfg);
  const std::vector<int> workers = parse_worker_list(cfg.bench_list);
  const Graph g = load_graph(cfg);
  BenchReport report = bench(g, workers, cfg.count_only, pc);
  Output sink_out(cfg.output, out);
  sink_out.get() << format_bench_report(report);
  for (const std::string& a : report.anomalies) err << "anomaly: " << a << '\n';
  return kExitOk;
}

// Tab-separated check table shared by both verify subcommands.
class VerifyTable {
 public:
  explicit VerifyTable(std::ostream& os) : os_(os) {
    os_ << "check\tresult\tdetail\n";
  }
  void row(const std::string& check, bool pass, const std::string& detail) {
    os_ << check << '\t' << (pass ? "PASS" : "FAIL") << '\t' << detail << '\n';
    ok_ = ok_ && pass;
  }
  void skip(const std::string& check, const std::string& detail) {
    os_ << check << "\tSKIP\t" << detail << '\n';
  }
  bool ok() const { return ok_; }

 private:
  std::ostream& os_;
  bool ok_ = true;
};

int st_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ParallelConfig pc = parallel_config(cfg);
  const Graph g = load_graph(cfg);
  Enumeration e = parallel_enumerate_spanning_trees(g, pc);
  if (cfg.stats) print_stats(e.stats, err);
  Output sink_out(cfg.output, out);
  VerifyTable table(sink_out.get());

  const std::uint64_t count = e.trees.size();
  bool sound = true;
  for (const SpanningTree& t : e.trees.trees()) {
    sound = sound && is_spanning_tree_of(t, g);
  }
  table.row("soundness", sound, "every tree has n-1 edges of g and no cycle");

  const BigCount kirchhoff = kirchhoff_count(g);
  table.row("kirchhoff", kirchhoff == count,
            std::to_string(count) + " vs " + kirchhoff.str());

  std::string brute = "-";
  if (g.edge_count() <= kBruteForceMaxEdges) {
    const std::vector<SpanningTree> all = brute_force_spanning_trees(g);
    std::vector<SpanningTree> mine = e.trees.trees();
    std::sort(mine.begin(), mine.end());
    brute = std::to_string(all.size());
    table.row("brute_force", mine == all,
              "set of " + std::to_string(count) + " vs " + brute);
  } else {
    table.skip("brute_force", "more than " +
                                  std::to_string(kBruteForceMaxEdges) + " edges");
  }

  if (e.stats.empty()) {
    table.row("stage_split", count == 3, "base triangle: " + std::to_string(count));
  } else {
    const IterationStats& last = e.stats.back();
    table.row("stage_split", last.total() == count,
              "leaf=" + std::to_string(last.leaf_count) +
                  " nonleaf=" + std::to_string(last.nonleaf_kept));
  }
  bool recurrence = std::all_of(e.stats.begin(), e.stats.end(), recurrence_holds);
  table.row("recurrence", recurrence,
            std::to_string(e.stats.size()) + " iterations");
  const BigCount bound = lower_bound_count(g.vertex_count());
  table.row("lower_bound", BigCount(count) >= bound,
            std::to_string(count) + " >= " + bound.str());

  sink_out.get() << "summary\t" << (table.ok() ? "PASS" : "FAIL")
                 << "\tcounts " << count << '/' << kirchhoff << '/' << brute
                 << '\n';
  return table.ok() ? kExitOk : kExitDomain;
}

int peo_enumerate(const RunConfig& cfg, std::ostream& out) {
  const ParallelConfig pc = parallel_config(cfg);
  const Graph g = load_graph(cfg);
  Output sink_out(cfg.output, out);
  std::ostream& os = sink_out.get();
  if (cfg.dump_tree) {
    os << dump_peo_tree(g);
    return kExitOk;
  }
  if (cfg.count_only) {
    os << parallel_enumerate_peos(g, pc, PeoSink()) << '\n';
    return kExitOk;
  }
  if (cfg.sorted) {
    std::vector<std::string> lines;
    parallel_enumerate_peos(g, pc, [&](std::span<const VertexId> p) {
      lines.push_back(format_peo(p));
    });
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) os << line << '\n';
    return kExitOk;
  }
  auto print = [&](std::span<const VertexId> p) { os << format_peo(p) << '\n'; };
  if (pc.workers == 1) {
    enumerate_peos(g, print);
  } else {
    parallel_enumerate_peos(g, pc, print);
  }
  return kExitOk;
}

int peo_count(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  Output sink_out(cfg.output, out);
  sink_out.get() << count_peos(g) << '\n';
  return kExitOk;
}

int peo_verify(const RunConfig& cfg, std::ostream& out) {
  const ParallelConfig pc = parallel_config(cfg);
  const Graph g = load_graph(cfg);
  const BigCount counted = count_peos(g);
  const bool small = g.vertex_count() <= kBruteForceMaxPeoVertices;

  std::set<Peo> sequential;
  bool all_valid = true;
  const std::uint64_t emitted = enumerate_peos(g, [&](std::span<const VertexId> p) {
    Peo peo{{p.begin(), p.end()}};
    all_valid = all_valid && verify_peo(g, peo);
    if (small) sequential.insert(std::move(peo));
  });
  std::set<Peo> parallel;
  const std::uint64_t emitted_par =
      parallel_enumerate_peos(g, pc, [&](std::span<const VertexId> p) {
        if (small) parallel.insert(Peo{{p.begin(), p.end()}});
      });

  Output sink_out(cfg.output, out);
  VerifyTable table(sink_out.get());
  table.row("verify_peo", all_valid, "every emitted ordering is a PEO");
  table.row("count_peos", counted == emitted,
            std::to_string(emitted) + " vs " + counted.str());
  table.row("parallel", emitted_par == emitted && parallel == sequential,
            std::to_string(emitted_par) + " with " + std::to_string(pc.workers) +
                " workers");
  std::string brute = "-";
  if (small) {
    const std::vector<Peo> all = brute_force_peos(g);
    brute = std::to_string(all.size());
    table.row("brute_force", std::set<Peo>(all.begin(), all.end()) == sequential,
              "set of " + std::to_string(emitted) + " vs " + brute);
  } else {
    table.skip("brute_force",
               "more than " + std::to_string(kBruteForceMaxPeoVertices) +
                   " vertices");
  }
  const BigCount bound = min_peo_bound(g);
  table.row("lower_bound", counted >= bound, counted.str() + " >= " + bound.str());
  sink_out.get() << "summary\t" << (table.ok() ? "PASS" : "FAIL") << "\tcounts "
                 << emitted << '/' << counted << '/' << brute << '\n';
  return table.ok() ? kExitOk : kExitDomain;
}

int generate(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.gen_n) throw UsageError("generate needs --gen N");
  const Graph g = load_graph(cfg);
  Output sink_out(cfg.output, out);
  sink_out.get() << serialize_graph(g);
  return kExitOk;
}

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--input", cfg.input, "Graph file (\"n m\" header + edges)");
  cmd->add_option("--gen", cfg.gen_n, "Generate a random 2-tree on N vertices");
  cmd->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  cmd->add_option("--output", cfg.output, "Write results here instead of stdout");
}

void add_parallel_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  cmd->add_option("--chunk-size", cfg.chunk_size, "Parent trees per task")
      ->capture_default_str();
}

void add_st_options(CLI::App* cmd, RunConfig& cfg) {
  add_input_options(cmd, cfg);
  add_parallel_options(cmd, cfg);
  cmd->add_option("--cap-n", cfg.cap_n, "Refuse instances with more vertices")
      ->capture_default_str();
  cmd->add_flag("--allow-large", cfg.allow_large,
                "Acknowledge a --cap-n above the default");
  cmd->add_flag("--stats", cfg.stats, "Print per-iteration statistics to stderr");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Spanning-tree enumeration for 2-trees and PEO enumeration for "
               "chordal graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* st = app.add_subcommand("st", "Spanning trees of a 2-tree");
  st->require_subcommand(1);
  CLI::App* st_enum = st->add_subcommand("enumerate", "List all spanning trees");
  add_st_options(st_enum, cfg);
  st_enum->add_flag("--sorted", cfg.sorted, "Sort output lines");
  st_enum->add_flag("--count-only", cfg.count_only, "Print only the count");
  CLI::App* st_cnt = st->add_subcommand("count", "Count spanning trees by enumeration");
  add_st_options(st_cnt, cfg);
  CLI::App* st_bench_cmd = st->add_subcommand("bench", "Speedup/efficiency table");
  add_st_options(st_bench_cmd, cfg);
  st_bench_cmd->add_option("--bench", cfg.bench_list, "Worker counts, e.g. 1,2,4,8")
      ->capture_default_str();
  st_bench_cmd->add_flag("--count-only", cfg.count_only,
                         "Do not retain the final generation");
  CLI::App* st_ver = st->add_subcommand("verify", "Cross-check against oracles");
  add_st_options(st_ver, cfg);

  CLI::App* peo = app.add_subcommand("peo", "Perfect elimination orderings");
  peo->require_subcommand(1);
  CLI::App* peo_enum = peo->add_subcommand("enumerate", "List all PEOs");
  add_input_options(peo_enum, cfg);
  add_parallel_options(peo_enum, cfg);
  peo_enum->add_flag("--sorted", cfg.sorted, "Sort output lines");
  peo_enum->add_flag("--count-only", cfg.count_only, "Print only the count");
  peo_enum->add_flag("--dump-tree", cfg.dump_tree, "Print the recursion tree");
  CLI::App* peo_cnt = peo->add_subcommand("count", "Exact PEO count");
  add_input_options(peo_cnt, cfg);
  CLI::App* peo_ver = peo->add_subcommand("verify", "Cross-check against oracles");
  add_input_options(peo_ver, cfg);
  add_parallel_options(peo_ver, cfg);

  CLI::App* gen = app.add_subcommand("generate", "Write a random 2-tree");
  add_input_options(gen, cfg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*st_enum) return st_enumerate(cfg, cfg.count_only, out, err);
    if (*st_cnt) return st_enumerate(cfg, true, out, err);
    if (*st_bench_cmd) return st_bench(cfg, out, err);
    if (*st_ver) return st_verify(cfg, out, err);
    if (*peo_enum) return peo_enumerate(cfg, out);
    if (*peo_cnt) return peo_count(cfg, out);
    if (*peo_ver) return peo_verify(cfg, out);
    if (*gen) return generate(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  }
  err << "error: no command\n";
  return kExitUsage;
}

}  // namespace twotree
