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

#include "twotree/parallel.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "absl/container/flat_hash_set.h"
#include "generation.h"
#include "twotree/errors.h"
#include "twotree/worker_pool.h"

namespace twotree {

void validate_config(const ParallelConfig& cfg) {
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.chunk_size < 1) throw std::invalid_argument("chunk size must be >= 1");
  if (cfg.cap_n < 3) throw std::invalid_argument("cap-n must be >= 3");
}

SimplicialOrdering parallel_two_simplicial_ordering(const Graph& g,
                                                    const ParallelConfig& cfg) {
  validate_config(cfg);
  TwoTreeReport report = validate_two_tree(g);
  if (!report.accepted) throw NotTwoTreeError("not a 2-tree: " + report.reason);
  const int n = g.vertex_count();
  std::vector<std::set<VertexId>> nbrs(n + 1);
  for (VertexId v = 1; v <= n; ++v) {
    auto span = g.neighbors(v);
    nbrs[v].insert(span.begin(), span.end());
  }
  std::vector<VertexId> alive(n);
  for (VertexId v = 1; v <= n; ++v) alive[v - 1] = v;

  WorkerPool pool(cfg.workers);
  SimplicialOrdering ord;
  std::vector<char> eligible;
  while (alive.size() > 3) {
    // Concurrent read-only test of every residual vertex.
    eligible.assign(alive.size(), 0);
    pool.run(alive.size(), [&](std::size_t k) {
      const auto& nb = nbrs[alive[k]];
      eligible[k] = nb.size() == 2 && nbrs[*nb.begin()].count(*nb.rbegin());
    });

    const std::size_t budget = alive.size() - 3;
    std::vector<VertexId> chosen;
    for (std::size_t k = 0; k < alive.size() && chosen.size() < budget; ++k) {
      if (!eligible[k]) continue;
      const VertexId v = alive[k];
      bool clash = std::any_of(chosen.begin(), chosen.end(), [&](VertexId w) {
        return nbrs[v].count(w) > 0;
      });
      if (!clash) chosen.push_back(v);
    }
    if (chosen.empty()) {
      throw NotTwoTreeError("not a 2-tree: no 2-simplicial vertex in residual of " +
                            std::to_string(alive.size()) + " vertices");
    }
    for (VertexId v : chosen) {
      ord.elimination.push_back(v);
      ord.higher_nbr[v] = Edge::of(*nbrs[v].begin(), *nbrs[v].rbegin());
    }
    for (VertexId v : chosen) {
      for (VertexId w : nbrs[v]) nbrs[w].erase(v);
      nbrs[v].clear();
    }
    std::erase_if(alive, [&](VertexId v) {
      return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    });
  }
  ord.base = {alive[2], alive[1], alive[0]};
  return ord;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

detail::Generation build_parallel(std::span<const EdgeMask> parents,
                                  const detail::ExtensionStep& step,
                                  const EdgeIndex& index, bool keep_leaf,
                                  WorkerPool& pool, std::size_t chunk_size) {
  const std::size_t chunks = (parents.size() + chunk_size - 1) / chunk_size;
  std::vector<detail::ChildBatch> batches(chunks);
  // Parents are shared read-only; every chunk writes its own batch.
  pool.run(chunks, [&](std::size_t k) {
    const std::size_t begin = k * chunk_size;
    const std::size_t len = std::min(chunk_size, parents.size() - begin);
    detail::PathScratch scratch(index.vertex_count());
    if (keep_leaf) batches[k].leaf.reserve(2 * len);
    detail::expand_range(parents.subspan(begin, len), step, index, keep_leaf,
                         scratch, batches[k]);
  });

  // Barrier passed. Each shard owns the masks hashing to it and scans the
  // chunk buffers in chunk order, so the first occurrence wins exactly as in
  // the sequential engine.
  const std::size_t shards = static_cast<std::size_t>(pool.size());
  std::vector<std::vector<char>> keep(chunks);
  for (std::size_t k = 0; k < chunks; ++k) keep[k].assign(batches[k].nonleaf.size(), 0);
  pool.run(shards, [&](std::size_t s) {
    absl::flat_hash_set<EdgeMask> seen;
    for (std::size_t k = 0; k < chunks; ++k) {
      const auto& buf = batches[k].nonleaf;
      for (std::size_t j = 0; j < buf.size(); ++j) {
        if (mix(buf[j]) % shards != s) continue;
        keep[k][j] = seen.insert(buf[j]).second;
      }
    }
  });

  detail::Generation gen;
  gen.stats.i = step.i;
  gen.stats.vertex = step.v;
  gen.stats.higher_nbr = step.hn;
  gen.stats.parents = parents.size();
  std::size_t leaf_total = 0;
  for (const auto& b : batches) leaf_total += b.leaf.size();
  gen.leaf.reserve(leaf_total);
  for (std::size_t k = 0; k < chunks; ++k) {
    auto& b = batches[k];
    gen.leaf.insert(gen.leaf.end(), b.leaf.begin(), b.leaf.end());
    gen.stats.leaf_count += b.leaf_count;
    gen.stats.nonleaf_raw += b.nonleaf.size();
    gen.stats.max_cycle_len = std::max(gen.stats.max_cycle_len, b.max_cycle_len);
    for (std::size_t j = 0; j < b.nonleaf.size(); ++j) {
      if (keep[k][j]) gen.nonleaf.push_back(b.nonleaf[j]);
    }
    std::vector<EdgeMask>().swap(b.leaf);
    std::vector<EdgeMask>().swap(b.nonleaf);
  }
  gen.stats.nonleaf_kept = gen.nonleaf.size();
  return gen;
}

void check_cap(const Graph& g, const ParallelConfig& cfg) {
  validate_config(cfg);
  if (g.vertex_count() > cfg.cap_n) {
    throw GuardError("instance has " + std::to_string(g.vertex_count()) +
                     " vertices, above cap-n " + std::to_string(cfg.cap_n));
  }
}

detail::DriveResult run_parallel(const Graph& g, const ParallelConfig& cfg,
                                 bool retain, const TreeSink* sink,
                                 std::shared_ptr<const EdgeIndex>& index,
                                 SimplicialOrdering& ord) {
  detail::require_two_tree(g);
  index = std::make_shared<const EdgeIndex>(g);
  ord = parallel_two_simplicial_ordering(g, cfg);
  WorkerPool pool(cfg.workers);
  auto build = [&](std::span<const EdgeMask> parents,
                   const detail::ExtensionStep& step, bool keep_leaf) {
    return build_parallel(parents, step, *index, keep_leaf, pool,
                          static_cast<std::size_t>(cfg.chunk_size));
  };
  return detail::drive(*index, ord, build, retain, sink);
}

}  // namespace

Enumeration parallel_enumerate_spanning_trees(const Graph& g,
                                              const ParallelConfig& cfg) {
  check_cap(g, cfg);
  if (cfg.workers == 1) return enumerate_spanning_trees(g);
  std::shared_ptr<const EdgeIndex> index;
  SimplicialOrdering ord;
  detail::DriveResult r = run_parallel(g, cfg, true, nullptr, index, ord);
  TreeCollection trees(index, g.vertex_count(), std::move(r.final_masks));
  return Enumeration{std::move(ord), std::move(trees),
                     std::move(r.summary.stats)};
}

StreamSummary parallel_stream_spanning_trees(const Graph& g,
                                             const ParallelConfig& cfg,
                                             const TreeSink& sink) {
  check_cap(g, cfg);
  if (cfg.workers == 1) return stream_spanning_trees(g, sink);
  std::shared_ptr<const EdgeIndex> index;
  SimplicialOrdering ord;
  return run_parallel(g, cfg, false, &sink, index, ord).summary;
}

BenchReport bench(const Graph& g, const std::vector<int>& worker_counts,
                  bool count_only, const ParallelConfig& base_cfg) {
  check_cap(g, base_cfg);
  if (worker_counts.empty()) throw std::invalid_argument("empty worker list");
  std::vector<int> runs = worker_counts;
  const bool has_serial = std::find(runs.begin(), runs.end(), 1) != runs.end();
  if (!has_serial) runs.insert(runs.begin(), 1);

  BenchReport report;
  report.n = g.vertex_count();
  double t1 = 0;
  std::vector<BenchRow> measured;
  for (int p : runs) {
    ParallelConfig cfg = base_cfg;
    cfg.workers = p;
    validate_config(cfg);
    BenchRow row;
    row.workers = p;
    const auto start = std::chrono::steady_clock::now();
    if (count_only) {
      row.count = parallel_stream_spanning_trees(g, cfg, TreeSink()).count;
    } else {
      row.count = parallel_enumerate_spanning_trees(g, cfg).trees.size();
    }
    const auto stop = std::chrono::steady_clock::now();
    row.wall_seconds = std::chrono::duration<double>(stop - start).count();
    if (p == 1 && t1 == 0) t1 = row.wall_seconds;
    measured.push_back(row);
  }

  constexpr double kEfficiencySlack = 0.1;
  for (std::size_t k = 0; k < measured.size(); ++k) {
    BenchRow& row = measured[k];
    row.speedup = row.wall_seconds > 0 ? t1 / row.wall_seconds : 1.0;
    row.efficiency = row.speedup / row.workers;
    if (row.efficiency > 1 + kEfficiencySlack) {
      report.anomalies.push_back("p=" + std::to_string(row.workers) +
                                 ": efficiency above 1 (measurement noise)");
    }
    if (row.count != measured.front().count) {
      report.anomalies.push_back("p=" + std::to_string(row.workers) +
                                 ": tree count differs from p=1");
    }
    if (k == 0 && !has_serial) continue;
    report.rows.push_back(row);
  }
  return report;
}

std::string format_bench_report(const BenchReport& report) {
  std::ostringstream out;
  out << "p\twall_seconds\tspeedup\tefficiency\n";
  out << std::fixed;
  for (const BenchRow& row : report.rows) {
    out << row.workers << '\t' << std::setprecision(6) << row.wall_seconds
        << '\t' << std::setprecision(3) << row.speedup << '\t'
        << row.efficiency << '\n';
  }
  return out.str();
}

}  // namespace twotree
