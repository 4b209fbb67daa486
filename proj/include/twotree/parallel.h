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

#ifndef TWOTREE_PARALLEL_H_
#define TWOTREE_PARALLEL_H_

#include <map>
#include <string>
#include <vector>

#include "twotree/graph.h"
#include "twotree/spanning_trees.h"

namespace twotree {

struct ParallelConfig {
  int workers = 1;
  int chunk_size = 4096;  // parent trees per task
  int cap_n = 22;         // largest accepted vertex count
};

// Throws std::invalid_argument for non-positive workers/chunk size or
// cap_n < 3.
void validate_config(const ParallelConfig& cfg);

// Round-based 2-simplicial ordering: every round tests all residual
// vertices concurrently, then removes a maximal pairwise-nonadjacent subset
// of the 2-simplicial ones (smallest label first), never dropping below
// three vertices.
SimplicialOrdering parallel_two_simplicial_ordering(const Graph& g,
                                                    const ParallelConfig& cfg);

// Iteration-synchronous parallel enumeration over the round-based ordering.
// Parents are split into chunks of cfg.chunk_size, children go to
// chunk-local buffers and are merged at the barrier in chunk order, so the
// result (including order) is the same for every worker count above one.
// workers == 1 runs the sequential engine unchanged. Throws NotTwoTreeError,
// or GuardError when n > cfg.cap_n.
Enumeration parallel_enumerate_spanning_trees(const Graph& g,
                                              const ParallelConfig& cfg);

// Count-only / streaming form; see stream_spanning_trees.
StreamSummary parallel_stream_spanning_trees(const Graph& g,
                                             const ParallelConfig& cfg,
                                             const TreeSink& sink);

struct BenchRow {
  int workers = 1;
  double wall_seconds = 0;
  double speedup = 0;     // T_1 / T_p
  double efficiency = 0;  // speedup / p
  std::uint64_t count = 0;
};

struct BenchReport {
  int n = 0;
  std::vector<BenchRow> rows;  // in requested order
  // Rows with efficiency above 1 + tolerance, or disagreeing counts.
  std::vector<std::string> anomalies;
};

// Runs the parallel enumeration once per worker count. T_1 comes from a
// workers == 1 run, added first if the list lacks one.
BenchReport bench(const Graph& g, const std::vector<int>& worker_counts,
                  bool count_only, const ParallelConfig& base_cfg);

// Tab-separated: header "p wall_seconds speedup efficiency" then one row
// per worker count.
std::string format_bench_report(const BenchReport& report);

}  // namespace twotree

#endif  // TWOTREE_PARALLEL_H_
