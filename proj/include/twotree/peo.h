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

#ifndef TWOTREE_PEO_H_
#define TWOTREE_PEO_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twotree/big_count.h"
#include "twotree/graph.h"
#include "twotree/parallel.h"

namespace twotree {

// Perfect elimination ordering, first-eliminated first.
struct Peo {
  std::vector<VertexId> order;

  friend auto operator<=>(const Peo&, const Peo&) = default;
};

// Space-separated labels.
std::string format_peo(std::span<const VertexId> order);

// True iff every vertex is simplicial among the vertices after it. Throws
// std::invalid_argument when `p` is not a permutation of V(g).
bool verify_peo(const Graph& g, const Peo& p);

using PeoSink = std::function<void(std::span<const VertexId>)>;

// Largest graph the PEO routines accept (residual sets are 64-bit masks).
inline constexpr int kMaxPeoVertices = 64;

// Streams every PEO of a chordal graph exactly once, depth-first: simplicial
// vertices are branched in ascending label order and a clique residual
// yields its permutations in lexicographic order. Returns the number
// emitted. Throws NotChordalError when a non-complete residual lacks two
// nonadjacent simplicial vertices (no ordering is emitted in that case,
// since a non-chordal graph has none); GuardError above kMaxPeoVertices.
std::uint64_t enumerate_peos(const Graph& g, const PeoSink& sink);

// Exact PEO count, memoized on the residual vertex set.
BigCount count_peos(const Graph& g);

// Recursive lower bound: l! for an l-clique, otherwise twice the smallest
// bound over the residuals left by removing one simplicial vertex.
BigCount min_peo_bound(const Graph& g);

// Unit of parallel PEO work: the subtree below `prefix`, or, when `first`
// is set, the block of clique permutations starting with `first`.
struct PeoTask {
  std::vector<VertexId> prefix;
  std::uint64_t residual = 0;  // bit v-1 set for each remaining vertex v
  std::optional<VertexId> first;
};

// Expands the recursion breadth-first until at least `target` tasks exist
// or nothing can be split further. Tasks are in emission order.
std::vector<PeoTask> peo_tasks(const Graph& g, std::size_t target);

std::uint64_t run_peo_task(const Graph& g, const PeoTask& task,
                           const PeoSink& sink);

// Runs peo_tasks(g, 4 * workers) on a worker pool. The sink is called under
// a lock, in no particular task order. Returns the number emitted.
std::uint64_t parallel_enumerate_peos(const Graph& g, const ParallelConfig& cfg,
                                      const PeoSink& sink);

// Materialized recursion tree (debug aid). Edges are labelled with the
// removed simplicial vertex; leaves hold clique residuals.
struct PeoRecursionNode {
  std::vector<VertexId> residual;
  std::map<VertexId, std::unique_ptr<PeoRecursionNode>> children;

  bool is_leaf() const { return children.empty(); }
};

// Throws GuardError above 10 vertices.
std::unique_ptr<PeoRecursionNode> build_peo_tree(const Graph& g);

// Indented trace of build_peo_tree. Not a stable format.
std::string dump_peo_tree(const Graph& g);

}  // namespace twotree

#endif  // TWOTREE_PEO_H_
