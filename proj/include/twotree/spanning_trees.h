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

#ifndef TWOTREE_SPANNING_TREES_H_
#define TWOTREE_SPANNING_TREES_H_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twotree/big_count.h"
#include "twotree/graph.h"

namespace twotree {

// A spanning tree as its canonical sorted edge list.
struct SpanningTree {
  int vertex_count = 0;
  std::vector<Edge> edges;  // ascending by (u, v)

  // Sorts `edges`; vertex_count is edges.size() + 1.
  static SpanningTree from_edges(std::vector<Edge> edges);

  bool spans(VertexId v) const;
  int degree(VertexId v) const;

  friend auto operator<=>(const SpanningTree&, const SpanningTree&) = default;
};

// "u-v" tokens joined by single spaces, e.g. "1-2 1-3 2-4".
std::string format_tree(const SpanningTree& t);

// Inverse of format_tree. Throws std::invalid_argument on malformed text.
SpanningTree parse_tree(std::string_view line);

// n-1 edges of `g`, acyclic and covering all n vertices.
bool is_spanning_tree_of(const SpanningTree& t, const Graph& g);

// A subset of a graph's edges as a bit set over the sorted edge list.
using EdgeMask = std::uint64_t;

// Bijection between the edges of one graph and bit positions 0..m-1.
// Graphs with more than 64 edges are rejected with GuardError.
class EdgeIndex {
 public:
  static constexpr int kMaxEdges = 64;

  explicit EdgeIndex(const Graph& g);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Bit position of edge {a, b}, or -1 if it is not an edge.
  int bit(VertexId a, VertexId b) const {
    return slot_[static_cast<size_t>(a) * (n_ + 1) + b];
  }
  const Edge& edge(int bit) const { return edges_[bit]; }

  // Throws std::invalid_argument when `t` uses a non-edge.
  EdgeMask encode(const SpanningTree& t) const;
  SpanningTree decode(EdgeMask mask) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::int8_t> slot_;
};

// Deduplicated set of spanning trees of the subgraph induced on the first
// `generation()` construction-order vertices.
class TreeCollection {
 public:
  TreeCollection(std::shared_ptr<const EdgeIndex> index, int generation,
                 std::vector<EdgeMask> masks);

  size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }
  // Number of vertices each member spans.
  int generation() const { return generation_; }

  std::span<const EdgeMask> masks() const { return masks_; }
  const EdgeIndex& index() const { return *index_; }

  SpanningTree tree(size_t k) const { return index_->decode(masks_[k]); }
  std::vector<SpanningTree> trees() const;
  bool contains(const SpanningTree& t) const;

  // format_tree of every member, sorted lexicographically.
  std::vector<std::string> sorted_lines() const;

 private:
  std::shared_ptr<const EdgeIndex> index_;
  int generation_;
  std::vector<EdgeMask> masks_;
};

// The three 2-edge trees on a triangle with v1 < v2 < v3, in the order
// {v1v2, v1v3}, {v1v2, v2v3}, {v1v3, v2v3}. Throws NotTwoTreeError when the
// triple is not a triangle of `g`.
TreeCollection base_spanning_trees(const Graph& g,
                                   std::array<VertexId, 3> triple);

// t + {v,x} and t + {v,y}. Throws std::invalid_argument if v is already
// spanned or x or y is not.
std::array<SpanningTree, 2> leaf_extensions(const SpanningTree& t, VertexId v,
                                            Edge hn);

// The unique simple path from x to y in t, endpoints included.
std::vector<VertexId> tree_path(const SpanningTree& t, VertexId x, VertexId y);

// Adds v with both edges {v,x} and {v,y}, then deletes in turn each edge of
// the x-y tree path. Requires {x,y} not in t.
std::vector<SpanningTree> nonleaf_extensions(const SpanningTree& t, VertexId v,
                                             Edge hn);

// Bookkeeping for one growth step (adding construction vertex i).
struct IterationStats {
  int i = 0;
  VertexId vertex = 0;
  Edge higher_nbr;
  std::uint64_t parents = 0;       // |ENUM_{i-1}|
  std::uint64_t leaf_count = 0;    // children where vertex is a leaf
  std::uint64_t nonleaf_raw = 0;   // degree-2 children before dedup
  std::uint64_t nonleaf_kept = 0;  // degree-2 children after dedup
  int max_cycle_len = 0;           // longest cycle closed by the vertex

  std::uint64_t total() const { return leaf_count + nonleaf_kept; }
};

// leaf_count == 2 * parents and
// leaf_count + nonleaf_raw <= max_cycle_len * parents.
bool recurrence_holds(const IterationStats& s);

struct Enumeration {
  SimplicialOrdering ordering;
  TreeCollection trees;
  std::vector<IterationStats> stats;  // one entry per i = 4..n
};

// All spanning trees of a 2-tree. Throws NotTwoTreeError otherwise, and
// GuardError for graphs with more than 64 edges.
Enumeration enumerate_spanning_trees(const Graph& g);

using TreeSink = std::function<void(const SpanningTree&)>;

struct StreamSummary {
  std::uint64_t count = 0;
  std::vector<IterationStats> stats;
};

// Same enumeration, but the final generation is handed to `sink` (which may
// be empty for count-only runs) instead of being kept. Output order: leaf
// children in parent order, then the kept degree-2 children.
StreamSummary stream_spanning_trees(const Graph& g, const TreeSink& sink);

// 3 * 2^(n-3): the doubling lower bound on the spanning-tree count of any
// n-vertex 2-tree. Throws std::invalid_argument for n < 3.
BigCount lower_bound_count(int n);

}  // namespace twotree

#endif  // TWOTREE_SPANNING_TREES_H_
