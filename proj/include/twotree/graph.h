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

#ifndef TWOTREE_GRAPH_H_
#define TWOTREE_GRAPH_H_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twotree {

// 1-based vertex label.
using VertexId = int;

// Undirected edge in canonical form (u < v).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  // Canonicalizes the endpoint order; throws std::invalid_argument on a
  // self-loop.
  static Edge of(VertexId a, VertexId b);

  bool has(VertexId w) const { return u == w || v == w; }
  VertexId other(VertexId w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph on vertices 1..n. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range labels, self-loops or
  // duplicate edges.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted ascending by (u, v).
  std::span<const Edge> edges() const { return edges_; }

  // Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;

  int degree(VertexId v) const {
    return static_cast<int>(neighbors(v).size());
  }
  bool contains(VertexId v) const { return v >= 1 && v <= n_; }
  bool has_edge(VertexId a, VertexId b) const;

  // Position of the edge in edges(), if present.
  std::optional<int> edge_index(VertexId a, VertexId b) const;

  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;  // index 0 unused
};

// Parses the "n m" + m edge lines format. Throws GraphFormatError carrying
// the offending line number.
Graph parse_graph(std::string_view text);

// Inverse of parse_graph: header line plus one "u v" line per edge.
std::string serialize_graph(const Graph& g);

struct TwoTreeReport {
  bool accepted = false;
  // Vertex count of the residual graph where reduction got stuck (or n when
  // rejected up front); 0 when accepted.
  int residual_size = 0;
  std::string reason;
};

// Accepts iff `g` reduces to a triangle by repeatedly deleting a degree-2
// vertex whose two neighbours are adjacent.
TwoTreeReport validate_two_tree(const Graph& g);

// True iff the neighbourhood of `v` induces a clique. Throws
// std::out_of_range for an unknown vertex.
bool is_simplicial(const Graph& g, VertexId v);

// 2-simplicial elimination ordering of a 2-tree.
struct SimplicialOrdering {
  // First-removed first.
  std::vector<VertexId> elimination;
  // The residual triangle, labels descending (v3, v2, v1).
  std::array<VertexId, 3> base{};
  // Eliminated vertex -> its two neighbours at the time of removal.
  std::map<VertexId, Edge> higher_nbr;

  // Vertices in construction order: base ascending, then the eliminated
  // vertices last-removed first.
  std::vector<VertexId> construction_order() const;
};

// Repeatedly removes the smallest-labelled 2-simplicial vertex until three
// vertices remain. Throws NotTwoTreeError if `g` is not a 2-tree.
SimplicialOrdering two_simplicial_ordering(const Graph& g);

// Replays `ord` against `g`: every eliminated vertex must have degree 2 with
// adjacent neighbours equal to its recorded higher neighbourhood, the base
// must be a triangle, and elimination + base must cover V(g) exactly once.
// Returns an empty string when valid, else a description of the first
// violation.
std::string check_simplicial_ordering(const Graph& g,
                                      const SimplicialOrdering& ord);

// Random 2-tree on n vertices: K3 on {1,2,3}, then vertex k (k = 4..n) is
// attached to an edge drawn uniformly from the current sorted edge list.
// Deterministic per seed. Throws std::invalid_argument for n < 3.
Graph random_two_tree(int n, std::uint64_t seed);

}  // namespace twotree

#endif  // TWOTREE_GRAPH_H_
