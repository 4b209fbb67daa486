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

#include "twotree/graph.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "twotree/errors.h"

namespace twotree {

Edge Edge::of(VertexId a, VertexId b) {
  if (a == b) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (Edge& e : edges_) {
    if (!contains(e.u) || !contains(e.v)) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " out of range 1.." +
                                  std::to_string(n));
    }
    e = Edge::of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) +
                                "-" + std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (!contains(v)) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
  return adjacency_[v];
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<int> Graph::edge_index(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  const Edge key = Edge::of(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_ + 1, 0);
  std::vector<VertexId> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

namespace {

bool parse_int(std::string_view token, long long& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A final newline does not open another line; further blank lines are
  // tolerated only at the very end.
  while (!lines.empty() && split_fields(lines.back()).empty()) lines.pop_back();

  if (lines.empty()) throw GraphFormatError(1, "missing header \"n m\"");
  auto header = split_fields(lines[0]);
  long long n = 0;
  long long m = 0;
  if (header.size() != 2 || !parse_int(header[0], n) ||
      !parse_int(header[1], m) || n < 0 || m < 0) {
    throw GraphFormatError(1, "malformed header, expected \"n m\"");
  }
  if (n > 1'000'000 || m > n * (n - 1) / 2) {
    throw GraphFormatError(1, "edge count " + std::to_string(m) +
                                  " impossible for " + std::to_string(n) +
                                  " vertices");
  }
  if (static_cast<long long>(lines.size()) - 1 < m) {
    throw GraphFormatError(0, "expected " + std::to_string(m) +
                                  " edge lines, found " +
                                  std::to_string(lines.size() - 1));
  }
  if (static_cast<long long>(lines.size()) - 1 > m) {
    throw GraphFormatError(static_cast<int>(m) + 2,
                           "unexpected content after " + std::to_string(m) +
                               " edge lines");
  }

  std::set<Edge> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long k = 0; k < m; ++k) {
    const int line_no = static_cast<int>(k) + 2;
    auto fields = split_fields(lines[k + 1]);
    long long a = 0;
    long long b = 0;
    if (fields.size() != 2 || !parse_int(fields[0], a) ||
        !parse_int(fields[1], b)) {
      throw GraphFormatError(line_no, "malformed edge, expected \"u v\"");
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      throw GraphFormatError(line_no, "vertex label out of range 1.." +
                                          std::to_string(n));
    }
    if (a == b) {
      throw GraphFormatError(line_no,
                             "self-loop on vertex " + std::to_string(a));
    }
    Edge e = Edge::of(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!seen.insert(e).second) {
      throw GraphFormatError(line_no, "duplicate edge " + std::to_string(e.u) +
                                          " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

namespace {

// Mutable residual of a graph under vertex deletion.
class Residual {
 public:
  explicit Residual(const Graph& g)
      : nbrs_(g.vertex_count() + 1), alive_count_(g.vertex_count()) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
      auto span = g.neighbors(v);
      nbrs_[v].insert(span.begin(), span.end());
      if (span.size() == 2) degree_two_.insert(v);
    }
  }

  int size() const { return alive_count_; }

  // Smallest-labelled vertex of degree 2 whose neighbours are adjacent.
  std::optional<VertexId> smallest_two_simplicial() const {
    for (VertexId v : degree_two_) {
      const auto& n = nbrs_[v];
      VertexId x = *n.begin();
      VertexId y = *n.rbegin();
      if (nbrs_[x].count(y)) return v;
    }
    return std::nullopt;
  }

  Edge neighbour_edge(VertexId v) const {
    return Edge::of(*nbrs_[v].begin(), *nbrs_[v].rbegin());
  }

  void remove(VertexId v) {
    for (VertexId w : nbrs_[v]) {
      nbrs_[w].erase(v);
      if (nbrs_[w].size() == 2) {
        degree_two_.insert(w);
      } else {
        degree_two_.erase(w);
      }
    }
    nbrs_[v].clear();
    degree_two_.erase(v);
    removed_.insert(v);
    --alive_count_;
  }

  std::vector<VertexId> alive_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 1; v < static_cast<VertexId>(nbrs_.size()); ++v) {
      if (!removed(v)) out.push_back(v);
    }
    return out;
  }

  bool removed(VertexId v) const { return removed_.count(v) > 0; }

  bool adjacent(VertexId a, VertexId b) const { return nbrs_[a].count(b) > 0; }

 private:
  std::vector<std::set<VertexId>> nbrs_;
  std::set<VertexId> degree_two_;
  std::set<VertexId> removed_;
  int alive_count_;
};

// Shared reduction loop; `ord` is filled when non-null.
TwoTreeReport reduce_to_triangle(const Graph& g, SimplicialOrdering* ord) {
  const int n = g.vertex_count();
  if (n < 3) {
    return {false, n, "a 2-tree needs at least 3 vertices, got " +
                          std::to_string(n)};
  }
  if (g.edge_count() != 2 * n - 3) {
    return {false, n,
            "a 2-tree on " + std::to_string(n) + " vertices has " +
                std::to_string(2 * n - 3) + " edges, got " +
                std::to_string(g.edge_count())};
  }
  Residual residual(g);
  while (residual.size() > 3) {
    auto v = residual.smallest_two_simplicial();
    if (!v) {
      return {false, residual.size(),
              "residual graph on " + std::to_string(residual.size()) +
                  " vertices has no degree-2 vertex with adjacent neighbours"};
    }
    if (ord) {
      ord->elimination.push_back(*v);
      ord->higher_nbr[*v] = residual.neighbour_edge(*v);
    }
    residual.remove(*v);
  }
  auto rest = residual.alive_vertices();
  if (!residual.adjacent(rest[0], rest[1]) ||
      !residual.adjacent(rest[0], rest[2]) ||
      !residual.adjacent(rest[1], rest[2])) {
    return {false, 3, "residual 3-vertex graph is not a triangle"};
  }
  if (ord) ord->base = {rest[2], rest[1], rest[0]};
  return {true, 0, ""};
}

}  // namespace

TwoTreeReport validate_two_tree(const Graph& g) {
  return reduce_to_triangle(g, nullptr);
}

bool is_simplicial(const Graph& g, VertexId v) {
  auto nbrs = g.neighbors(v);
  for (size_t i = 0; i < nbrs.size(); ++i) {
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!g.has_edge(nbrs[i], nbrs[j])) return false;
    }
  }
  return true;
}

std::vector<VertexId> SimplicialOrdering::construction_order() const {
  std::vector<VertexId> order(base.rbegin(), base.rend());
  order.insert(order.end(), elimination.rbegin(), elimination.rend());
  return order;
}

SimplicialOrdering two_simplicial_ordering(const Graph& g) {
  SimplicialOrdering ord;
  TwoTreeReport report = reduce_to_triangle(g, &ord);
  if (!report.accepted) throw NotTwoTreeError("not a 2-tree: " + report.reason);
  return ord;
}

std::string check_simplicial_ordering(const Graph& g,
                                      const SimplicialOrdering& ord) {
  const int n = g.vertex_count();
  std::vector<char> used(n + 1, 0);
  auto claim = [&](VertexId v) {
    if (!g.contains(v) || used[v]) return false;
    used[v] = 1;
    return true;
  };
  for (VertexId v : ord.elimination) {
    if (!claim(v)) return "vertex " + std::to_string(v) + " repeated or unknown";
  }
  for (VertexId v : ord.base) {
    if (!claim(v)) return "vertex " + std::to_string(v) + " repeated or unknown";
  }
  if (static_cast<int>(ord.elimination.size()) + 3 != n) {
    return "ordering does not cover all vertices";
  }

  Residual residual(g);
  for (VertexId v : ord.elimination) {
    auto it = ord.higher_nbr.find(v);
    if (it == ord.higher_nbr.end()) {
      return "no higher neighbourhood recorded for " + std::to_string(v);
    }
    const Edge hn = it->second;
    if (residual.size() < 4) return "eliminated past the base";
    int deg = 0;
    bool matches = true;
    for (VertexId w = 1; w <= n; ++w) {
      if (residual.adjacent(v, w)) {
        ++deg;
        if (!hn.has(w)) matches = false;
      }
    }
    if (deg != 2 || !matches) {
      return "vertex " + std::to_string(v) +
             " does not have the recorded 2-vertex higher neighbourhood";
    }
    if (!residual.adjacent(hn.u, hn.v)) {
      return "higher neighbourhood of " + std::to_string(v) + " is not an edge";
    }
    residual.remove(v);
  }
  const auto& b = ord.base;
  if (!g.has_edge(b[0], b[1]) || !g.has_edge(b[0], b[2]) ||
      !g.has_edge(b[1], b[2])) {
    return "base is not a triangle";
  }
  return "";
}

Graph random_two_tree(int n, std::uint64_t seed) {
  if (n < 3) {
    throw std::invalid_argument("random_two_tree needs n >= 3, got " +
                                std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}};
  for (VertexId k = 4; k <= n; ++k) {
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    const Edge e = edges[pick(rng)];
    edges.push_back({e.u, k});
    edges.push_back({e.v, k});
    // The draw indexes the canonical (sorted) edge list.
    std::sort(edges.begin(), edges.end());
  }
  return Graph(n, std::move(edges));
}

}  // namespace twotree
