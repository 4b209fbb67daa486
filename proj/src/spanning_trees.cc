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

#include "twotree/spanning_trees.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "absl/container/flat_hash_set.h"
#include "generation.h"
#include "twotree/errors.h"

namespace twotree {

SpanningTree SpanningTree::from_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  SpanningTree t;
  t.vertex_count = static_cast<int>(edges.size()) + 1;
  t.edges = std::move(edges);
  return t;
}

bool SpanningTree::spans(VertexId v) const {
  return std::any_of(edges.begin(), edges.end(),
                     [v](const Edge& e) { return e.has(v); });
}

int SpanningTree::degree(VertexId v) const {
  return static_cast<int>(std::count_if(
      edges.begin(), edges.end(), [v](const Edge& e) { return e.has(v); }));
}

std::string format_tree(const SpanningTree& t) {
  std::string out;
  for (const Edge& e : t.edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u);
    out += '-';
    out += std::to_string(e.v);
  }
  return out;
}

SpanningTree parse_tree(std::string_view line) {
  std::vector<Edge> edges;
  size_t i = 0;
  while (i < line.size()) {
    size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    std::string_view token = line.substr(i, j - i);
    size_t dash = token.find('-');
    int a = 0;
    int b = 0;
    if (dash == std::string_view::npos ||
        std::from_chars(token.data(), token.data() + dash, a).ptr !=
            token.data() + dash ||
        std::from_chars(token.data() + dash + 1, token.data() + token.size(), b)
                .ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed tree edge \"" +
                                  std::string(token) + "\"");
    }
    edges.push_back(Edge::of(a, b));
    i = j + 1;
  }
  return SpanningTree::from_edges(std::move(edges));
}

bool is_spanning_tree_of(const SpanningTree& t, const Graph& g) {
  const int n = g.vertex_count();
  if (static_cast<int>(t.edges.size()) != n - 1) return false;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const Edge& e : t.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    int ru = find(e.u);
    int rv = find(e.v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  // n-1 edges without a cycle on n vertices is connected.
  return true;
}

EdgeIndex::EdgeIndex(const Graph& g)
    : n_(g.vertex_count()),
      edges_(g.edges().begin(), g.edges().end()),
      slot_(static_cast<size_t>(n_ + 1) * (n_ + 1), -1) {
  if (g.edge_count() > kMaxEdges) {
    throw GuardError("graph has " + std::to_string(g.edge_count()) +
                     " edges; the tree encoding supports at most " +
                     std::to_string(kMaxEdges));
  }
  for (int k = 0; k < edge_count(); ++k) {
    const Edge& e = edges_[k];
    slot_[static_cast<size_t>(e.u) * (n_ + 1) + e.v] = static_cast<std::int8_t>(k);
    slot_[static_cast<size_t>(e.v) * (n_ + 1) + e.u] = static_cast<std::int8_t>(k);
  }
}

EdgeMask EdgeIndex::encode(const SpanningTree& t) const {
  EdgeMask mask = 0;
  for (const Edge& e : t.edges) {
    int b = (e.u >= 1 && e.v <= n_) ? bit(e.u, e.v) : -1;
    if (b < 0) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " not in graph");
    }
    mask |= EdgeMask{1} << b;
  }
  return mask;
}

SpanningTree EdgeIndex::decode(EdgeMask mask) const {
  SpanningTree t;
  t.edges.reserve(std::popcount(mask));
  // Bits ascend in canonical edge order, so the list comes out sorted.
  while (mask) {
    t.edges.push_back(edges_[std::countr_zero(mask)]);
    mask &= mask - 1;
  }
  t.vertex_count = static_cast<int>(t.edges.size()) + 1;
  return t;
}

TreeCollection::TreeCollection(std::shared_ptr<const EdgeIndex> index,
                               int generation, std::vector<EdgeMask> masks)
    : index_(std::move(index)), generation_(generation), masks_(std::move(masks)) {}

std::vector<SpanningTree> TreeCollection::trees() const {
  std::vector<SpanningTree> out;
  out.reserve(masks_.size());
  for (EdgeMask m : masks_) out.push_back(index_->decode(m));
  return out;
}

bool TreeCollection::contains(const SpanningTree& t) const {
  EdgeMask m = 0;
  try {
    m = index_->encode(t);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return std::find(masks_.begin(), masks_.end(), m) != masks_.end();
}

std::vector<std::string> TreeCollection::sorted_lines() const {
  std::vector<std::string> lines;
  lines.reserve(masks_.size());
  for (EdgeMask m : masks_) lines.push_back(format_tree(index_->decode(m)));
  std::sort(lines.begin(), lines.end());
  return lines;
}

namespace {

std::array<VertexId, 3> ascending(std::array<VertexId, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

void require_unspanned(const SpanningTree& t, VertexId v, Edge hn) {
  if (t.spans(v)) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is already spanned");
  }
  if (!t.spans(hn.u) || !t.spans(hn.v)) {
    throw std::invalid_argument("higher neighbourhood " + std::to_string(hn.u) +
                                "-" + std::to_string(hn.v) +
                                " is not spanned by the tree");
  }
}

}  // namespace

TreeCollection base_spanning_trees(const Graph& g,
                                   std::array<VertexId, 3> triple) {
  auto [a, b, c] = ascending(triple);
  if (!g.has_edge(a, b) || !g.has_edge(a, c) || !g.has_edge(b, c)) {
    throw NotTwoTreeError("base vertices do not form a triangle");
  }
  auto index = std::make_shared<const EdgeIndex>(g);
  auto bit = [&](VertexId p, VertexId q) { return EdgeMask{1} << index->bit(p, q); };
  std::vector<EdgeMask> masks = {bit(a, b) | bit(a, c), bit(a, b) | bit(b, c),
                                 bit(a, c) | bit(b, c)};
  return TreeCollection(std::move(index), 3, std::move(masks));
}

std::array<SpanningTree, 2> leaf_extensions(const SpanningTree& t, VertexId v,
                                            Edge hn) {
  require_unspanned(t, v, hn);
  auto grow = [&](VertexId w) {
    std::vector<Edge> edges = t.edges;
    edges.push_back(Edge::of(v, w));
    return SpanningTree::from_edges(std::move(edges));
  };
  return {grow(hn.u), grow(hn.v)};
}

std::vector<VertexId> tree_path(const SpanningTree& t, VertexId x, VertexId y) {
  if (x == y) throw std::invalid_argument("path endpoints must differ");
  if (!t.spans(x) || !t.spans(y)) {
    throw std::invalid_argument("path endpoint not spanned by the tree");
  }
  // Depth-first walk from x recording predecessors.
  std::vector<std::pair<VertexId, VertexId>> pred{{x, 0}};
  std::vector<VertexId> stack{x};
  auto predecessor = [&](VertexId w) -> const VertexId* {
    for (const auto& [node, from] : pred) {
      if (node == w) return &from;
    }
    return nullptr;
  };
  while (!stack.empty()) {
    VertexId w = stack.back();
    stack.pop_back();
    if (w == y) break;
    for (const Edge& e : t.edges) {
      if (!e.has(w)) continue;
      VertexId next = e.other(w);
      if (predecessor(next)) continue;
      pred.emplace_back(next, w);
      stack.push_back(next);
    }
  }
  std::vector<VertexId> path;
  for (VertexId w = y; w != 0; w = *predecessor(w)) path.push_back(w);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<SpanningTree> nonleaf_extensions(const SpanningTree& t, VertexId v,
                                             Edge hn) {
  require_unspanned(t, v, hn);
  if (std::binary_search(t.edges.begin(), t.edges.end(), hn)) {
    throw std::invalid_argument("tree already contains the higher neighbourhood edge");
  }
  const std::vector<VertexId> path = tree_path(t, hn.u, hn.v);
  std::vector<SpanningTree> out;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    const Edge cut = Edge::of(path[k], path[k + 1]);
    std::vector<Edge> edges;
    for (const Edge& e : t.edges) {
      if (e != cut) edges.push_back(e);
    }
    edges.push_back(Edge::of(v, hn.u));
    edges.push_back(Edge::of(v, hn.v));
    out.push_back(SpanningTree::from_edges(std::move(edges)));
  }
  return out;
}

bool recurrence_holds(const IterationStats& s) {
  if (s.leaf_count != 2 * s.parents) return false;
  const std::uint64_t cycle = static_cast<std::uint64_t>(std::max(s.max_cycle_len, 2));
  return s.leaf_count + s.nonleaf_raw <= cycle * s.parents;
}

namespace detail {

void require_two_tree(const Graph& g) {
  TwoTreeReport report = validate_two_tree(g);
  if (!report.accepted) throw NotTwoTreeError("not a 2-tree: " + report.reason);
  if (g.edge_count() > EdgeIndex::kMaxEdges) {
    throw GuardError("2-tree has " + std::to_string(g.vertex_count()) +
                     " vertices; enumeration supports at most " +
                     std::to_string((EdgeIndex::kMaxEdges + 3) / 2));
  }
}

std::vector<ExtensionStep> extension_steps(const SimplicialOrdering& ord,
                                           const EdgeIndex& index) {
  std::vector<ExtensionStep> steps;
  const std::vector<VertexId> order = ord.construction_order();
  for (size_t k = 3; k < order.size(); ++k) {
    ExtensionStep s;
    s.i = static_cast<int>(k) + 1;
    s.v = order[k];
    s.hn = ord.higher_nbr.at(s.v);
    s.vx = EdgeMask{1} << index.bit(s.v, s.hn.u);
    s.vy = EdgeMask{1} << index.bit(s.v, s.hn.v);
    s.xy = EdgeMask{1} << index.bit(s.hn.u, s.hn.v);
    steps.push_back(s);
  }
  return steps;
}

std::vector<EdgeMask> base_masks(const SimplicialOrdering& ord,
                                 const EdgeIndex& index) {
  auto [a, b, c] = ascending(ord.base);
  auto bit = [&](VertexId p, VertexId q) { return EdgeMask{1} << index.bit(p, q); };
  return {bit(a, b) | bit(a, c), bit(a, b) | bit(b, c), bit(a, c) | bit(b, c)};
}

PathScratch::PathScratch(int n)
    : adj_start_(n + 2),
      adj_vertex_(2 * EdgeIndex::kMaxEdges),
      adj_bit_(2 * EdgeIndex::kMaxEdges),
      fill_(n + 1),
      parent_bit_(n + 1),
      queue_(n + 1) {}

void PathScratch::path_bits(EdgeMask tree, VertexId x, VertexId y,
                            const EdgeIndex& index, std::vector<EdgeMask>& out) {
  const int n = index.vertex_count();
  std::fill(adj_start_.begin(), adj_start_.end(), 0);
  for (EdgeMask m = tree; m; m &= m - 1) {
    const Edge& e = index.edge(std::countr_zero(m));
    ++adj_start_[e.u + 1];
    ++adj_start_[e.v + 1];
  }
  for (int v = 1; v <= n; ++v) adj_start_[v + 1] += adj_start_[v];
  std::copy(adj_start_.begin(), adj_start_.begin() + n + 1, fill_.begin());
  for (EdgeMask m = tree; m; m &= m - 1) {
    const int b = std::countr_zero(m);
    const Edge& e = index.edge(b);
    adj_vertex_[fill_[e.u]] = e.v;
    adj_bit_[fill_[e.u]++] = b;
    adj_vertex_[fill_[e.v]] = e.u;
    adj_bit_[fill_[e.v]++] = b;
  }

  // Breadth-first from y so the walk back from x lists the path x -> y.
  std::fill(parent_bit_.begin(), parent_bit_.end(), -2);
  parent_bit_[y] = -1;
  int head = 0;
  int tail = 0;
  queue_[tail++] = y;
  while (head < tail && parent_bit_[x] == -2) {
    const int w = queue_[head++];
    for (int k = adj_start_[w]; k < adj_start_[w + 1]; ++k) {
      const int next = adj_vertex_[k];
      if (parent_bit_[next] != -2) continue;
      parent_bit_[next] = adj_bit_[k];
      queue_[tail++] = next;
    }
  }
  out.clear();
  for (VertexId w = x; w != y;) {
    const int b = parent_bit_[w];
    out.push_back(EdgeMask{1} << b);
    w = index.edge(b).other(w);
  }
}

void expand_range(std::span<const EdgeMask> parents, const ExtensionStep& step,
                  const EdgeIndex& index, bool keep_leaf, PathScratch& scratch,
                  ChildBatch& out) {
  std::vector<EdgeMask> path;
  for (EdgeMask parent : parents) {
    if (keep_leaf) {
      out.leaf.push_back(parent | step.vx);
      out.leaf.push_back(parent | step.vy);
    }
    out.leaf_count += 2;
    if (parent & step.xy) continue;
    scratch.path_bits(parent, step.hn.u, step.hn.v, index, path);
    const EdgeMask grown = parent | step.vx | step.vy;
    for (EdgeMask cut : path) out.nonleaf.push_back(grown & ~cut);
    // Cycle = the new vertex plus the path's vertices.
    out.max_cycle_len =
        std::max(out.max_cycle_len, static_cast<int>(path.size()) + 2);
  }
}

DriveResult drive(const EdgeIndex& index, const SimplicialOrdering& ord,
                  const GenerationBuilder& build, bool retain_final,
                  const TreeSink* sink) {
  DriveResult result;
  const std::vector<ExtensionStep> steps = extension_steps(ord, index);
  std::vector<EdgeMask> current = base_masks(ord, index);

  auto emit = [&](EdgeMask m) {
    if (sink && *sink) (*sink)(index.decode(m));
  };

  if (steps.empty()) {
    result.summary.count = current.size();
    if (retain_final) {
      result.final_masks = std::move(current);
    } else {
      for (EdgeMask m : current) emit(m);
    }
    return result;
  }

  for (size_t k = 0; k < steps.size(); ++k) {
    const ExtensionStep& step = steps[k];
    const bool last = k + 1 == steps.size();
    const bool keep_leaf = !last || retain_final;
    Generation gen = build(current, step, keep_leaf);
    if (!recurrence_holds(gen.stats)) {
      throw std::logic_error("iteration " + std::to_string(step.i) +
                             " violates the spanning-tree count recurrence");
    }
    result.summary.stats.push_back(gen.stats);
    if (last && !retain_final) {
      if (sink && *sink) {
        for (EdgeMask parent : current) {
          emit(parent | step.vx);
          emit(parent | step.vy);
        }
        for (EdgeMask m : gen.nonleaf) emit(m);
      }
      result.summary.count = gen.stats.total();
      return result;
    }
    // Double buffering: the parent generation is released here.
    std::vector<EdgeMask> next = std::move(gen.leaf);
    next.insert(next.end(), gen.nonleaf.begin(), gen.nonleaf.end());
    current = std::move(next);
  }
  result.summary.count = current.size();
  result.final_masks = std::move(current);
  return result;
}

}  // namespace detail

namespace {

detail::Generation build_sequential(std::span<const EdgeMask> parents,
                                    const detail::ExtensionStep& step,
                                    const EdgeIndex& index, bool keep_leaf) {
  detail::PathScratch scratch(index.vertex_count());
  detail::ChildBatch batch;
  if (keep_leaf) batch.leaf.reserve(2 * parents.size());
  detail::expand_range(parents, step, index, keep_leaf, scratch, batch);

  detail::Generation gen;
  gen.leaf = std::move(batch.leaf);
  absl::flat_hash_set<EdgeMask> seen;
  seen.reserve(batch.nonleaf.size());
  for (EdgeMask m : batch.nonleaf) {
    if (seen.insert(m).second) gen.nonleaf.push_back(m);
  }
  gen.stats.i = step.i;
  gen.stats.vertex = step.v;
  gen.stats.higher_nbr = step.hn;
  gen.stats.parents = parents.size();
  gen.stats.leaf_count = batch.leaf_count;
  gen.stats.nonleaf_raw = batch.nonleaf.size();
  gen.stats.nonleaf_kept = gen.nonleaf.size();
  gen.stats.max_cycle_len = batch.max_cycle_len;
  return gen;
}

}  // namespace

Enumeration enumerate_spanning_trees(const Graph& g) {
  detail::require_two_tree(g);
  auto index = std::make_shared<const EdgeIndex>(g);
  SimplicialOrdering ord = two_simplicial_ordering(g);
  auto build = [&](std::span<const EdgeMask> parents,
                   const detail::ExtensionStep& step, bool keep_leaf) {
    return build_sequential(parents, step, *index, keep_leaf);
  };
  detail::DriveResult r = detail::drive(*index, ord, build, true, nullptr);
  TreeCollection trees(index, g.vertex_count(), std::move(r.final_masks));
  return Enumeration{std::move(ord), std::move(trees),
                     std::move(r.summary.stats)};
}

StreamSummary stream_spanning_trees(const Graph& g, const TreeSink& sink) {
  detail::require_two_tree(g);
  EdgeIndex index(g);
  SimplicialOrdering ord = two_simplicial_ordering(g);
  auto build = [&](std::span<const EdgeMask> parents,
                   const detail::ExtensionStep& step, bool keep_leaf) {
    return build_sequential(parents, step, index, keep_leaf);
  };
  return detail::drive(index, ord, build, false, &sink).summary;
}

BigCount lower_bound_count(int n) {
  if (n < 3) {
    throw std::invalid_argument("lower bound defined for n >= 3, got " +
                                std::to_string(n));
  }
  return BigCount(3) << (n - 3);
}

}  // namespace twotree
