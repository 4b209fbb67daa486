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

#include "twotree/peo.h"

#include <algorithm>
#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "absl/container/flat_hash_map.h"
#include "twotree/errors.h"
#include "twotree/worker_pool.h"

namespace twotree {

std::string format_peo(std::span<const VertexId> order) {
  std::string out;
  for (VertexId v : order) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

bool verify_peo(const Graph& g, const Peo& p) {
  const int n = g.vertex_count();
  std::vector<int> pos(n + 1, -1);
  if (static_cast<int>(p.order.size()) != n) {
    throw std::invalid_argument("ordering is not a permutation of the vertices");
  }
  for (int k = 0; k < n; ++k) {
    const VertexId v = p.order[k];
    if (!g.contains(v) || pos[v] >= 0) {
      throw std::invalid_argument("ordering is not a permutation of the vertices");
    }
    pos[v] = k;
  }
  for (VertexId v : p.order) {
    std::vector<VertexId> later;
    for (VertexId w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (size_t a = 0; a < later.size(); ++a) {
      for (size_t b = a + 1; b < later.size(); ++b) {
        if (!g.has_edge(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

namespace {

using VertexSet = std::uint64_t;

VertexSet bit_of(VertexId v) { return VertexSet{1} << (v - 1); }

std::string describe(VertexSet set) {
  std::string out = "{";
  for (VertexSet s = set; s; s &= s - 1) {
    if (out.size() > 1) out += ',';
    out += std::to_string(std::countr_zero(s) + 1);
  }
  return out + "}";
}

// Closed neighbourhoods as bit sets, for residual-set recursion.
class ChordalView {
 public:
  explicit ChordalView(const Graph& g) : n_(g.vertex_count()) {
    if (n_ < 1) throw std::invalid_argument("PEO routines need n >= 1");
    if (n_ > kMaxPeoVertices) {
      throw GuardError("PEO routines support at most " +
                       std::to_string(kMaxPeoVertices) + " vertices");
    }
    closed_.assign(n_ + 1, 0);
    for (VertexId v = 1; v <= n_; ++v) {
      closed_[v] = bit_of(v);
      for (VertexId w : g.neighbors(v)) closed_[v] |= bit_of(w);
    }
  }

  VertexSet all() const {
    return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
  }

  bool is_clique(VertexSet r) const {
    for (VertexSet s = r; s; s &= s - 1) {
      const VertexId v = std::countr_zero(s) + 1;
      if ((closed_[v] & r) != r) return false;
    }
    return true;
  }

  bool simplicial(VertexId v, VertexSet r) const {
    const VertexSet nb = closed_[v] & r;
    for (VertexSet s = nb; s; s &= s - 1) {
      const VertexId w = std::countr_zero(s) + 1;
      if ((closed_[w] & nb) != nb) return false;
    }
    return true;
  }

  // Simplicial vertices of a non-complete residual. Every non-complete
  // chordal graph has two nonadjacent ones; anything less proves the input
  // is not chordal.
  VertexSet branch_set(VertexSet r) const {
    VertexSet simp = 0;
    for (VertexSet s = r; s; s &= s - 1) {
      const VertexId v = std::countr_zero(s) + 1;
      if (simplicial(v, r)) simp |= bit_of(v);
    }
    if (simp == 0) {
      throw NotChordalError("not chordal: residual " + describe(r) +
                            " has no simplicial vertex");
    }
    for (VertexSet s = simp; s; s &= s - 1) {
      const VertexId v = std::countr_zero(s) + 1;
      if (simp & ~closed_[v]) return simp;
    }
    throw NotChordalError("not chordal: residual " + describe(r) +
                          " lacks two nonadjacent simplicial vertices");
  }

 private:
  int n_;
  std::vector<VertexSet> closed_;
};

std::vector<VertexId> members(VertexSet set) {
  std::vector<VertexId> out;
  for (VertexSet s = set; s; s &= s - 1) out.push_back(std::countr_zero(s) + 1);
  return out;
}

class PeoWalker {
 public:
  PeoWalker(const ChordalView& view, const PeoSink& sink)
      : view_(view), sink_(sink) {}

  void walk(VertexSet r) {
    if (view_.is_clique(r)) {
      emit_permutations(members(r), prefix_.size());
      return;
    }
    const VertexSet branch = view_.branch_set(r);
    for (VertexSet s = branch; s; s &= s - 1) {
      const VertexId v = std::countr_zero(s) + 1;
      prefix_.push_back(v);
      walk(r & ~bit_of(v));
      prefix_.pop_back();
    }
  }

  // Appends every permutation of `rest` (ascending on entry) to the prefix.
  void emit_permutations(std::vector<VertexId> rest, size_t prefix_len) {
    prefix_.resize(prefix_len + rest.size());
    do {
      std::copy(rest.begin(), rest.end(), prefix_.begin() + prefix_len);
      ++emitted_;
      if (sink_) sink_(prefix_);
    } while (std::next_permutation(rest.begin(), rest.end()));
    prefix_.resize(prefix_len);
  }

  std::vector<VertexId>& prefix() { return prefix_; }
  std::uint64_t emitted() const { return emitted_; }

 private:
  const ChordalView& view_;
  const PeoSink& sink_;
  std::vector<VertexId> prefix_;
  std::uint64_t emitted_ = 0;
};

class CountMemo {
 public:
  explicit CountMemo(const ChordalView& view) : view_(view) {}

  BigCount count(VertexSet r) {
    if (auto it = memo_.find(r); it != memo_.end()) return it->second;
    BigCount c = 0;
    if (view_.is_clique(r)) {
      c = factorial(std::popcount(r));
    } else {
      const VertexSet branch = view_.branch_set(r);
      for (VertexSet s = branch; s; s &= s - 1) {
        c += count(r & ~(VertexSet{1} << std::countr_zero(s)));
      }
    }
    memo_.emplace(r, c);
    return c;
  }

  BigCount bound(VertexSet r) {
    if (auto it = bound_memo_.find(r); it != bound_memo_.end()) return it->second;
    BigCount c = 0;
    if (view_.is_clique(r)) {
      c = factorial(std::popcount(r));
    } else {
      const VertexSet branch = view_.branch_set(r);
      bool first = true;
      for (VertexSet s = branch; s; s &= s - 1) {
        const BigCount sub = bound(r & ~(VertexSet{1} << std::countr_zero(s)));
        if (first || sub < c) c = sub;
        first = false;
      }
      c *= 2;
    }
    bound_memo_.emplace(r, c);
    return c;
  }

 private:
  const ChordalView& view_;
  absl::flat_hash_map<VertexSet, BigCount> memo_;
  absl::flat_hash_map<VertexSet, BigCount> bound_memo_;
};

}  // namespace

std::uint64_t enumerate_peos(const Graph& g, const PeoSink& sink) {
  ChordalView view(g);
  PeoWalker walker(view, sink);
  walker.walk(view.all());
  return walker.emitted();
}

BigCount count_peos(const Graph& g) {
  ChordalView view(g);
  CountMemo memo(view);
  return memo.count(view.all());
}

BigCount min_peo_bound(const Graph& g) {
  ChordalView view(g);
  CountMemo memo(view);
  return memo.bound(view.all());
}

std::vector<PeoTask> peo_tasks(const Graph& g, std::size_t target) {
  ChordalView view(g);
  std::vector<PeoTask> tasks{PeoTask{{}, view.all(), std::nullopt}};
  while (tasks.size() < target) {
    std::vector<PeoTask> next;
    bool split = false;
    for (PeoTask& t : tasks) {
      if (t.first || std::popcount(t.residual) <= 1) {
        next.push_back(std::move(t));
        continue;
      }
      split = true;
      if (view.is_clique(t.residual)) {
        // Clique permutations partitioned by their first vertex.
        for (VertexId v : members(t.residual)) {
          next.push_back(PeoTask{t.prefix, t.residual, v});
        }
        continue;
      }
      const VertexSet branch = view.branch_set(t.residual);
      for (VertexId v : members(branch)) {
        PeoTask child{t.prefix, t.residual & ~bit_of(v), std::nullopt};
        child.prefix.push_back(v);
        next.push_back(std::move(child));
      }
    }
    tasks = std::move(next);
    if (!split) break;
  }
  return tasks;
}

std::uint64_t run_peo_task(const Graph& g, const PeoTask& task,
                           const PeoSink& sink) {
  ChordalView view(g);
  PeoWalker walker(view, sink);
  walker.prefix() = task.prefix;
  if (task.first) {
    const VertexId f = *task.first;
    walker.prefix().push_back(f);
    walker.emit_permutations(members(task.residual & ~bit_of(f)),
                             walker.prefix().size());
  } else {
    walker.walk(task.residual);
  }
  return walker.emitted();
}

std::uint64_t parallel_enumerate_peos(const Graph& g, const ParallelConfig& cfg,
                                      const PeoSink& sink) {
  validate_config(cfg);
  const std::vector<PeoTask> tasks =
      peo_tasks(g, 4 * static_cast<std::size_t>(cfg.workers));
  std::mutex sink_mu;
  std::vector<std::uint64_t> emitted(tasks.size(), 0);
  constexpr std::size_t kFlushOrderings = 4096;

  WorkerPool pool(cfg.workers);
  pool.run(tasks.size(), [&](std::size_t k) {
    // Orderings are batched locally and flushed through the shared sink.
    std::vector<VertexId> batch;
    std::size_t width = 0;
    auto flush = [&] {
      if (batch.empty() || !sink) return;
      std::lock_guard<std::mutex> lock(sink_mu);
      for (std::size_t at = 0; at < batch.size(); at += width) {
        sink(std::span<const VertexId>(batch.data() + at, width));
      }
      batch.clear();
    };
    PeoSink local = [&](std::span<const VertexId> order) {
      width = order.size();
      batch.insert(batch.end(), order.begin(), order.end());
      if (batch.size() >= kFlushOrderings * width) flush();
    };
    emitted[k] = run_peo_task(g, tasks[k], sink ? local : PeoSink());
    flush();
  });
  std::uint64_t total = 0;
  for (std::uint64_t e : emitted) total += e;
  return total;
}

namespace {

std::unique_ptr<PeoRecursionNode> build_node(const ChordalView& view,
                                             VertexSet r) {
  auto node = std::make_unique<PeoRecursionNode>();
  node->residual = members(r);
  if (view.is_clique(r)) return node;
  for (VertexId v : members(view.branch_set(r))) {
    node->children.emplace(v, build_node(view, r & ~bit_of(v)));
  }
  return node;
}

void dump_node(const PeoRecursionNode& node, int depth, std::ostringstream& out) {
  for (const auto& [v, child] : node.children) {
    out << std::string(2 * depth, ' ') << "-" << v << " {"
        << format_peo(child->residual) << "}";
    if (child->is_leaf()) {
      out << " clique: " << factorial(static_cast<int>(child->residual.size()))
          << " orderings";
    }
    out << '\n';
    dump_node(*child, depth + 1, out);
  }
}

}  // namespace

std::unique_ptr<PeoRecursionNode> build_peo_tree(const Graph& g) {
  constexpr int kMaxTreeVertices = 10;
  if (g.vertex_count() > kMaxTreeVertices) {
    throw GuardError("recursion tree dump supports at most " +
                     std::to_string(kMaxTreeVertices) + " vertices");
  }
  ChordalView view(g);
  return build_node(view, view.all());
}

std::string dump_peo_tree(const Graph& g) {
  auto root = build_peo_tree(g);
  std::ostringstream out;
  out << "{" << format_peo(root->residual) << "}";
  if (root->is_leaf()) {
    out << " clique: " << factorial(static_cast<int>(root->residual.size()))
        << " orderings";
  }
  out << '\n';
  dump_node(*root, 1, out);
  return out.str();
}

}  // namespace twotree
