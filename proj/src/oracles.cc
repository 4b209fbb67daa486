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

#include "twotree/oracles.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twotree/errors.h"

namespace twotree {

BigCount kirchhoff_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  const int dim = n - 1;
  // Laplacian restricted to vertices 1..n-1 (last row/column dropped).
  std::vector<std::vector<BigCount>> a(dim, std::vector<BigCount>(dim, 0));
  for (VertexId v = 1; v < n; ++v) {
    a[v - 1][v - 1] = g.degree(v);
    for (VertexId w : g.neighbors(v)) {
      if (w < n) a[v - 1][w - 1] = -1;
    }
  }

  // Bareiss: after step k every entry below row k is an exact minor, and the
  // division by the previous pivot is exact.
  BigCount prev = 1;
  bool negate = false;
  for (int k = 0; k < dim; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < dim; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  BigCount det = a[dim - 1][dim - 1];
  if (negate) det = -det;
  return det;
}

std::vector<SpanningTree> brute_force_spanning_trees(const Graph& g) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > kBruteForceMaxEdges) {
    throw GuardError("brute force supports at most " +
                     std::to_string(kBruteForceMaxEdges) + " edges, got " +
                     std::to_string(m));
  }
  std::vector<SpanningTree> out;
  const int k = n - 1;
  if (k < 0 || k > m) return out;
  const auto edges = g.edges();

  std::vector<int> parent(n + 1);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  // Walk all k-subsets of the m edges in lexicographic index order.
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::iota(parent.begin(), parent.end(), 0);
    bool acyclic = true;
    for (int idx : pick) {
      int ru = find(edges[idx].u);
      int rv = find(edges[idx].v);
      if (ru == rv) {
        acyclic = false;
        break;
      }
      parent[ru] = rv;
    }
    if (acyclic) {
      std::vector<Edge> chosen;
      for (int idx : pick) chosen.push_back(edges[idx]);
      out.push_back(SpanningTree::from_edges(std::move(chosen)));
    }
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == m - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int r = pos + 1; r < k; ++r) pick[r] = pick[r - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Peo> brute_force_peos(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kBruteForceMaxPeoVertices) {
    throw GuardError("brute force supports at most " +
                     std::to_string(kBruteForceMaxPeoVertices) +
                     " vertices, got " + std::to_string(n));
  }
  std::vector<Peo> out;
  Peo p;
  p.order.resize(n);
  std::iota(p.order.begin(), p.order.end(), 1);
  do {
    if (verify_peo(g, p)) out.push_back(p);
  } while (std::next_permutation(p.order.begin(), p.order.end()));
  return out;
}

BigCount cayley_count(int n) {
  if (n < 1) throw std::invalid_argument("cayley_count needs n >= 1");
  if (n == 1) return 1;
  return boost::multiprecision::pow(BigCount(n), static_cast<unsigned>(n - 2));
}

}  // namespace twotree
