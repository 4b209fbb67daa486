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

#ifndef TWOTREE_ORACLES_H_
#define TWOTREE_ORACLES_H_

// Independent ground truth for the enumerators. Nothing here shares code
// with the spanning-tree or PEO engines.

#include <vector>

#include "twotree/big_count.h"
#include "twotree/graph.h"
#include "twotree/peo.h"
#include "twotree/spanning_trees.h"

namespace twotree {

// Spanning-tree count via the matrix-tree theorem: determinant of the
// Laplacian with its last row and column removed, by fraction-free
// (Bareiss) elimination over exact integers. 0 for a disconnected graph;
// 1 for n <= 1.
BigCount kirchhoff_count(const Graph& g);

inline constexpr int kBruteForceMaxEdges = 24;
inline constexpr int kBruteForceMaxPeoVertices = 8;

// Every (n-1)-edge subset that is acyclic, sorted. GuardError when the
// graph has more than kBruteForceMaxEdges edges.
std::vector<SpanningTree> brute_force_spanning_trees(const Graph& g);

// Every permutation accepted by verify_peo, lexicographically sorted.
// GuardError above kBruteForceMaxPeoVertices vertices.
std::vector<Peo> brute_force_peos(const Graph& g);

// n^(n-2), and 1 for n == 1. Throws std::invalid_argument for n < 1.
BigCount cayley_count(int n);

}  // namespace twotree

#endif  // TWOTREE_ORACLES_H_
