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

#ifndef TWOTREE_SRC_GENERATION_H_
#define TWOTREE_SRC_GENERATION_H_

// Bit-set kernels shared by the sequential and the parallel spanning-tree
// engines. Internal to the library.

#include <functional>
#include <span>
#include <vector>

#include "twotree/spanning_trees.h"

namespace twotree::detail {

// Growth step for one construction vertex; edge masks have a single bit set.
struct ExtensionStep {
  int i = 0;
  VertexId v = 0;
  Edge hn;
  EdgeMask vx = 0;
  EdgeMask vy = 0;
  EdgeMask xy = 0;
};

std::vector<ExtensionStep> extension_steps(const SimplicialOrdering& ord,
                                           const EdgeIndex& index);

std::vector<EdgeMask> base_masks(const SimplicialOrdering& ord,
                                 const EdgeIndex& index);

// Per-thread scratch for tree path queries.
class PathScratch {
 public:
  explicit PathScratch(int n);

  // Single-bit masks of the edges on the x-y path of `tree`, from x to y.
  void path_bits(EdgeMask tree, VertexId x, VertexId y, const EdgeIndex& index,
                 std::vector<EdgeMask>& out);

 private:
  std::vector<int> adj_start_;
  std::vector<int> adj_vertex_;
  std::vector<int> adj_bit_;
  std::vector<int> fill_;
  std::vector<int> parent_bit_;
  std::vector<int> queue_;
};

// Children of a run of parents, before dedup.
struct ChildBatch {
  std::vector<EdgeMask> leaf;
  std::vector<EdgeMask> nonleaf;
  std::uint64_t leaf_count = 0;
  int max_cycle_len = 0;
};

// Leaf children (both per parent, vx first) are stored only when
// `keep_leaf`; they are always counted.
void expand_range(std::span<const EdgeMask> parents, const ExtensionStep& step,
                  const EdgeIndex& index, bool keep_leaf, PathScratch& scratch,
                  ChildBatch& out);

struct Generation {
  std::vector<EdgeMask> leaf;
  std::vector<EdgeMask> nonleaf;  // deduplicated, first occurrence kept
  IterationStats stats;
};

using GenerationBuilder = std::function<Generation(
    std::span<const EdgeMask> parents, const ExtensionStep& step,
    bool keep_leaf)>;

struct DriveResult {
  std::vector<EdgeMask> final_masks;  // empty unless retained
  StreamSummary summary;
};

// Runs generations 4..n with `build`. The last generation is either
// retained (leaf children then degree-2 children) or streamed into `sink`.
// Throws std::logic_error if an iteration breaks the counting recurrence.
DriveResult drive(const EdgeIndex& index, const SimplicialOrdering& ord,
                  const GenerationBuilder& build, bool retain_final,
                  const TreeSink* sink);

// Validates g as a 2-tree and builds its edge index; throws
// NotTwoTreeError / GuardError.
void require_two_tree(const Graph& g);

}  // namespace twotree::detail

#endif  // TWOTREE_SRC_GENERATION_H_
