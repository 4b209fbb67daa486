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

#include <gtest/gtest.h>

#include <set>

#include "test_graphs.h"
#include "twotree/errors.h"
#include "twotree/oracles.h"

namespace twotree {
namespace {

using testing::complete_graph;
using testing::sample_five;
using testing::sample_four;

SpanningTree tree(std::vector<Edge> edges) {
  return SpanningTree::from_edges(std::move(edges));
}

// Reference enumerator assembled from the list-based public operations.
std::set<SpanningTree> reference_enumeration(const Graph& g) {
  SimplicialOrdering ord = two_simplicial_ordering(g);
  std::set<SpanningTree> current;
  for (const SpanningTree& t : base_spanning_trees(g, ord.base).trees()) {
    current.insert(t);
  }
  const auto order = ord.construction_order();
  for (size_t k = 3; k < order.size(); ++k) {
    const VertexId v = order[k];
    const Edge hn = ord.higher_nbr.at(v);
    std::set<SpanningTree> next;
    for (const SpanningTree& t : current) {
      for (SpanningTree& child : leaf_extensions(t, v, hn)) next.insert(child);
      if (std::binary_search(t.edges.begin(), t.edges.end(), hn)) continue;
      for (SpanningTree& child : nonleaf_extensions(t, v, hn)) next.insert(child);
    }
    current = std::move(next);
  }
  return current;
}

std::set<SpanningTree> as_set(const TreeCollection& c) {
  auto trees = c.trees();
  return {trees.begin(), trees.end()};
}

TEST(SpanningTree, FormatAndParse) {
  SpanningTree t = tree({{2, 4}, {1, 3}, {1, 2}});
  EXPECT_EQ(t.vertex_count, 4);
  EXPECT_EQ(format_tree(t), "1-2 1-3 2-4");
  EXPECT_EQ(parse_tree("1-2 1-3 2-4"), t);
  EXPECT_EQ(parse_tree("4-2 1-3 2-1"), t);
  EXPECT_THROW(parse_tree("1-2 13"), std::invalid_argument);
  EXPECT_THROW(parse_tree("1-1"), std::invalid_argument);
}

TEST(SpanningTree, IsSpanningTreeOf) {
  const Graph g = sample_four();
  EXPECT_TRUE(is_spanning_tree_of(tree({{1, 2}, {1, 3}, {1, 4}}), g));
  EXPECT_FALSE(is_spanning_tree_of(tree({{1, 2}, {1, 3}, {3, 4}}), g));  // non-edge
  EXPECT_FALSE(is_spanning_tree_of(tree({{1, 2}, {1, 3}, {2, 3}}), g));  // cycle
  EXPECT_FALSE(is_spanning_tree_of(tree({{1, 2}, {1, 3}}), g));
}

TEST(EdgeIndexTest, EncodeDecode) {
  const Graph g = sample_five();
  EdgeIndex index(g);
  EXPECT_EQ(index.edge_count(), 7);
  EXPECT_EQ(index.bit(1, 2), 0);
  EXPECT_EQ(index.bit(5, 4), 6);
  EXPECT_EQ(index.bit(3, 5), -1);
  SpanningTree t = tree({{1, 3}, {2, 5}, {2, 3}, {4, 5}});
  EXPECT_EQ(index.decode(index.encode(t)), t);
  EXPECT_THROW(index.encode(tree({{3, 5}, {1, 2}})), std::invalid_argument);
}

TEST(EdgeIndexTest, GuardsWideGraphs) {
  EXPECT_THROW(EdgeIndex(complete_graph(12)), GuardError);  // 66 edges
  EXPECT_NO_THROW(EdgeIndex(random_two_tree(33, 1)));       // 63 edges
}

TEST(BaseSpanningTrees, Triangle) {
  TreeCollection base = base_spanning_trees(complete_graph(3), {1, 2, 3});
  ASSERT_EQ(base.size(), 3u);
  EXPECT_EQ(base.generation(), 3);
  EXPECT_EQ(base.tree(0), tree({{1, 2}, {1, 3}}));
  EXPECT_EQ(base.tree(1), tree({{1, 2}, {2, 3}}));
  EXPECT_EQ(base.tree(2), tree({{1, 3}, {2, 3}}));
}

TEST(BaseSpanningTrees, RelabeledTriple) {
  const Graph g = sample_five();
  TreeCollection base = base_spanning_trees(g, {5, 4, 2});
  ASSERT_EQ(base.size(), 3u);
  EXPECT_EQ(base.tree(0), tree({{2, 4}, {2, 5}}));
  EXPECT_EQ(base.tree(1), tree({{2, 4}, {4, 5}}));
  EXPECT_EQ(base.tree(2), tree({{2, 5}, {4, 5}}));
  EXPECT_THROW(base_spanning_trees(g, {1, 3, 5}), NotTwoTreeError);
}

TEST(LeafExtensions, Examples) {
  auto [a, b] = leaf_extensions(tree({{1, 2}, {1, 3}}), 4, {1, 2});
  EXPECT_EQ(a, tree({{1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(b, tree({{1, 2}, {1, 3}, {2, 4}}));

  auto [c, d] = leaf_extensions(tree({{1, 3}, {2, 3}}), 4, {1, 2});
  EXPECT_EQ(c, tree({{1, 3}, {2, 3}, {1, 4}}));
  EXPECT_EQ(d, tree({{1, 3}, {2, 3}, {2, 4}}));
  for (const SpanningTree& t : {a, b, c, d}) {
    EXPECT_EQ(t.edges.size(), 3u);
    EXPECT_EQ(t.degree(4), 1);
  }
}

TEST(LeafExtensions, Preconditions) {
  EXPECT_THROW(leaf_extensions(tree({{1, 2}, {1, 3}}), 3, {1, 2}),
               std::invalid_argument);
  EXPECT_THROW(leaf_extensions(tree({{1, 2}, {1, 3}}), 5, {1, 4}),
               std::invalid_argument);
}

TEST(TreePath, Examples) {
  EXPECT_EQ(tree_path(tree({{1, 3}, {2, 3}}), 1, 2),
            (std::vector<VertexId>{1, 3, 2}));
  EXPECT_EQ(tree_path(tree({{1, 2}, {1, 3}}), 1, 2),
            (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(tree_path(tree({{1, 3}, {2, 3}, {2, 4}}), 1, 4),
            (std::vector<VertexId>{1, 3, 2, 4}));
  EXPECT_THROW(tree_path(tree({{1, 3}, {2, 3}}), 1, 7), std::invalid_argument);
}

TEST(NonleafExtensions, Examples) {
  auto out = nonleaf_extensions(tree({{1, 3}, {2, 3}}), 4, {1, 2});
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], tree({{2, 3}, {1, 4}, {2, 4}}));
  EXPECT_EQ(out[1], tree({{1, 3}, {1, 4}, {2, 4}}));
  for (const SpanningTree& t : out) EXPECT_EQ(t.degree(4), 2);

  EXPECT_THROW(nonleaf_extensions(tree({{1, 2}, {1, 3}}), 4, {1, 2}),
               std::invalid_argument);
}

TEST(NonleafExtensions, CountIsCycleLengthMinusTwo) {
  // Path 1-3-5-2 between the higher neighbours: cycle 4,1,3,5,2 has 5 edges.
  SpanningTree t = tree({{1, 3}, {3, 5}, {2, 5}});
  auto out = nonleaf_extensions(t, 4, {1, 2});
  const size_t cycle_len = tree_path(t, 1, 2).size() + 1;
  EXPECT_EQ(out.size(), cycle_len - 2);
}

TEST(EnumerateSpanningTrees, Triangle) {
  Enumeration e = enumerate_spanning_trees(complete_graph(3));
  EXPECT_EQ(e.trees.size(), 3u);
  EXPECT_TRUE(e.stats.empty());
}

TEST(EnumerateSpanningTrees, FourVertexTrace) {
  Enumeration e = enumerate_spanning_trees(sample_four());
  EXPECT_EQ(e.trees.size(), 8u);
  ASSERT_EQ(e.stats.size(), 1u);
  EXPECT_EQ(e.stats[0].i, 4);
  EXPECT_EQ(e.stats[0].leaf_count, 6u);
  EXPECT_EQ(e.stats[0].nonleaf_kept, 2u);
  EXPECT_EQ(e.stats[0].max_cycle_len, 4);
}

TEST(EnumerateSpanningTrees, FiveVertexTrace) {
  const Graph g = sample_five();
  ASSERT_EQ(kirchhoff_count(g), 21);
  Enumeration e = enumerate_spanning_trees(g);
  EXPECT_EQ(e.trees.size(), 21u);
  ASSERT_EQ(e.stats.size(), 2u);
  EXPECT_EQ(e.stats[0].leaf_count, 6u);
  EXPECT_EQ(e.stats[0].nonleaf_kept, 2u);
  EXPECT_EQ(e.stats[1].i, 5);
  EXPECT_EQ(e.stats[1].leaf_count, 16u);
  EXPECT_EQ(e.stats[1].nonleaf_kept, 5u);
}

TEST(EnumerateSpanningTrees, RejectsNonTwoTree) {
  EXPECT_THROW(enumerate_spanning_trees(testing::cycle_graph(5)), NotTwoTreeError);
  EXPECT_THROW(enumerate_spanning_trees(complete_graph(4)), NotTwoTreeError);
}

TEST(EnumerateSpanningTrees, MatchesBruteForceSmall) {
  for (int n = 3; n <= 9; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = random_two_tree(n, seed);
      const auto brute = brute_force_spanning_trees(g);
      EXPECT_EQ(as_set(enumerate_spanning_trees(g).trees),
                std::set<SpanningTree>(brute.begin(), brute.end()))
          << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(EnumerateSpanningTrees, MatchesKirchhoff) {
  for (int n = 10; n <= 14; ++n) {
    const Graph g = random_two_tree(n, 100 + n);
    EXPECT_EQ(BigCount(enumerate_spanning_trees(g).trees.size()),
              kirchhoff_count(g))
        << "n=" << n;
  }
}

TEST(EnumerateSpanningTrees, EngineMatchesListOperations) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = random_two_tree(9, seed);
    EXPECT_EQ(as_set(enumerate_spanning_trees(g).trees),
              reference_enumeration(g));
  }
}

TEST(EnumerateSpanningTrees, SoundAndDuplicateFree) {
  const Graph g = random_two_tree(12, 5);
  Enumeration e = enumerate_spanning_trees(g);
  std::set<EdgeMask> unique(e.trees.masks().begin(), e.trees.masks().end());
  EXPECT_EQ(unique.size(), e.trees.size());
  EXPECT_EQ(e.trees.generation(), 12);
  for (const SpanningTree& t : e.trees.trees()) {
    ASSERT_TRUE(is_spanning_tree_of(t, g)) << format_tree(t);
  }
}

TEST(EnumerateSpanningTrees, StageSplitByDegree) {
  const Graph g = random_two_tree(10, 8);
  Enumeration e = enumerate_spanning_trees(g);
  const IterationStats& last = e.stats.back();
  std::uint64_t leaf = 0;
  std::uint64_t two = 0;
  for (const SpanningTree& t : e.trees.trees()) {
    const int d = t.degree(last.vertex);
    ASSERT_TRUE(d == 1 || d == 2);
    (d == 1 ? leaf : two) += 1;
  }
  EXPECT_EQ(leaf, last.leaf_count);
  EXPECT_EQ(two, last.nonleaf_kept);
  // Leaf stage emits both children of each parent first, in parent order.
  for (std::uint64_t k = 0; k < last.leaf_count; ++k) {
    EXPECT_EQ(e.trees.tree(k).degree(last.vertex), 1);
  }
}

TEST(EnumerateSpanningTrees, RecurrenceAndLowerBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_two_tree(4 + static_cast<int>(seed % 11), seed);
    Enumeration e = enumerate_spanning_trees(g);
    std::uint64_t previous = 3;
    for (const IterationStats& s : e.stats) {
      EXPECT_EQ(s.parents, previous);
      EXPECT_EQ(s.leaf_count, 2 * previous);
      EXPECT_LE(s.leaf_count + s.nonleaf_raw,
                static_cast<std::uint64_t>(s.max_cycle_len) * previous);
      EXPECT_LE(s.nonleaf_kept, s.nonleaf_raw);
      EXPECT_TRUE(recurrence_holds(s));
      previous = s.total();
    }
    EXPECT_GE(BigCount(e.trees.size()), lower_bound_count(g.vertex_count()));
  }
}

TEST(StreamSpanningTrees, MatchesRetainedEnumeration) {
  const Graph g = random_two_tree(11, 2);
  Enumeration e = enumerate_spanning_trees(g);
  std::vector<SpanningTree> streamed;
  StreamSummary s =
      stream_spanning_trees(g, [&](const SpanningTree& t) { streamed.push_back(t); });
  EXPECT_EQ(s.count, e.trees.size());
  EXPECT_EQ(streamed, e.trees.trees());  // same order as well
  EXPECT_EQ(stream_spanning_trees(g, TreeSink()).count, e.trees.size());
}

TEST(RecurrenceHolds, DetectsViolations) {
  IterationStats s;
  s.parents = 3;
  s.leaf_count = 6;
  s.nonleaf_raw = 2;
  s.max_cycle_len = 4;
  EXPECT_TRUE(recurrence_holds(s));
  s.nonleaf_raw = 7;
  EXPECT_FALSE(recurrence_holds(s));
  s.nonleaf_raw = 2;
  s.leaf_count = 5;
  EXPECT_FALSE(recurrence_holds(s));
}

TEST(LowerBoundCount, Values) {
  EXPECT_EQ(lower_bound_count(3), 3);
  EXPECT_EQ(lower_bound_count(4), 6);
  EXPECT_EQ(lower_bound_count(10), 384);
  EXPECT_EQ(lower_bound_count(80), BigCount(3) * (BigCount(1) << 77));
  EXPECT_THROW(lower_bound_count(2), std::invalid_argument);
}

}  // namespace
}  // namespace twotree
