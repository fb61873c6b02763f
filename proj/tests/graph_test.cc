// Copyright 2026 The sigraph Authors
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

#include "sigraph/graph.h"

#include <bit>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/error.h"
#include "sigraph/random.h"

namespace sigraph {
namespace {

TEST(VertexSetTest, SortsAndDeduplicates) {
  const VertexSet s{3, 1, 3, 0};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.ToMask(), 0b1011u);
  EXPECT_EQ(VertexSet::FromMask(0b1011), s);
  EXPECT_EQ(VertexSet::Range(2, 5), (VertexSet{2, 3, 4}));
}

TEST(VertexSetTest, SetAlgebra) {
  const VertexSet a{0, 1, 2};
  const VertexSet b{2, 3};
  EXPECT_EQ(Union(a, b), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(Intersection(a, b), (VertexSet{2}));
  EXPECT_EQ(Difference(a, b), (VertexSet{0, 1}));
  EXPECT_EQ(SymmetricDifference(a, b), (VertexSet{0, 1, 3}));
  EXPECT_TRUE(IsSubset(VertexSet{1, 2}, a));
  EXPECT_FALSE(IsSubset(b, a));
  EXPECT_LT((VertexSet{0, 2}), (VertexSet{1}));
}

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), Error);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(3, {{0, 3}}), Error);
  EXPECT_THROW(Graph(-1), Error);
}

TEST(GraphTest, BasicQueries) {
  const Graph g(4, {{2, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edges().front(), (Edge{0, 1}));
  EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(g.degree(3), 0);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(g.NeighborMask(2), 0b011u);
  const Graph sub = g.InducedSubgraph({1, 2, 3});
  EXPECT_EQ(sub, Graph(3, {{0, 1}}));
}

TEST(GraphTest, NamedFamilies) {
  EXPECT_EQ(Graph::Complete(5).num_edges(), 10);
  EXPECT_EQ(Graph::Path(5).num_edges(), 4);
  EXPECT_EQ(Graph::Cycle(5).num_edges(), 5);
  EXPECT_EQ(Complement(Graph::Cycle(5)).num_edges(), 5);
  EXPECT_TRUE(IsTree(Graph::Path(4)));
  EXPECT_FALSE(IsTree(Graph::Cycle(4)));
  EXPECT_FALSE(IsTree(Graph(3, {{0, 1}})));
}

TEST(GraphTest, ComponentsAndCuts) {
  const Graph g(5, {{0, 3}, {1, 4}});
  const auto components = ConnectedComponents(g);
  ASSERT_EQ(components.size(), 3u);
  EXPECT_EQ(components[0], (VertexSet{0, 3}));
  EXPECT_EQ(components[1], (VertexSet{1, 4}));
  EXPECT_EQ(components[2], (VertexSet{2}));
  EXPECT_EQ(EdgeCut(Graph::Cycle(4), {0}), (std::vector<Edge>{{0, 1}, {0, 3}}));
}

TEST(GraphTest, MatchingRejectsOddCycle) {
  try {
    MaximumMatchingSize(Graph::Cycle(5));
    FAIL() << "expected NotBipartiteError";
  } catch (const NotBipartiteError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBipartite);
    ASSERT_EQ(e.odd_cycle().size() % 2, 1u);
  }
}

TEST(GraphTest, BipartiteMatchingAndIndependentSetKonig) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    // Random bipartite graph between [0, a) and [a, n).
    const int n = 2 + trial % 9;
    const int a = n / 2;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(0.4);
    for (Vertex u = 0; u < a; ++u) {
      for (Vertex v = a; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    const Graph g(n, edges);
    const VertexSet mis = MaxIndependentSetBipartite(g);
    for (Vertex u : mis) {
      for (Vertex v : mis) EXPECT_FALSE(g.adjacent(u, v));
    }
    EXPECT_EQ(mis.size(), n - MaximumMatchingSize(g));
    EXPECT_EQ(mis.size(), oracle::CliqueNumberBySubsets(Complement(g)));
  }
}

TEST(GraphTest, CliqueAndChromaticMatchOracles) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = RandomGraph(rng, 1 + trial % 8, 0.5);
    const VertexSet clique = MaxCliqueBruteforce(g);
    for (Vertex u : clique) {
      for (Vertex v : clique) EXPECT_TRUE(u == v || g.adjacent(u, v));
    }
    EXPECT_EQ(clique.size(), oracle::CliqueNumberBySubsets(g));
    EXPECT_EQ(ChromaticNumberBruteforce(g), oracle::ChromaticNumberByMaps(g));
  }
}

TEST(GraphTest, OracleBoundsAreEnforced) {
  try {
    MaxCliqueBruteforce(Graph(6), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleBoundExceeded);
  }
  EXPECT_THROW(ChromaticNumberBruteforce(Graph(6), 5), Error);
}

TEST(GraphTest, MaxBicliqueMatchesEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = RandomGraph(rng, 8, 0.5);
    const VertexSet left{0, 1, 2, 3};
    const VertexSet right{4, 5, 6, 7};
    const Biclique b = MaxBicliqueBruteforce(g, left, right);
    int best = 0;
    for (std::uint64_t l = 1; l < 16; ++l) {
      for (std::uint64_t r = 1; r < 16; ++r) {
        bool complete = true;
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 4; ++j) {
            if ((l >> i & 1) && (r >> j & 1) && !g.adjacent(i, 4 + j)) complete = false;
          }
        }
        if (complete) best = std::max(best, std::popcount(l) + std::popcount(r));
      }
    }
    EXPECT_EQ(b.size(), best);
    if (best == 0) EXPECT_TRUE(b.empty());
    for (Vertex u : b.left) {
      for (Vertex v : b.right) EXPECT_TRUE(g.adjacent(u, v));
    }
  }
}

TEST(GraphTest, MaxBicliqueEmptyWitnessWhenNoCrossEdges) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(MaxBicliqueBruteforce(g, {0, 1}, {2, 3}).empty());
  EXPECT_THROW(MaxBicliqueBruteforce(g, {0, 1}, {1, 2}), Error);
}

}  // namespace
}  // namespace sigraph
