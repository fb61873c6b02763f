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

#include "sigraph/signed_graph.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/error.h"
#include "sigraph/random.h"

namespace sigraph {
namespace {

TEST(SignedGraphTest, SignsAndValidation) {
  const SignedGraph sg(Graph::Cycle(4), {{1, 2}});
  EXPECT_EQ(sg.sign(2, 1), -1);
  EXPECT_EQ(sg.sign(0, 1), 1);
  EXPECT_EQ(sg.sign(0, 2), 0);
  EXPECT_THROW(SignedGraph(Graph::Path(3), {{0, 2}}), Error);
  EXPECT_EQ(PositiveSubgraph(sg).num_edges(), 3);
  EXPECT_EQ(NegativeSubgraph(sg), Graph(4, {{1, 2}}));
}

TEST(SignedGraphTest, ResignFlipsCutEdges) {
  const SignedGraph sg(Graph::Cycle(4), {{1, 2}});
  const SignedGraph flipped = Resign(sg, {1});
  EXPECT_EQ(flipped.signature(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(Resign(flipped, {1}), sg);
}

TEST(SignedGraphTest, CycleSign) {
  const SignedGraph sg(Graph::Cycle(4), {{1, 2}});
  const std::vector<Vertex> cycle{0, 1, 2, 3};
  const std::vector<Vertex> closed{0, 1, 2, 3, 0};
  const std::vector<Vertex> broken{0, 2, 1, 3};
  EXPECT_EQ(CycleSign(sg, cycle), -1);
  EXPECT_EQ(CycleSign(sg, closed), -1);
  EXPECT_THROW(CycleSign(sg, broken), Error);
}

TEST(SignedGraphTest, BalanceWitnesses) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 1 + trial % 9, 0.4, trial % 3 == 0 ? 0.1 : 0.5);
    const BalanceResult result = CheckBalance(sg);
    EXPECT_EQ(std::holds_alternative<Balanced>(result), oracle::BalancedByCycles(sg));
    if (const auto* balanced = std::get_if<Balanced>(&result)) {
      EXPECT_EQ(EdgeCut(sg.ground(), balanced->side), sg.signature());
      EXPECT_FALSE(balanced->side.contains(0));
    } else {
      EXPECT_EQ(CycleSign(sg, std::get<Unbalanced>(result).cycle), -1);
    }
  }
}

TEST(SignedGraphTest, SwitchingEquivalence) {
  std::mt19937_64 rng(23);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 2 + trial % 8, 0.5);
    std::uint64_t mask = 0;
    for (int v = 0; v < sg.num_vertices(); ++v) mask |= std::uint64_t{coin(rng)} << v;
    const SignedGraph other = oracle::FlipAt(sg, mask);
    const auto switching = SwitchingEquivalent(sg, other);
    ASSERT_TRUE(switching.has_value());
    EXPECT_EQ(Resign(sg, switching->resign_set), other);

    // Equivalence iff the symmetric difference is balanced, checked by cycles.
    const SignedGraph random_other = RandomSignature(rng, sg.ground());
    std::vector<Edge> diff;
    for (const Edge& e : sg.ground().edges()) {
      if (sg.is_negative(e.u, e.v) != random_other.is_negative(e.u, e.v)) diff.push_back(e);
    }
    EXPECT_EQ(SwitchingEquivalent(sg, random_other).has_value(),
              oracle::BalancedByCycles(SignedGraph(sg.ground(), diff)));
  }
  EXPECT_THROW(SwitchingEquivalent(SignedGraph(Graph::Path(3)), SignedGraph(Graph::Cycle(3))),
               Error);
}

TEST(SignedGraphTest, NeighborhoodVectors) {
  const SignedGraph sg(Graph::Complete(4), {{0, 2}});
  const std::vector<Vertex> basis{2, 3};
  const NeighborhoodVector a = ComputeNeighborhoodVector(sg, 0, basis);
  const NeighborhoodVector b = ComputeNeighborhoodVector(sg, 1, basis);
  EXPECT_EQ(a.entries, (std::vector<std::int8_t>{-1, 1}));
  EXPECT_EQ(b.entries, (std::vector<std::int8_t>{1, 1}));
  EXPECT_FALSE(EqualUpToSign(a, b));
  const std::vector<Vertex> unsorted{3, 2};
  EXPECT_THROW(ComputeNeighborhoodVector(sg, 0, unsorted), Error);
  const auto c4 = FindUnbalancedC4(sg, 0, 1);
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(*c4, (std::array<Vertex, 4>{0, 2, 1, 3}));
  EXPECT_TRUE(NeighborhoodVectorsDiffer(sg, 0, 1));
  EXPECT_THROW(FindUnbalancedC4(sg, 1, 1), Error);
}

TEST(SignedGraphTest, C4TestsAgreeWithEnumeration) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 2 + trial % 9, 0.6);
    for (Vertex u = 0; u < sg.num_vertices(); ++u) {
      for (Vertex v = u + 1; v < sg.num_vertices(); ++v) {
        const bool expected = oracle::OnUnbalancedC4(sg, u, v);
        const auto c4 = FindUnbalancedC4(sg, u, v);
        EXPECT_EQ(c4.has_value(), expected);
        EXPECT_EQ(NeighborhoodVectorsDiffer(sg, u, v), expected);
        if (c4) {
          const std::vector<Vertex> cycle(c4->begin(), c4->end());
          EXPECT_EQ(CycleSign(sg, cycle), -1);
        }
      }
    }
  }
}

}  // namespace
}  // namespace sigraph
