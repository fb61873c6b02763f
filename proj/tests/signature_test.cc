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

#include "sigraph/signature.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/error.h"
#include "sigraph/random.h"

namespace sigraph {
namespace {

void ExpectConsistent(const SignedGraph& sg, const SignatureOptResult& result) {
  EXPECT_EQ(Resign(sg, result.resign_set).signature(), result.min_signature);
  EXPECT_EQ(result.size, static_cast<int>(result.min_signature.size()));
}

TEST(SignatureTest, ExactMatchesWholeSpaceEnumeration) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 80; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 1 + trial % 11, 0.5);
    const SignatureOptResult result = MinSignatureExact(sg);
    ExpectConsistent(sg, result);
    EXPECT_FALSE(result.resign_set.contains(0));
    EXPECT_EQ(result.size, oracle::MinNegativeOverAllSwitchings(sg));
  }
}

TEST(SignatureTest, BalancedInputsReachZero) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 30; ++trial) {
    const SignedGraph positive(RandomGraph(rng, 2 + trial % 9, 0.5));
    const SignedGraph balanced = oracle::FlipAt(positive, rng() & 0x3ff);
    EXPECT_EQ(MinSignatureExact(balanced).size, 0);
  }
}

TEST(SignatureTest, AllNegativeEqualsEdgesMinusMaxCut) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = RandomGraph(rng, 2 + trial % 9, 0.5);
    const SignedGraph sg(g, g.edges());
    const MaxCutResult cut = MaxCutBruteforce(g);
    EXPECT_EQ(cut.size, oracle::MaxCutByAllMasks(g));
    EXPECT_EQ(static_cast<int>(EdgeCut(g, cut.side).size()), cut.size);
    EXPECT_EQ(MinSignatureExact(sg).size, g.num_edges() - cut.size);
  }
}

TEST(SignatureTest, TieBreakPrefersSmallestSet) {
  // Negative triangle: every single-vertex switch keeps one negative edge.
  const SignedGraph sg(Graph::Complete(3), {{0, 1}, {0, 2}, {1, 2}});
  const SignatureOptResult result = MinSignatureExact(sg);
  EXPECT_EQ(result.size, 1);
  EXPECT_EQ(result.resign_set, (VertexSet{1}));
}

TEST(SignatureTest, LocalSearchIsAnUpperBoundAndDeterministic) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 2 + trial % 10, 0.5);
    const int exact = MinSignatureExact(sg).size;
    for (std::uint64_t seed : {0u, 1u, 12345u}) {
      const SignatureOptResult result = MinSignatureLocalSearch(sg, seed);
      ExpectConsistent(sg, result);
      EXPECT_GE(result.size, exact);
      EXPECT_EQ(result.resign_set, MinSignatureLocalSearch(sg, seed).resign_set);
      // Local optimality: no single flip decreases the count.
      for (Vertex v = 0; v < sg.num_vertices(); ++v) {
        const VertexSet flipped = SymmetricDifference(result.resign_set, VertexSet{v});
        EXPECT_GE(static_cast<int>(Resign(sg, flipped).signature().size()), result.size);
      }
    }
  }
}

TEST(SignatureTest, BoundsAreEnforced) {
  try {
    MinSignatureExact(SignedGraph(Graph(6)), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExactBoundExceeded);
  }
  EXPECT_THROW(MaxCutBruteforce(Graph(6), 5), Error);
}

}  // namespace
}  // namespace sigraph
