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

#include "sigraph/chromatic.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sigraph/error.h"
#include "sigraph/interval.h"
#include "sigraph/random.h"
#include "sigraph/sclique.h"

namespace sigraph {
namespace {

TEST(ChromaticTest, ProperColoringPredicate) {
  const SignedGraph sg(Graph::Cycle(4), {{0, 1}});
  const std::vector<int> two{1, 2, 1, 2};
  EXPECT_FALSE(IsProperSignifiedColoring(sg, two));
  const std::vector<int> four{1, 2, 3, 4};
  EXPECT_TRUE(IsProperSignifiedColoring(sg, four));
  const std::vector<int> partial{1, 2, 0, 4};
  EXPECT_THROW(IsProperSignifiedColoring(sg, partial), Error);
}

TEST(ChromaticTest, UnbalancedFourCycleNeedsFour) {
  const ChromaticResult result = SignedChromaticNumber(SignedGraph(Graph::Cycle(4), {{0, 1}}));
  EXPECT_EQ(result.chromatic_number, 4);
}

TEST(ChromaticTest, WitnessIsProperAfterSwitching) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 1 + trial % 9, 0.5);
    const ChromaticResult result = SignedChromaticNumber(sg);
    EXPECT_FALSE(result.witness.switching.resign_set.contains(0));
    const SignedGraph switched = Resign(sg, result.witness.switching.resign_set);
    EXPECT_TRUE(IsProperSignifiedColoring(switched, result.witness.colors));
    EXPECT_EQ(*std::max_element(result.witness.colors.begin(), result.witness.colors.end()),
              result.chromatic_number);
  }
}

TEST(ChromaticTest, MatchesDefinitionOnTinyGraphs) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 1 + trial % 5, 0.6);
    EXPECT_EQ(SignedChromaticNumber(sg).chromatic_number, oracle::SignedChromaticByDefinition(sg));
  }
}

TEST(ChromaticTest, DisconnectedComponentsShareTheColourPairTable) {
  // A balanced triangle next to an unbalanced one: each alone needs 3.
  const SignedGraph sg(Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), {{3, 4}});
  EXPECT_EQ(SignedChromaticNumber(sg.InducedSubgraph({0, 1, 2})).chromatic_number, 3);
  EXPECT_EQ(SignedChromaticNumber(sg.InducedSubgraph({3, 4, 5})).chromatic_number, 3);
  EXPECT_EQ(SignedChromaticNumber(sg).chromatic_number, 4);
  EXPECT_EQ(SignedChromaticViaHomomorphism(sg).order, 4);
}

TEST(ChromaticTest, HomomorphismAgreesWithColouring) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 1 + trial % 7, 0.5);
    const HomomorphismResult via = SignedChromaticViaHomomorphism(sg);
    EXPECT_TRUE(VerifyHomomorphism(sg, via.witness));
    EXPECT_EQ(via.order, SignedChromaticNumber(sg).chromatic_number);
  }
}

TEST(ChromaticTest, VerifyHomomorphismRejectsSignMismatch) {
  const SignedGraph sg(Graph::Path(2), {{0, 1}});
  HomomorphismWitness witness{{}, SignedGraph(Graph::Complete(2)), {0, 1}};
  EXPECT_FALSE(VerifyHomomorphism(sg, witness));
  witness.switching.resign_set = VertexSet{1};
  EXPECT_TRUE(VerifyHomomorphism(sg, witness));
}

TEST(ChromaticTest, BoundsAreEnforced) {
  try {
    SignedChromaticNumber(SignedGraph(Graph(5)), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSolverBoundExceeded);
  }
  EXPECT_THROW(SignedChromaticViaHomomorphism(SignedGraph(Graph(5)), 4), Error);
}

TEST(ChromaticTest, SCliqueIffFullChromatic) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedGraph sg = RandomSignedGraph(rng, 1 + trial % 8, 0.6);
    EXPECT_EQ(IsSClique(sg), SignedChromaticNumber(sg).chromatic_number == sg.num_vertices());
  }
}

TEST(ChromaticTest, IntervalPredicates) {
  const IntervalRepresentation path({Interval(0, 1), Interval(1, 2), Interval(2, 3)});
  EXPECT_TRUE(Chi2Predicate(SignedIntervalInstance(path, std::vector<Edge>{{0, 1}})));
  const IntervalRepresentation triangle({Interval(0, 2), Interval(1, 3), Interval(2, 4)});
  EXPECT_FALSE(Chi2Predicate(SignedIntervalInstance(triangle, {})));
  EXPECT_TRUE(Chi3Necessary(SignedIntervalInstance(triangle, {})));
  // Two triangles of opposite sign sharing an edge.
  const IntervalRepresentation two({Interval(0, 2), Interval(1, 4), Interval(2, 3),
                                    Interval(3, 5)});
  const SignedIntervalInstance mixed(two, std::vector<Edge>{{1, 3}});
  ASSERT_EQ(mixed.mco().size(), 2);
  EXPECT_FALSE(Chi3Necessary(mixed));
  EXPECT_GT(SignedChromaticNumber(mixed.sg()).chromatic_number, 3);
}

TEST(ChromaticTest, TreesNeedTwo) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const SignedGraph sg = RandomSignature(rng, RandomTree(rng, 2 + trial % 8));
    EXPECT_EQ(SignedChromaticNumber(sg).chromatic_number, 2);
  }
}

}  // namespace
}  // namespace sigraph
