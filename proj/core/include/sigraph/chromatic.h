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

#ifndef SIGRAPH_CHROMATIC_H_
#define SIGRAPH_CHROMATIC_H_

#include <span>
#include <vector>

#include "sigraph/limits.h"
#include "sigraph/signed_graph.h"
#include "sigraph/signed_interval.h"

namespace sigraph {

// colors[v] is the colour of v, counted from 1; 0 means uncoloured.
using ColorMap = std::vector<int>;

// Adjacent vertices get distinct colours and, for every colour pair, all
// edges between the two classes carry one sign. Throws
// Error(kUncoloredVertex) if some vertex has no colour.
bool IsProperSignifiedColoring(const SignedGraph& sg, std::span<const int> colors);

// Proper colouring of Resign(input, switching.resign_set).
struct SignedColoring {
  Switching switching;
  ColorMap colors;
};

struct ChromaticResult {
  int chromatic_number = 0;
  SignedColoring witness;
};

// Exact signed chromatic number: iterative deepening from the clique number
// of the ground, searching colours and switching bits together (vertex 0 is
// never resigned). Throws Error(kSolverBoundExceeded) above `solver_bound`.
ChromaticResult SignedChromaticNumber(const SignedGraph& sg,
                                      int solver_bound = kDefaultSolverBound);

struct HomomorphismWitness {
  Switching switching;
  SignedGraph target;
  std::vector<Vertex> vertex_map;
};

// After resigning sg at witness.switching, every edge maps onto a target
// edge and an edge is negative exactly when its image is.
bool VerifyHomomorphism(const SignedGraph& sg, const HomomorphismWitness& witness);

struct HomomorphismResult {
  int order = 0;
  HomomorphismWitness witness;
};

// Smallest order of a homomorphic image, by trying every signed complete
// target of each order (normalised so edges at target vertex 0 are
// positive). Cross-check oracle only; doubly exponential.
HomomorphismResult SignedChromaticViaHomomorphism(
    const SignedGraph& sg, int homomorphism_bound = kDefaultHomomorphismBound);

// Ground is a tree with at least one edge.
bool Chi2Predicate(const SignedIntervalInstance& inst);

// Necessary condition for chromatic number 3: clique number 3 and every
// triangle has the same sign.
bool Chi3Necessary(const SignedIntervalInstance& inst);

}  // namespace sigraph

#endif  // SIGRAPH_CHROMATIC_H_
