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

#ifndef SIGRAPH_SIGNATURE_H_
#define SIGRAPH_SIGNATURE_H_

#include <cstdint>
#include <vector>

#include "sigraph/graph.h"
#include "sigraph/limits.h"
#include "sigraph/signed_graph.h"

namespace sigraph {

// Resign(input, resign_set) has exactly min_signature as negative edges.
struct SignatureOptResult {
  VertexSet resign_set;
  std::vector<Edge> min_signature;
  int size = 0;
};

// Minimises |signature Δ EdgeCut(ground, S)| over every S not containing
// vertex 0 (S and its complement give the same representative). Ties go to
// the lexicographically smallest S. Throws Error(kExactBoundExceeded).
SignatureOptResult MinSignatureExact(const SignedGraph& sg, int exact_bound = kDefaultExactBound);

// Single-vertex-flip hill climbing: repeatedly applies the flip with the
// largest decrease (smallest vertex on ties) until none decreases the count.
// Seed 0 starts from S = ∅; any other seed starts from the subset given by
// the top bit of successive std::mt19937_64(seed) outputs, one per vertex.
SignatureOptResult MinSignatureLocalSearch(const SignedGraph& sg, std::uint64_t seed);

struct MaxCutResult {
  VertexSet side;
  int size = 0;
};

// Maximum edge cut by enumeration; lexicographically smallest side on ties.
MaxCutResult MaxCutBruteforce(const Graph& g, int exact_bound = kDefaultExactBound);

}  // namespace sigraph

#endif  // SIGRAPH_SIGNATURE_H_
