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

#ifndef SIGRAPH_SCLIQUE_H_
#define SIGRAPH_SCLIQUE_H_

#include <vector>

#include "sigraph/graph.h"
#include "sigraph/limits.h"
#include "sigraph/signed_graph.h"
#include "sigraph/signed_interval.h"

namespace sigraph {

// Every pair of vertices is adjacent or lies on an unbalanced 4-cycle of sg.
bool IsSClique(const SignedGraph& sg);

// Same vertices; u ~ v iff adjacent in sg or on a common unbalanced 4-cycle.
Graph AuxiliaryGraph(const SignedGraph& sg);

// Two-clique case. With A = M_1 ∩ M_2, returns A together with a maximum
// clique of the pair graph on M_1 Δ M_2 (u ~ v iff adjacent in sg or
// N_A(u) != ±N_A(v)), found as a maximum independent set of its bipartite
// complement. Throws Error(kWrongCliqueCount) unless the ordering has
// exactly two cliques.
VertexSet MaxSCliqueTwoCliques(const SignedIntervalInstance& inst);

// Maximum clique of the auxiliary graph, computed in polynomial time as a
// maximum independent set of its complement by recursion over clique-index
// ranges [i..j]: each component of the complement restricted to the range
// either avoids the vertices ending at M_i or those starting at M_j, so its
// optimum comes from [i+1..j] or [i..j-1] (ties keep [i..j-1]). Ranges of
// length <= 2 are bipartite and solved directly. Throws
// Error(kNotIntervalInstance) if the stored ordering does not verify.
VertexSet MaxSClique(const SignedIntervalInstance& inst);

// Maximum U such that the induced signed subgraph on U is an S-clique;
// lexicographically smallest among maximum sets. Exponential.
VertexSet MaxSCliqueBruteforce(const SignedGraph& sg,
                               int oracle_bound = kDefaultSCliqueOracleBound);

// A pair (u, v) in one component of the auxiliary complement restricted to
// cliques [first_clique..last_clique] where u occurs in no later clique of
// the range and v in no earlier one, yet u and v are not adjacent in the
// complement.
struct EndCliqueViolation {
  int first_clique = 0;
  int last_clique = 0;
  Vertex u = 0;
  Vertex v = 0;
};

// Checks the complete-bipartite property between end-clique vertices of
// every component of the auxiliary complement. By default only the full
// range [0..k-1] is examined; `every_range` checks each sub-range used by
// MaxSClique as well.
std::vector<EndCliqueViolation> FindEndCliqueViolations(const SignedIntervalInstance& inst,
                                                        bool every_range = false);

// One row of the S-clique versus auxiliary-clique comparison.
struct CorrespondenceRow {
  int num_vertices = 0;
  int num_edges = 0;
  int num_negative = 0;
  VertexSet s_clique;            // MaxSCliqueBruteforce
  VertexSet auxiliary_clique;    // MaxCliqueBruteforce(AuxiliaryGraph)
  bool match() const { return s_clique.size() == auxiliary_clique.size(); }
};

CorrespondenceRow CompareSCliqueCorrespondence(const SignedGraph& sg, const Limits& limits = {});

}  // namespace sigraph

#endif  // SIGRAPH_SCLIQUE_H_
