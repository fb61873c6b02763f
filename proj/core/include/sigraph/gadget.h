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

#ifndef SIGRAPH_GADGET_H_
#define SIGRAPH_GADGET_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigraph/graph.h"
#include "sigraph/interval.h"
#include "sigraph/limits.h"
#include "sigraph/signed_graph.h"

namespace sigraph {

// Interval gadget of size n > 1 with 3n vertices. Vertex index is label - 1:
//   B_i = [1/2 + i/2n, 3/2 - i/2n]  label i        (vertex i - 1)
//   A_i = [i/2n, 3 - i/2n]          label n + i    (vertex n + i - 1)
//   C_i = [3/2 + i/2n, 5/2 - i/2n]  label 2n + i   (vertex 2n + i - 1)
// H = labels 1..2n (the B_i and A_i), K = labels 2n+1..3n (the C_i) and
// C = labels n+1..2n (the A_i, adjacent to everything). Negative edges lie
// inside K.
struct GadgetInstance {
  int n = 0;
  IntervalRepresentation rep{{Interval(0, 0)}};
  SignedGraph sg;
  std::vector<int> labels;
  VertexSet h;
  VertexSet k;
  VertexSet c;
};

// Throws Error(kInvalidArgument) for n < 2 and Error(kBadSigma) when a
// sigma pair leaves K or is not an edge.
GadgetInstance BuildGadget(int n, std::span<const Edge> sigma);

// Rebuilds the instance bookkeeping around intervals and a signed graph read
// back from files. The interval count must be a multiple of 3; nothing else
// is validated (see CheckGadgetInvariants).
GadgetInstance GadgetFromParts(IntervalRepresentation rep, SignedGraph sg);

struct InvariantCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Interval formulas and labels, nesting, H and K complete, C universal, no
// B–C edges, ground equals the intersection graph, signature inside K.
std::vector<InvariantCheck> CheckGadgetInvariants(const GadgetInstance& inst);

enum class GadgetCase { kL1Empty, kL2Empty, kBothNonempty };

const char* GadgetCaseName(GadgetCase c);

struct GadgetAnalysis {
  VertexSet x;  // v in K with N_C(v) = j_n
  VertexSet y;  // v in K with N_C(v) = -j_n
  VertexSet clique_y;  // maximum clique of <Y>+
  VertexSet clique_x;  // maximum clique of <X>+
  Biclique biclique;   // maximum biclique of <X,Y>-
  GadgetCase best_case = GadgetCase::kL2Empty;
  int best_l_size = 0;
  int predicted_chi = 0;  // 3n - best_l_size
};

// Throws Error(kInvalidArgument) if some vertex of K misses a vertex of C.
GadgetAnalysis AnalyzeGadget(const GadgetInstance& inst, int oracle_bound = kDefaultOracleBound);

struct GadgetReport {
  std::vector<InvariantCheck> checks;
  bool invariants_ok = false;
  std::optional<GadgetAnalysis> analysis;
  std::string analysis_error;
  // Exact value when 3n fits the solver bound.
  std::optional<int> exact_chi;
  std::string exact_skipped_reason;
  bool mismatch = false;
};

GadgetReport MakeGadgetReport(const GadgetInstance& inst, const Limits& limits = {});

}  // namespace sigraph

#endif  // SIGRAPH_GADGET_H_
