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

#include "sigraph/gadget.h"

#include <algorithm>

#include "sigraph/chromatic.h"
#include "sigraph/error.h"

namespace sigraph {
namespace {

Interval GadgetInterval(int n, int family, int i) {
  const Rational step(i, 2 * n);
  switch (family) {
    case 0: return Interval(Rational(1, 2) + step, Rational(3, 2) - step);  // B_i
    case 1: return Interval(step, Rational(3) - step);                      // A_i
    default: return Interval(Rational(3, 2) + step, Rational(5, 2) - step); // C_i
  }
}

std::string GadgetLabel(int n, Vertex v) {
  static constexpr char kFamily[] = {'B', 'A', 'C'};
  return std::string(1, kFamily[v / n]) + std::to_string(v % n + 1);
}

void FillSets(GadgetInstance& inst) {
  const int n = inst.n;
  inst.labels.clear();
  for (Vertex v = 0; v < 3 * n; ++v) inst.labels.push_back(v + 1);
  inst.h = VertexSet::Range(0, 2 * n);
  inst.k = VertexSet::Range(2 * n, 3 * n);
  inst.c = VertexSet::Range(n, 2 * n);
}

bool Complete(const Graph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

}  // namespace

GadgetInstance BuildGadget(int n, std::span<const Edge> sigma) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "gadget size n must be > 1");
  std::vector<Interval> intervals;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < 3 * n; ++v) {
    intervals.push_back(GadgetInterval(n, v / n, v % n + 1));
    labels.push_back(GadgetLabel(n, v));
  }
  IntervalRepresentation rep(std::move(intervals), std::move(labels));
  Graph ground = GraphFromIntervals(rep);
  for (const Edge& e : sigma) {
    const auto in_k = [&](Vertex v) { return v >= 2 * n && v < 3 * n; };
    if (!in_k(e.u) || !in_k(e.v) || !ground.adjacent(e.u, e.v)) {
      throw Error(ErrorCode::kBadSigma, "sigma pair " + std::to_string(e.u) + " " +
                                            std::to_string(e.v) + " is not an edge inside K");
    }
  }
  GadgetInstance inst;
  inst.n = n;
  inst.sg = SignedGraph(std::move(ground), sigma);
  inst.rep = std::move(rep);
  FillSets(inst);
  return inst;
}

GadgetInstance GadgetFromParts(IntervalRepresentation rep, SignedGraph sg) {
  if (rep.size() % 3 != 0 || rep.size() < 6) {
    throw Error(ErrorCode::kInvalidArgument, "gadget needs 3n intervals with n > 1");
  }
  if (sg.num_vertices() != rep.size()) {
    throw Error(ErrorCode::kInvalidArgument, "signed graph and intervals differ in size");
  }
  GadgetInstance inst;
  inst.n = rep.size() / 3;
  inst.rep = std::move(rep);
  inst.sg = std::move(sg);
  FillSets(inst);
  return inst;
}

std::vector<InvariantCheck> CheckGadgetInvariants(const GadgetInstance& inst) {
  std::vector<InvariantCheck> checks;
  const int n = inst.n;
  const Graph& g = inst.sg.ground();
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  };

  bool formulas = inst.rep.size() == 3 * n;
  std::string formula_detail;
  for (Vertex v = 0; formulas && v < 3 * n; ++v) {
    if (!(inst.rep.interval(v) == GadgetInterval(n, v / n, v % n + 1))) {
      formulas = false;
      formula_detail = "vertex " + std::to_string(v);
    }
  }
  add("interval_formulas", formulas, formula_detail);

  bool labels = static_cast<int>(inst.labels.size()) == 3 * n;
  for (Vertex v = 0; labels && v < 3 * n; ++v) labels = inst.labels[v] == v + 1;
  add("labels", labels);

  const bool same_ground = inst.rep.size() == g.num_vertices() && GraphFromIntervals(inst.rep) == g;
  add("ground_is_intersection_graph", same_ground);
  if (!formulas || !same_ground) {
    // The structural checks below index families by vertex range.
    return checks;
  }

  bool nested = true;
  for (int family = 0; family < 3; ++family) {
    for (int i = 0; i + 1 < n; ++i) {
      const Interval& outer = inst.rep.interval(family * n + i);
      const Interval& inner = inst.rep.interval(family * n + i + 1);
      if (!(outer.Contains(inner) && !(outer == inner))) nested = false;
    }
  }
  add("nesting", nested);
  add("H_complete", Complete(g, inst.h));
  add("K_complete", Complete(g, inst.k));

  bool c_universal = true;
  for (Vertex a : inst.c) c_universal = c_universal && g.degree(a) == g.num_vertices() - 1;
  add("C_universal", c_universal);

  bool no_bc = true;
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c = 2 * n; c < 3 * n; ++c) no_bc = no_bc && !g.adjacent(b, c);
  }
  add("no_B_C_edges", no_bc);

  bool inside_k = true;
  std::string sig_detail;
  for (const Edge& e : inst.sg.signature()) {
    if (!inst.k.contains(e.u) || !inst.k.contains(e.v)) {
      inside_k = false;
      sig_detail = "edge " + std::to_string(e.u) + " " + std::to_string(e.v);
      break;
    }
  }
  add("signature_inside_K", inside_k, sig_detail);
  return checks;
}

const char* GadgetCaseName(GadgetCase c) {
  switch (c) {
    case GadgetCase::kL1Empty: return "L1Empty";
    case GadgetCase::kL2Empty: return "L2Empty";
    case GadgetCase::kBothNonempty: return "BothNonempty";
  }
  return "Unknown";
}

GadgetAnalysis AnalyzeGadget(const GadgetInstance& inst, int oracle_bound) {
  const SignedGraph& sg = inst.sg;
  const Graph& g = sg.ground();
  for (Vertex v : inst.k) {
    for (Vertex a : inst.c) {
      if (!g.adjacent(v, a)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "vertex " + std::to_string(v) + " of K is not adjacent to all of C");
      }
    }
  }
  GadgetAnalysis out;
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  for (Vertex v : inst.k) {
    const NeighborhoodVector vec = ComputeNeighborhoodVector(sg, v, inst.c.members());
    if (std::all_of(vec.entries.begin(), vec.entries.end(), [](int e) { return e == 1; })) {
      x.push_back(v);
    } else if (std::all_of(vec.entries.begin(), vec.entries.end(),
                           [](int e) { return e == -1; })) {
      y.push_back(v);
    }
  }
  out.x = VertexSet(std::move(x));
  out.y = VertexSet(std::move(y));

  const Graph positive = PositiveSubgraph(sg);
  const Graph negative = NegativeSubgraph(sg);
  auto clique_in = [&](const VertexSet& part) {
    const VertexSet local = MaxCliqueBruteforce(positive.InducedSubgraph(part), oracle_bound);
    std::vector<Vertex> mapped;
    for (Vertex v : local) mapped.push_back(part[v]);
    return VertexSet(std::move(mapped));
  };
  out.clique_y = clique_in(out.y);
  out.clique_x = clique_in(out.x);
  out.biclique = MaxBicliqueBruteforce(negative, out.x, out.y, oracle_bound);

  out.best_case = GadgetCase::kL1Empty;
  out.best_l_size = out.clique_y.size();
  if (out.clique_x.size() > out.best_l_size) {
    out.best_case = GadgetCase::kL2Empty;
    out.best_l_size = out.clique_x.size();
  }
  if (out.biclique.size() > out.best_l_size) {
    out.best_case = GadgetCase::kBothNonempty;
    out.best_l_size = out.biclique.size();
  }
  out.predicted_chi = 3 * inst.n - out.best_l_size;
  return out;
}

GadgetReport MakeGadgetReport(const GadgetInstance& inst, const Limits& limits) {
  GadgetReport report;
  report.checks = CheckGadgetInvariants(inst);
  report.invariants_ok = std::all_of(report.checks.begin(), report.checks.end(),
                                     [](const InvariantCheck& c) { return c.ok; });
  try {
    report.analysis = AnalyzeGadget(inst, limits.oracle_bound);
  } catch (const Error& e) {
    report.analysis_error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  }
  if (inst.sg.num_vertices() <= limits.solver_bound) {
    report.exact_chi = SignedChromaticNumber(inst.sg, limits.solver_bound).chromatic_number;
    if (report.analysis) report.mismatch = *report.exact_chi != report.analysis->predicted_chi;
  } else {
    report.exact_skipped_reason = std::to_string(inst.sg.num_vertices()) +
                                  " vertices exceeds solver bound " +
                                  std::to_string(limits.solver_bound);
  }
  return report;
}

}  // namespace sigraph
