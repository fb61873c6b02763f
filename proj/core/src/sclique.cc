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

#include "sigraph/sclique.h"

#include <map>
#include <utility>

#include "internal.h"
#include "sigraph/error.h"

namespace sigraph {

bool IsSClique(const SignedGraph& sg) {
  const int n = sg.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!sg.ground().adjacent(u, v) && !FindUnbalancedC4(sg, u, v)) return false;
    }
  }
  return true;
}

Graph AuxiliaryGraph(const SignedGraph& sg) {
  const int n = sg.num_vertices();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (sg.ground().adjacent(u, v) || FindUnbalancedC4(sg, u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

namespace {

// Maximum independent set of the subgraph of `g` induced on `part`, which
// must be bipartite; returned in original vertex indices.
VertexSet BipartiteMisOn(const Graph& g, const VertexSet& part) {
  const VertexSet local = MaxIndependentSetBipartite(g.InducedSubgraph(part));
  std::vector<Vertex> out;
  for (Vertex v : local) out.push_back(part[v]);
  return VertexSet(std::move(out));
}

}  // namespace

VertexSet MaxSCliqueTwoCliques(const SignedIntervalInstance& inst) {
  const MaximalCliqueOrdering& mco = inst.mco();
  if (mco.size() != 2) {
    throw Error(ErrorCode::kWrongCliqueCount,
                "two-clique solver needs exactly 2 maximal cliques, got " +
                    std::to_string(mco.size()));
  }
  const SignedGraph& sg = inst.sg();
  const VertexSet shared = Intersection(mco.cliques[0], mco.cliques[1]);
  const VertexSet rest = SymmetricDifference(mco.cliques[0], mco.cliques[1]);
  std::vector<NeighborhoodVector> vectors;
  for (Vertex v : rest) vectors.push_back(ComputeNeighborhoodVector(sg, v, shared.members()));

  // Complement of the pair graph, on local indices of `rest`.
  std::vector<Edge> non_edges;
  for (int a = 0; a < rest.size(); ++a) {
    for (int b = a + 1; b < rest.size(); ++b) {
      const bool paired = sg.ground().adjacent(rest[a], rest[b]) ||
                          !EqualUpToSign(vectors[a], vectors[b]);
      if (!paired) non_edges.push_back({a, b});
    }
  }
  const VertexSet local = MaxIndependentSetBipartite(Graph(rest.size(), non_edges));
  std::vector<Vertex> members(shared.begin(), shared.end());
  for (Vertex v : local) members.push_back(rest[v]);
  return VertexSet(std::move(members));
}

namespace {

class RangeSolver {
 public:
  RangeSolver(const SignedIntervalInstance& inst)
      : n_(inst.num_vertices()),
        k_(inst.mco().size()),
        auxiliary_(AuxiliaryGraph(inst.sg())),
        runs_(ComputeCliqueRuns(n_, inst.mco())) {}

  struct Part {
    VertexSet component;
    VertexSet independent;
  };

  VertexSet Solve() {
    std::vector<Vertex> members;
    for (const Part& part : SolveRange(0, k_ - 1)) {
      members.insert(members.end(), part.independent.begin(), part.independent.end());
    }
    return VertexSet(std::move(members));
  }

  // Vertices whose clique run meets [i..j].
  VertexSet RangeVertices(int i, int j) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (runs_.first[v] <= j && runs_.last[v] >= i) out.push_back(v);
    }
    return VertexSet(std::move(out));
  }

  // Complement of the auxiliary graph, restricted to `part`.
  Graph ComplementOn(const VertexSet& part) const {
    return Complement(auxiliary_.InducedSubgraph(part));
  }

  std::vector<VertexSet> ComponentsOn(const VertexSet& part) const {
    std::vector<VertexSet> out;
    for (const VertexSet& local : ConnectedComponents(ComplementOn(part))) {
      std::vector<Vertex> members;
      for (Vertex v : local) members.push_back(part[v]);
      out.emplace_back(std::move(members));
    }
    return out;
  }

  const Graph& auxiliary() const { return auxiliary_; }
  const CliqueRuns& runs() const { return runs_; }

 private:
  const std::vector<Part>& SolveRange(int i, int j) {
    const auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const VertexSet range = RangeVertices(i, j);
    const Graph complement = ComplementOn(range);
    std::vector<Part> parts;
    for (const VertexSet& local : ConnectedComponents(complement)) {
      std::vector<Vertex> members;
      for (Vertex v : local) members.push_back(range[v]);
      Part part{VertexSet(std::move(members)), {}};
      if (j - i <= 1) {
        const VertexSet mis = BipartiteMisOn(complement, local);
        std::vector<Vertex> mapped;
        for (Vertex v : mis) mapped.push_back(range[v]);
        part.independent = VertexSet(std::move(mapped));
      } else {
        const VertexSet drop_first = Collect(SolveRange(i + 1, j), part.component);
        const VertexSet drop_last = Collect(SolveRange(i, j - 1), part.component);
        part.independent = drop_first.size() > drop_last.size() ? drop_first : drop_last;
      }
      parts.push_back(std::move(part));
    }
    return memo_.emplace(key, std::move(parts)).first->second;
  }

  // Union of the sub-range solutions whose component lies inside `within`.
  static VertexSet Collect(const std::vector<Part>& sub, const VertexSet& within) {
    std::vector<Vertex> members;
    for (const Part& part : sub) {
      if (within.contains(part.component[0])) {
        members.insert(members.end(), part.independent.begin(), part.independent.end());
      }
    }
    return VertexSet(std::move(members));
  }

  int n_;
  int k_;
  Graph auxiliary_;
  CliqueRuns runs_;
  std::map<std::pair<int, int>, std::vector<Part>> memo_;
};

}  // namespace

VertexSet MaxSClique(const SignedIntervalInstance& inst) {
  if (!VerifyCliqueOrdering(inst.sg().ground(), inst.mco())) {
    throw Error(ErrorCode::kNotIntervalInstance, "maximal clique ordering does not verify");
  }
  const int k = inst.mco().size();
  if (k == 0) return {};
  if (k == 1) return VertexSet::Range(0, inst.num_vertices());
  return RangeSolver(inst).Solve();
}

VertexSet MaxSCliqueBruteforce(const SignedGraph& sg, int oracle_bound) {
  const int n = sg.num_vertices();
  internal::RequireWithinBound(n, oracle_bound, ErrorCode::kOracleBoundExceeded,
                               "max_s_clique_bruteforce");
  // Largest size first; combinations in lexicographic order within a size.
  for (int size = n; size > 0; --size) {
    std::vector<Vertex> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      const VertexSet candidate(pick);
      if (IsSClique(sg.InducedSubgraph(candidate))) return candidate;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

std::vector<EndCliqueViolation> FindEndCliqueViolations(const SignedIntervalInstance& inst,
                                                        bool every_range) {
  std::vector<EndCliqueViolation> violations;
  const int k = inst.mco().size();
  if (k < 2) return violations;
  const RangeSolver solver(inst);
  const CliqueRuns& runs = solver.runs();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (!every_range && (i != 0 || j != k - 1)) continue;
      for (const VertexSet& component : solver.ComponentsOn(solver.RangeVertices(i, j))) {
        for (Vertex u : component) {
          if (runs.last[u] != i) continue;
          for (Vertex v : component) {
            if (runs.first[v] != j) continue;
            if (solver.auxiliary().adjacent(u, v)) violations.push_back({i, j, u, v});
          }
        }
      }
    }
  }
  return violations;
}

CorrespondenceRow CompareSCliqueCorrespondence(const SignedGraph& sg, const Limits& limits) {
  CorrespondenceRow row;
  row.num_vertices = sg.num_vertices();
  row.num_edges = sg.ground().num_edges();
  row.num_negative = static_cast<int>(sg.signature().size());
  row.s_clique = MaxSCliqueBruteforce(sg, limits.sclique_oracle_bound);
  row.auxiliary_clique = MaxCliqueBruteforce(AuxiliaryGraph(sg), limits.oracle_bound);
  return row;
}

}  // namespace sigraph
