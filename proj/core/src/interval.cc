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

#include "sigraph/interval.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "sigraph/error.h"

namespace sigraph {

Interval::Interval(Rational lo_in, Rational hi_in) : lo(lo_in), hi(hi_in) {
  if (hi < lo) {
    throw Error(ErrorCode::kInvalidArgument, "interval has hi < lo");
  }
}

IntervalRepresentation::IntervalRepresentation(std::vector<Interval> intervals,
                                               std::vector<std::string> labels)
    : intervals_(std::move(intervals)), labels_(std::move(labels)) {
  if (intervals_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "interval representation is empty");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
      labels_.push_back("v" + std::to_string(i));
    }
  }
  if (labels_.size() != intervals_.size()) {
    throw Error(ErrorCode::kInvalidArgument, "label count differs from interval count");
  }
}

Graph GraphFromIntervals(const IntervalRepresentation& rep) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < rep.size(); ++u) {
    for (Vertex v = u + 1; v < rep.size(); ++v) {
      if (rep.interval(u).Intersects(rep.interval(v))) edges.push_back({u, v});
    }
  }
  return Graph(rep.size(), edges);
}

MaximalCliqueOrdering ComputeMaximalCliqueOrdering(const IntervalRepresentation& rep) {
  struct Event {
    Rational at;
    int kind;  // 0 = left endpoint, 1 = right endpoint
    Vertex v;
    bool operator<(const Event& o) const {
      return std::tie(at, kind, v) < std::tie(o.at, o.kind, o.v);
    }
  };
  std::vector<Event> events;
  for (Vertex v = 0; v < rep.size(); ++v) {
    events.push_back({rep.interval(v).lo, 0, v});
    events.push_back({rep.interval(v).hi, 1, v});
  }
  std::sort(events.begin(), events.end());

  std::vector<Vertex> open;
  std::vector<VertexSet> candidates;
  for (const Event& e : events) {
    if (e.kind == 0) {
      open.push_back(e.v);
    } else {
      candidates.emplace_back(open);
      open.erase(std::find(open.begin(), open.end(), e.v));
    }
  }

  MaximalCliqueOrdering out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const VertexSet& c = candidates[i];
    bool dominated = false;
    for (const VertexSet& other : candidates) {
      if (other.size() > c.size() && IsSubset(c, other)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (std::find(out.cliques.begin(), out.cliques.end(), c) != out.cliques.end()) continue;
    out.cliques.push_back(c);
  }
  return out;
}

namespace {

bool IsClique(const Graph& g, const VertexSet& s) {
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool IsMaximalClique(const Graph& g, const VertexSet& s) {
  if (s.empty() || !IsClique(g, s)) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (s.contains(v)) continue;
    bool all = true;
    for (Vertex w : s) {
      if (!g.adjacent(v, w)) {
        all = false;
        break;
      }
    }
    if (all) return false;
  }
  return true;
}

}  // namespace

bool VerifyCliqueOrdering(const Graph& g, const MaximalCliqueOrdering& mco) {
  const int n = g.num_vertices();
  const int k = mco.size();
  for (const VertexSet& m : mco.cliques) {
    for (Vertex v : m) {
      if (!g.has_vertex(v)) return false;
    }
    if (!IsMaximalClique(g, m)) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (mco.cliques[i] == mco.cliques[j]) return false;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int l = i + 2; l < k; ++l) {
      const VertexSet both = Intersection(mco.cliques[i], mco.cliques[l]);
      if (both.empty()) continue;
      for (int j = i + 1; j < l; ++j) {
        if (!IsSubset(both, mco.cliques[j])) return false;
      }
    }
  }
  const CliqueRuns runs = ComputeCliqueRuns(n, mco);
  for (Vertex v = 0; v < n; ++v) {
    if (runs.first[v] < 0) return false;
  }
  // With contiguous runs, u and v share a clique iff their runs overlap.
  for (const Edge& e : g.edges()) {
    if (std::max(runs.first[e.u], runs.first[e.v]) > std::min(runs.last[e.u], runs.last[e.v])) {
      return false;
    }
  }
  return true;
}

CliqueRuns ComputeCliqueRuns(int num_vertices, const MaximalCliqueOrdering& mco) {
  CliqueRuns runs;
  runs.first.assign(num_vertices, -1);
  runs.last.assign(num_vertices, -1);
  for (int i = 0; i < mco.size(); ++i) {
    for (Vertex v : mco.cliques[i]) {
      if (v < 0 || v >= num_vertices) continue;
      if (runs.first[v] < 0) runs.first[v] = i;
      runs.last[v] = i;
    }
  }
  return runs;
}

std::vector<Vertex> PerfectEliminationOrdering(const Graph& g, const MaximalCliqueOrdering& mco) {
  if (!VerifyCliqueOrdering(g, mco)) {
    throw Error(ErrorCode::kInvalidOrdering, "clique ordering does not verify against graph");
  }
  const CliqueRuns runs = ComputeCliqueRuns(g.num_vertices(), mco);
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  // Earlier neighbours of v start no later than v and overlap its run, so
  // they all contain the first clique of v.
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return runs.first[a] < runs.first[b]; });
  return order;
}

bool IsPerfectEliminationOrdering(const Graph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || position[order[i]] != -1) return false;
    position[order[i]] = i;
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> earlier;
    for (Vertex w : g.neighbors(order[i])) {
      if (position[w] < i) earlier.push_back(w);
    }
    for (std::size_t a = 0; a < earlier.size(); ++a) {
      for (std::size_t b = a + 1; b < earlier.size(); ++b) {
        if (!g.adjacent(earlier[a], earlier[b])) return false;
      }
    }
  }
  return true;
}

std::vector<VertexSet> MaximalCliques(const Graph& g) {
  std::vector<VertexSet> cliques;
  std::function<void(std::vector<Vertex>&, std::vector<Vertex>, std::vector<Vertex>)> expand =
      [&](std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
        if (p.empty() && x.empty()) {
          cliques.emplace_back(r);
          return;
        }
        Vertex pivot = -1;
        int best = -1;
        for (const auto* pool : {&p, &x}) {
          for (Vertex u : *pool) {
            int count = 0;
            for (Vertex w : p) count += g.adjacent(u, w) ? 1 : 0;
            if (count > best) {
              best = count;
              pivot = u;
            }
          }
        }
        const std::vector<Vertex> snapshot = p;
        for (Vertex v : snapshot) {
          if (g.adjacent(pivot, v)) continue;
          std::vector<Vertex> np;
          std::vector<Vertex> nx;
          for (Vertex w : p) {
            if (g.adjacent(v, w)) np.push_back(w);
          }
          for (Vertex w : x) {
            if (g.adjacent(v, w)) nx.push_back(w);
          }
          r.push_back(v);
          expand(r, std::move(np), std::move(nx));
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<Vertex> r;
  std::vector<Vertex> all(g.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  if (!all.empty()) expand(r, all, {});
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::optional<MaximalCliqueOrdering> RecognizeIntervalBruteforce(const Graph& g,
                                                                 int clique_bound) {
  std::vector<VertexSet> cliques = MaximalCliques(g);
  const int k = static_cast<int>(cliques.size());
  if (k > clique_bound) {
    throw Error(ErrorCode::kOracleBoundExceeded,
                "recognize_interval_bruteforce: " + std::to_string(k) +
                    " maximal cliques exceeds bound " + std::to_string(clique_bound));
  }
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MaximalCliqueOrdering candidate;
    for (int i : perm) candidate.cliques.push_back(cliques[i]);
    if (VerifyCliqueOrdering(g, candidate)) return candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace sigraph
