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

#include "sigraph/graph.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <string>

#include "internal.h"
#include "sigraph/error.h"

namespace sigraph {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::FromMask(std::uint64_t mask) {
  VertexSet out;
  while (mask != 0) {
    out.members_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

VertexSet VertexSet::Range(Vertex first, Vertex last) {
  VertexSet out;
  for (Vertex v = first; v < last; ++v) out.members_.push_back(v);
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::ToMask() const {
  std::uint64_t mask = 0;
  for (Vertex v : members_) mask |= std::uint64_t{1} << v;
  return mask;
}

VertexSet Union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet Intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet Difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet SymmetricDifference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool IsSubset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Graph::Graph(int num_vertices) : Graph(num_vertices, std::span<const Edge>{}) {}

Graph::Graph(int num_vertices, std::span<const Edge> edges) : n_(num_vertices) {
  if (num_vertices < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  adjacency_.resize(n_);
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (!has_vertex(raw.u) || !has_vertex(raw.v)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge " + std::to_string(raw.u) + " " + std::to_string(raw.v) +
                      " has an endpoint outside 0.." + std::to_string(n_ - 1));
    }
    if (raw.u == raw.v) {
      throw Error(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(raw.u));
    }
    const Edge e = Edge::Of(raw.u, raw.v);
    auto& cell = matrix_[static_cast<std::size_t>(e.u) * n_ + e.v];
    if (cell != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    cell = 1;
    matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = 1;
    edges_.push_back(e);
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::Complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph Graph::Path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph Graph::Cycle(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  if (n >= 3) edges.push_back({0, n - 1});
  return Graph(n, edges);
}

std::uint64_t Graph::NeighborMask(Vertex v) const {
  std::uint64_t mask = 0;
  for (Vertex w : adjacency_[v]) mask |= std::uint64_t{1} << w;
  return mask;
}

Graph Graph::InducedSubgraph(const VertexSet& keep) const {
  std::vector<int> index(n_, -1);
  for (int i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(keep.size(), edges);
}

Graph Complement(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::vector<VertexSet> ConnectedComponents(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> parts;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> members{root};
    seen[root] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(members));
  }
  return parts;
}

std::vector<Edge> EdgeCut(const Graph& g, const VertexSet& side) {
  std::vector<Edge> cut;
  for (const Edge& e : g.edges()) {
    if (side.contains(e.u) != side.contains(e.v)) cut.push_back(e);
  }
  return cut;
}

bool IsTree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
         ConnectedComponents(g).size() == 1;
}

namespace {

// BFS 2-colouring; on failure throws NotBipartiteError with a fundamental
// odd cycle.
std::vector<int> TwoColor(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (color[e.u] != color[e.v]) continue;
    std::vector<Vertex> up_u{e.u};
    std::vector<Vertex> up_v{e.v};
    Vertex a = e.u;
    Vertex b = e.v;
    while (depth[a] > depth[b]) up_u.push_back(a = parent[a]);
    while (depth[b] > depth[a]) up_v.push_back(b = parent[b]);
    while (a != b) {
      up_u.push_back(a = parent[a]);
      up_v.push_back(b = parent[b]);
    }
    // up_u ends at the common ancestor; append v's side without it, reversed.
    up_v.pop_back();
    std::vector<Vertex> cycle = up_u;
    cycle.insert(cycle.end(), up_v.rbegin(), up_v.rend());
    throw NotBipartiteError(std::move(cycle));
  }
  return color;
}

int MatchingSizeWithColors(const Graph& g, const std::vector<int>& color) {
  const int n = g.num_vertices();
  std::vector<Vertex> match(n, -1);
  std::vector<int> visited(n, -1);
  std::function<bool(Vertex, int)> augment = [&](Vertex u, int stamp) {
    for (Vertex w : g.neighbors(u)) {
      if (visited[w] == stamp) continue;
      visited[w] = stamp;
      if (match[w] == -1 || augment(match[w], stamp)) {
        match[w] = u;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (color[u] == 0 && augment(u, u)) ++size;
  }
  return size;
}

}  // namespace

int MaximumMatchingSize(const Graph& g) { return MatchingSizeWithColors(g, TwoColor(g)); }

VertexSet MaxIndependentSetBipartite(const Graph& g) {
  TwoColor(g);
  const int n = g.num_vertices();
  // Greedy inclusion in vertex order, keeping v whenever some maximum
  // independent set extends the current choice by v. This yields the
  // lexicographically smallest maximiser.
  enum class State { kUndecided, kIn, kOut };
  std::vector<State> state(n, State::kUndecided);
  auto undecided_mis = [&]() {
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (state[v] == State::kUndecided) rest.push_back(v);
    }
    const Graph sub = g.InducedSubgraph(VertexSet(std::move(rest)));
    return sub.num_vertices() - MaximumMatchingSize(sub);
  };
  const int optimum = undecided_mis();
  int chosen = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (state[v] != State::kUndecided) continue;
    std::vector<State> saved = state;
    state[v] = State::kIn;
    for (Vertex w : g.neighbors(v)) {
      if (state[w] == State::kUndecided) state[w] = State::kOut;
    }
    if (chosen + 1 + undecided_mis() == optimum) {
      ++chosen;
    } else {
      state = std::move(saved);
      state[v] = State::kOut;
    }
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (state[v] == State::kIn) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

VertexSet MaxCliqueBruteforce(const Graph& g, int oracle_bound) {
  const int n = g.num_vertices();
  internal::RequireWithinBound(n, oracle_bound, ErrorCode::kOracleBoundExceeded,
                               "max_clique_bruteforce");
  std::vector<std::uint64_t> nbr(n);
  for (Vertex v = 0; v < n; ++v) nbr[v] = g.NeighborMask(v);
  std::uint64_t best = 0;
  int best_size = 0;
  // Candidates are explored smallest-first, so subsets are visited in
  // lexicographic order and the first strict improvement wins ties.
  std::function<void(std::uint64_t, int, std::uint64_t)> search =
      [&](std::uint64_t current, int size, std::uint64_t candidates) {
        if (size > best_size) {
          best = current;
          best_size = size;
        }
        while (candidates != 0) {
          if (size + std::popcount(candidates) <= best_size) return;
          const int v = std::countr_zero(candidates);
          candidates &= candidates - 1;
          search(current | (std::uint64_t{1} << v), size + 1, candidates & nbr[v]);
        }
      };
  const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
  search(0, 0, all);
  return VertexSet::FromMask(best);
}

int ChromaticNumberBruteforce(const Graph& g, int oracle_bound) {
  const int n = g.num_vertices();
  internal::RequireWithinBound(n, oracle_bound, ErrorCode::kOracleBoundExceeded,
                               "chromatic_number_bruteforce");
  if (n == 0) return 0;
  std::vector<int> color(n, 0);
  std::function<bool(Vertex, int, int)> colorable = [&](Vertex v, int k, int used) {
    if (v == n) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool clash = false;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && color[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      if (colorable(v + 1, k, std::max(used, c))) return true;
    }
    color[v] = 0;
    return false;
  };
  for (int k = 1;; ++k) {
    if (colorable(0, k, 0)) return k;
  }
}

Biclique MaxBicliqueBruteforce(const Graph& g, const VertexSet& left, const VertexSet& right,
                               int oracle_bound) {
  for (const VertexSet* side : {&left, &right}) {
    for (Vertex v : *side) {
      if (!g.has_vertex(v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "biclique side contains unknown vertex " + std::to_string(v));
      }
    }
  }
  if (!Intersection(left, right).empty()) {
    throw Error(ErrorCode::kInvalidArgument, "biclique sides must be disjoint");
  }
  internal::RequireWithinBound(left.size() + right.size(), oracle_bound,
                               ErrorCode::kOracleBoundExceeded, "max_biclique_bruteforce");
  const int nl = left.size();
  std::vector<std::uint64_t> right_nbr(nl, 0);
  for (int i = 0; i < nl; ++i) {
    for (int j = 0; j < right.size(); ++j) {
      if (g.adjacent(left[i], right[j])) right_nbr[i] |= std::uint64_t{1} << j;
    }
  }
  std::uint64_t best_left = 0;
  std::uint64_t best_right = 0;
  int best_size = 0;
  std::function<void(int, std::uint64_t, int, std::uint64_t)> search =
      [&](int next, std::uint64_t chosen, int chosen_size, std::uint64_t common) {
        for (int i = next; i < nl; ++i) {
          const std::uint64_t narrowed = common & right_nbr[i];
          if (narrowed == 0) continue;
          const int size = chosen_size + 1 + std::popcount(narrowed);
          const std::uint64_t with_i = chosen | (std::uint64_t{1} << i);
          if (size > best_size) {
            best_size = size;
            best_left = with_i;
            best_right = narrowed;
          }
          if (chosen_size + 1 + (nl - i - 1) + std::popcount(narrowed) > best_size) {
            search(i + 1, with_i, chosen_size + 1, narrowed);
          }
        }
      };
  const std::uint64_t all_right =
      right.size() == 0 ? 0 : (~std::uint64_t{0} >> (64 - right.size()));
  search(0, 0, 0, all_right);
  Biclique out;
  std::vector<Vertex> l;
  std::vector<Vertex> r;
  for (int i = 0; i < nl; ++i) {
    if ((best_left >> i) & 1) l.push_back(left[i]);
  }
  for (int j = 0; j < right.size(); ++j) {
    if ((best_right >> j) & 1) r.push_back(right[j]);
  }
  out.left = VertexSet(std::move(l));
  out.right = VertexSet(std::move(r));
  return out;
}

}  // namespace sigraph
