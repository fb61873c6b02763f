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

#include "sigraph/signed_graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "sigraph/error.h"

namespace sigraph {

SignedGraph::SignedGraph(Graph ground, std::span<const Edge> negative_edges)
    : ground_(std::move(ground)) {
  const int n = ground_.num_vertices();
  negative_.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& raw : negative_edges) {
    if (!ground_.has_vertex(raw.u) || !ground_.has_vertex(raw.v) ||
        !ground_.adjacent(raw.u, raw.v)) {
      throw Error(ErrorCode::kInvalidArgument, "signature edge " + std::to_string(raw.u) + " " +
                                                   std::to_string(raw.v) +
                                                   " is not an edge of the ground graph");
    }
    const Edge e = Edge::Of(raw.u, raw.v);
    auto& cell = negative_[static_cast<std::size_t>(e.u) * n + e.v];
    if (cell != 0) continue;
    cell = 1;
    negative_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    signature_.push_back(e);
  }
  std::sort(signature_.begin(), signature_.end());
}

SignedGraph SignedGraph::InducedSubgraph(const VertexSet& keep) const {
  std::vector<int> index(num_vertices(), -1);
  for (int i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> negative;
  for (const Edge& e : signature_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) negative.push_back({index[e.u], index[e.v]});
  }
  return SignedGraph(ground_.InducedSubgraph(keep), negative);
}

SignedGraph Resign(const SignedGraph& sg, const VertexSet& s) {
  std::vector<Edge> negative;
  for (const Edge& e : sg.ground().edges()) {
    const bool flipped = s.contains(e.u) != s.contains(e.v);
    if (sg.is_negative(e.u, e.v) != flipped) negative.push_back(e);
  }
  return SignedGraph(sg.ground(), negative);
}

Graph PositiveSubgraph(const SignedGraph& sg) {
  std::vector<Edge> edges;
  for (const Edge& e : sg.ground().edges()) {
    if (!sg.is_negative(e.u, e.v)) edges.push_back(e);
  }
  return Graph(sg.num_vertices(), edges);
}

Graph NegativeSubgraph(const SignedGraph& sg) {
  return Graph(sg.num_vertices(), sg.signature());
}

int CycleSign(const SignedGraph& sg, std::span<const Vertex> cycle) {
  if (cycle.size() > 1 && cycle.front() == cycle.back()) cycle = cycle.first(cycle.size() - 1);
  if (cycle.size() < 3) throw Error(ErrorCode::kNotACycle, "a cycle needs at least 3 vertices");
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kNotACycle, "cycle repeats a vertex");
  }
  int product = 1;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    if (!sg.ground().has_vertex(a) || !sg.ground().has_vertex(b) || !sg.ground().adjacent(a, b)) {
      throw Error(ErrorCode::kNotACycle,
                  "no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    product *= sg.sign(a, b);
  }
  return product;
}

BalanceResult CheckBalance(const SignedGraph& sg) {
  const Graph& g = sg.ground();
  const int n = g.num_vertices();
  std::vector<int> mark(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (mark[root] != 0) continue;
    mark[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (mark[w] != 0) continue;
        mark[w] = mark[u] * sg.sign(u, w);
        parent[w] = u;
        depth[w] = depth[u] + 1;
        queue.push_back(w);
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (mark[e.u] * mark[e.v] == sg.sign(e.u, e.v)) continue;
    // Tree paths realise mark(u)·mark(v), so closing them with uv gives -1.
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
    up_v.pop_back();
    Unbalanced out;
    out.cycle = up_u;
    out.cycle.insert(out.cycle.end(), up_v.rbegin(), up_v.rend());
    return out;
  }
  std::vector<Vertex> side;
  for (Vertex v = 0; v < n; ++v) {
    if (mark[v] < 0) side.push_back(v);
  }
  return Balanced{VertexSet(std::move(side))};
}

std::optional<Switching> SwitchingEquivalent(const SignedGraph& sg1, const SignedGraph& sg2) {
  if (!(sg1.ground() == sg2.ground())) {
    throw Error(ErrorCode::kGroundMismatch, "signed graphs have different ground graphs");
  }
  std::vector<Edge> difference;
  std::set_symmetric_difference(sg1.signature().begin(), sg1.signature().end(),
                                sg2.signature().begin(), sg2.signature().end(),
                                std::back_inserter(difference));
  const BalanceResult result = CheckBalance(SignedGraph(sg1.ground(), difference));
  if (const auto* balanced = std::get_if<Balanced>(&result)) {
    return Switching{balanced->side};
  }
  return std::nullopt;
}

NeighborhoodVector ComputeNeighborhoodVector(const SignedGraph& sg, Vertex v,
                                             std::span<const Vertex> basis) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (!sg.ground().has_vertex(basis[j]) || (j > 0 && basis[j - 1] >= basis[j])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "neighbourhood basis must be strictly increasing vertex indices");
    }
  }
  NeighborhoodVector out;
  out.basis.assign(basis.begin(), basis.end());
  out.entries.reserve(basis.size());
  for (Vertex w : basis) out.entries.push_back(static_cast<std::int8_t>(sg.sign(v, w)));
  return out;
}

bool EqualUpToSign(const NeighborhoodVector& a, const NeighborhoodVector& b) {
  if (a.entries.size() != b.entries.size()) return false;
  bool same = true;
  bool opposite = true;
  for (std::size_t j = 0; j < a.entries.size(); ++j) {
    same = same && a.entries[j] == b.entries[j];
    opposite = opposite && a.entries[j] == -b.entries[j];
  }
  return same || opposite;
}

namespace {

std::vector<Vertex> CommonNeighbors(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> common;
  std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(), g.neighbors(v).begin(),
                        g.neighbors(v).end(), std::back_inserter(common));
  return common;
}

}  // namespace

std::optional<std::array<Vertex, 4>> FindUnbalancedC4(const SignedGraph& sg, Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "FindUnbalancedC4 needs u != v");
  const std::vector<Vertex> common = CommonNeighbors(sg.ground(), u, v);
  for (std::size_t i = 0; i < common.size(); ++i) {
    const Vertex a = common[i];
    const int through_a = sg.sign(u, a) * sg.sign(a, v);
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      const Vertex b = common[j];
      if (through_a * sg.sign(v, b) * sg.sign(b, u) == -1) {
        return std::array<Vertex, 4>{u, a, v, b};
      }
    }
  }
  return std::nullopt;
}

bool NeighborhoodVectorsDiffer(const SignedGraph& sg, Vertex u, Vertex v) {
  const std::vector<Vertex> common = CommonNeighbors(sg.ground(), u, v);
  return !EqualUpToSign(ComputeNeighborhoodVector(sg, u, common),
                        ComputeNeighborhoodVector(sg, v, common));
}

}  // namespace sigraph
