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

#ifndef SIGRAPH_GRAPH_H_
#define SIGRAPH_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sigraph/limits.h"

namespace sigraph {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge Of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex indices. Ordering is lexicographic on
// the sorted member list, which is the canonical tie-break used throughout.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // Members are the set bits of `mask`.
  static VertexSet FromMask(std::uint64_t mask);
  static VertexSet Range(Vertex first, Vertex last);  // [first, last)

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  Vertex operator[](int i) const { return members_[i]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  std::uint64_t ToMask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

VertexSet Union(const VertexSet& a, const VertexSet& b);
VertexSet Intersection(const VertexSet& a, const VertexSet& b);
VertexSet Difference(const VertexSet& a, const VertexSet& b);
VertexSet SymmetricDifference(const VertexSet& a, const VertexSet& b);
bool IsSubset(const VertexSet& a, const VertexSet& b);

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  // Throws Error(kInvalidArgument) on loops, repeated pairs, or endpoints
  // outside [0, num_vertices).
  Graph(int num_vertices, std::span<const Edge> edges);
  Graph(int num_vertices, std::initializer_list<Edge> edges)
      : Graph(num_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph Complete(int n);
  static Graph Path(int n);
  static Graph Cycle(int n);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const {
    return u != v && matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }

  // Bitmask of neighbours; requires n <= 64.
  std::uint64_t NeighborMask(Vertex v) const;

  // Subgraph induced on `keep`, relabelled so keep[i] becomes vertex i.
  Graph InducedSubgraph(const VertexSet& keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

Graph Complement(const Graph& g);

// Parts sorted by smallest member.
std::vector<VertexSet> ConnectedComponents(const Graph& g);

// Edges with exactly one endpoint in `side`, in sorted order.
std::vector<Edge> EdgeCut(const Graph& g, const VertexSet& side);

bool IsTree(const Graph& g);

// Maximum matching size of a bipartite graph (augmenting paths). Throws
// NotBipartiteError otherwise.
int MaximumMatchingSize(const Graph& g);

// Lexicographically smallest maximum independent set of a bipartite graph.
// Its size is n - MaximumMatchingSize(g). Throws NotBipartiteError carrying
// an odd cycle when g is not bipartite.
VertexSet MaxIndependentSetBipartite(const Graph& g);

// Lexicographically smallest maximum clique, by exhaustive search.
VertexSet MaxCliqueBruteforce(const Graph& g, int oracle_bound = kDefaultOracleBound);

int ChromaticNumberBruteforce(const Graph& g, int oracle_bound = kDefaultOracleBound);

struct Biclique {
  VertexSet left;
  VertexSet right;

  int size() const { return left.size() + right.size(); }
  // The empty witness signals that no edge joins the two sides.
  bool empty() const { return left.empty() && right.empty(); }
};

// Maximum |X'|+|Y'| over nonempty X' ⊆ left, Y' ⊆ right with every X'–Y'
// pair adjacent. Only left–right edges are considered. Ties go to the
// lexicographically smallest X', then Y'.
Biclique MaxBicliqueBruteforce(const Graph& g, const VertexSet& left, const VertexSet& right,
                               int oracle_bound = kDefaultOracleBound);

}  // namespace sigraph

#endif  // SIGRAPH_GRAPH_H_
