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

#ifndef SIGRAPH_SIGNED_GRAPH_H_
#define SIGRAPH_SIGNED_GRAPH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

// A signified graph: ground graph plus its set of negative edges. As a
// value it stands for one representative of its switching class.
class SignedGraph {
 public:
  SignedGraph() = default;
  // Throws Error(kInvalidArgument) if a signature edge is not a ground edge.
  SignedGraph(Graph ground, std::span<const Edge> negative_edges);
  SignedGraph(Graph ground, std::initializer_list<Edge> negative_edges)
      : SignedGraph(std::move(ground),
                    std::span<const Edge>(negative_edges.begin(), negative_edges.size())) {}
  explicit SignedGraph(Graph ground) : SignedGraph(std::move(ground), std::span<const Edge>{}) {}

  const Graph& ground() const { return ground_; }
  int num_vertices() const { return ground_.num_vertices(); }
  // Sorted negative edges.
  const std::vector<Edge>& signature() const { return signature_; }

  // +1 for a positive edge, -1 for a negative edge, 0 for a non-edge.
  int sign(Vertex u, Vertex v) const {
    if (!ground_.adjacent(u, v)) return 0;
    return negative_[static_cast<std::size_t>(u) * num_vertices() + v] ? -1 : 1;
  }
  bool is_negative(Vertex u, Vertex v) const { return sign(u, v) < 0; }

  // Induced signed subgraph on `keep`, relabelled in ascending order.
  SignedGraph InducedSubgraph(const VertexSet& keep) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.ground_ == b.ground_ && a.signature_ == b.signature_;
  }

 private:
  Graph ground_;
  std::vector<Edge> signature_;
  std::vector<std::uint8_t> negative_;
};

struct Switching {
  VertexSet resign_set;
};

// Flips the sign of every edge with exactly one endpoint in `s`.
SignedGraph Resign(const SignedGraph& sg, const VertexSet& s);

Graph PositiveSubgraph(const SignedGraph& sg);
Graph NegativeSubgraph(const SignedGraph& sg);

// Product of edge signs around `cycle` (distinct vertices, consecutive
// pairs and the closing pair adjacent; a repeated first vertex at the end
// is accepted). Throws Error(kNotACycle) otherwise.
int CycleSign(const SignedGraph& sg, std::span<const Vertex> cycle);

struct Balanced {
  // Vertices marked -1; never contains the smallest vertex of a component.
  VertexSet side;
};
struct Unbalanced {
  // A cycle with sign -1 (fundamental cycle of the traversal forest).
  std::vector<Vertex> cycle;
};
using BalanceResult = std::variant<Balanced, Unbalanced>;

// Balanced iff the signature is an edge cut; the Balanced side satisfies
// signature == EdgeCut(ground, side).
BalanceResult CheckBalance(const SignedGraph& sg);

inline bool IsBalanced(const SignedGraph& sg) {
  return std::holds_alternative<Balanced>(CheckBalance(sg));
}

// Resigning set carrying sg1 to sg2, or nullopt when the two signatures lie
// in different switching classes. Throws Error(kGroundMismatch) when the
// ground graphs differ.
std::optional<Switching> SwitchingEquivalent(const SignedGraph& sg1, const SignedGraph& sg2);

struct NeighborhoodVector {
  std::vector<Vertex> basis;
  std::vector<std::int8_t> entries;  // +1, -1 or 0, aligned with basis

  friend bool operator==(const NeighborhoodVector&, const NeighborhoodVector&) = default;
};

// Entry j is the sign of the edge v–basis[j] (0 if absent). Throws
// Error(kInvalidArgument) unless basis is strictly increasing.
NeighborhoodVector ComputeNeighborhoodVector(const SignedGraph& sg, Vertex v,
                                             std::span<const Vertex> basis);

// a == b or a == -b entrywise.
bool EqualUpToSign(const NeighborhoodVector& a, const NeighborhoodVector& b);

// Common neighbours a < b of u and v closing an unbalanced 4-cycle
// u–a–v–b; returns (u, a, v, b) with the lexicographically smallest (a, b).
std::optional<std::array<Vertex, 4>> FindUnbalancedC4(const SignedGraph& sg, Vertex u, Vertex v);

// Neighbourhood-vector form of the same test: with S = N(u) ∩ N(v),
// true iff N_S(u) != ±N_S(v).
bool NeighborhoodVectorsDiffer(const SignedGraph& sg, Vertex u, Vertex v);

}  // namespace sigraph

#endif  // SIGRAPH_SIGNED_GRAPH_H_
