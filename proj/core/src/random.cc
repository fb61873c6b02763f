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

#include "sigraph/random.h"

#include <algorithm>
#include <numeric>

#include "sigraph/error.h"

namespace sigraph {

Graph RandomGraph(std::mt19937_64& rng, int n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

SignedGraph RandomSignature(std::mt19937_64& rng, const Graph& g, double negative_probability) {
  std::bernoulli_distribution coin(negative_probability);
  std::vector<Edge> negative;
  for (const Edge& e : g.edges()) {
    if (coin(rng)) negative.push_back(e);
  }
  return SignedGraph(g, negative);
}

SignedGraph RandomSignedGraph(std::mt19937_64& rng, int n, double edge_probability,
                              double negative_probability) {
  const Graph g = RandomGraph(rng, n, edge_probability);
  return RandomSignature(rng, g, negative_probability);
}

Graph RandomTree(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.push_back({parent(rng), v});
  }
  return Graph(n, edges);
}

IntervalRepresentation RandomIntervals(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> start(0, 2 * n);
  std::uniform_int_distribution<int> length(0, std::max(1, n / 2 + 1));
  std::vector<Interval> intervals;
  for (int i = 0; i < n; ++i) {
    const Rational lo(start(rng), 2);
    intervals.emplace_back(lo, lo + Rational(length(rng), 2));
  }
  return IntervalRepresentation(std::move(intervals));
}

IntervalRepresentation RandomTwoCliqueIntervals(std::mt19937_64& rng, int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "two-clique instance needs n >= 2");
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> reach(1, 4);
  std::vector<int> kinds(n);
  for (int& k : kinds) k = kind(rng);
  kinds[0] = 0;
  kinds[1] = 1;
  std::shuffle(kinds.begin(), kinds.end(), rng);
  std::vector<Interval> intervals;
  for (int k : kinds) {
    // Left-only intervals end before 3/2, right-only ones start after it.
    const Rational out(reach(rng), 10);
    const Rational in(reach(rng), 10);
    switch (k) {
      case 0: intervals.emplace_back(Rational(1) - out, Rational(1) + in); break;
      case 1: intervals.emplace_back(Rational(2) - in, Rational(2) + out); break;
      default: intervals.emplace_back(Rational(1) - out, Rational(2) + in); break;
    }
  }
  return IntervalRepresentation(std::move(intervals));
}

}  // namespace sigraph
