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

#include "sigraph/signature.h"

#include <bit>
#include <random>

#include "internal.h"
#include "sigraph/error.h"

namespace sigraph {
namespace {

SignatureOptResult MakeResult(const SignedGraph& sg, VertexSet resign_set) {
  SignatureOptResult out;
  out.min_signature = Resign(sg, resign_set).signature();
  out.size = static_cast<int>(out.min_signature.size());
  out.resign_set = std::move(resign_set);
  return out;
}

}  // namespace

SignatureOptResult MinSignatureExact(const SignedGraph& sg, int exact_bound) {
  const int n = sg.num_vertices();
  internal::RequireWithinBound(n, exact_bound, ErrorCode::kExactBoundExceeded,
                               "min_signature_exact");
  const Graph& g = sg.ground();
  std::uint64_t mask = 0;
  int objective = static_cast<int>(sg.signature().size());
  std::uint64_t best_mask = 0;
  int best = objective;
  // Gray code over vertices 1..n-1; each step flips one vertex.
  const std::uint64_t steps = n <= 1 ? 1 : (std::uint64_t{1} << (n - 1));
  for (std::uint64_t step = 1; step < steps; ++step) {
    const Vertex v = std::countr_zero(step) + 1;
    for (Vertex w : g.neighbors(v)) {
      const bool cut = ((mask >> v) & 1) != ((mask >> w) & 1);
      const bool negative_now = sg.is_negative(v, w) != cut;
      objective += negative_now ? -1 : 1;
    }
    mask ^= std::uint64_t{1} << v;
    if (objective < best || (objective == best && internal::MaskLexLess(mask, best_mask))) {
      best = objective;
      best_mask = mask;
    }
  }
  return MakeResult(sg, VertexSet::FromMask(best_mask));
}

SignatureOptResult MinSignatureLocalSearch(const SignedGraph& sg, std::uint64_t seed) {
  const int n = sg.num_vertices();
  const Graph& g = sg.ground();
  std::vector<bool> in_set(n, false);
  if (seed != 0) {
    std::mt19937_64 engine(seed);
    for (Vertex v = 0; v < n; ++v) in_set[v] = (engine() >> 63) != 0;
  }
  auto negative_now = [&](Vertex a, Vertex b) {
    return sg.is_negative(a, b) != (in_set[a] != in_set[b]);
  };
  while (true) {
    int best_gain = 0;
    Vertex best_vertex = -1;
    for (Vertex v = 0; v < n; ++v) {
      int gain = 0;
      for (Vertex w : g.neighbors(v)) gain += negative_now(v, w) ? 1 : -1;
      if (gain > best_gain) {
        best_gain = gain;
        best_vertex = v;
      }
    }
    if (best_vertex < 0) break;
    in_set[best_vertex] = !in_set[best_vertex];
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) members.push_back(v);
  }
  return MakeResult(sg, VertexSet(std::move(members)));
}

MaxCutResult MaxCutBruteforce(const Graph& g, int exact_bound) {
  const int n = g.num_vertices();
  internal::RequireWithinBound(n, exact_bound, ErrorCode::kExactBoundExceeded,
                               "max_cut_bruteforce");
  std::uint64_t best_mask = 0;
  int best = 0;
  if (n > 0) {
    // Every cut has a side containing vertex 0, and that side is the
    // lexicographically smaller one; only ∅ (cut 0) precedes them.
    std::uint64_t mask = 1;
    int size = g.degree(0);
    if (size > best) {
      best = size;
      best_mask = mask;
    }
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < steps; ++step) {
      const Vertex v = std::countr_zero(step) + 1;
      for (Vertex w : g.neighbors(v)) {
        const bool cut = ((mask >> v) & 1) != ((mask >> w) & 1);
        size += cut ? -1 : 1;
      }
      mask ^= std::uint64_t{1} << v;
      if (size > best || (size == best && internal::MaskLexLess(mask, best_mask))) {
        best = size;
        best_mask = mask;
      }
    }
  }
  return {VertexSet::FromMask(best_mask), best};
}

}  // namespace sigraph
