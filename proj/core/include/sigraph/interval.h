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

#ifndef SIGRAPH_INTERVAL_H_
#define SIGRAPH_INTERVAL_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "sigraph/graph.h"
#include "sigraph/limits.h"

namespace sigraph {

using Rational = boost::rational<std::int64_t>;

// Closed interval [lo, hi] with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_in, Rational hi_in);

  bool Intersects(const Interval& other) const {
    return std::max(lo, other.lo) <= std::min(hi, other.hi);
  }
  bool Contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Interval i represents vertex i. Labels are opaque and only echoed back.
class IntervalRepresentation {
 public:
  explicit IntervalRepresentation(std::vector<Interval> intervals,
                                  std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(intervals_.size()); }
  const Interval& interval(Vertex v) const { return intervals_[v]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const IntervalRepresentation&, const IntervalRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
  std::vector<std::string> labels_;
};

// Maximal cliques M_1..M_k such that every vertex occupies a contiguous run,
// i.e. M_i ∩ M_k ⊆ M_j whenever i <= j <= k.
struct MaximalCliqueOrdering {
  std::vector<VertexSet> cliques;

  int size() const { return static_cast<int>(cliques.size()); }

  friend bool operator==(const MaximalCliqueOrdering&, const MaximalCliqueOrdering&) = default;
};

// Intersection graph under the closed-interval convention.
Graph GraphFromIntervals(const IntervalRepresentation& rep);

// Endpoint sweep (left endpoints before right endpoints at equal
// coordinates). The open set at each right endpoint is a candidate; the
// maximal candidates are kept in sweep order, first occurrence wins.
MaximalCliqueOrdering ComputeMaximalCliqueOrdering(const IntervalRepresentation& rep);

// Checks that each clique is a maximal clique of g, that no clique repeats,
// that every vertex and every edge is covered, and M_i ∩ M_k ⊆ M_j for all
// i <= j <= k. Together these imply every maximal clique of g is listed.
bool VerifyCliqueOrdering(const Graph& g, const MaximalCliqueOrdering& mco);

// For each vertex, the 0-based indices of the first and last clique that
// contain it (-1 if none).
struct CliqueRuns {
  std::vector<int> first;
  std::vector<int> last;
};
CliqueRuns ComputeCliqueRuns(int num_vertices, const MaximalCliqueOrdering& mco);

// Ordering v_1..v_n in which the earlier neighbours of every v_i form a
// clique. Built by sorting vertices on the first clique containing them,
// ties by index. Throws Error(kInvalidOrdering) if mco does not verify.
std::vector<Vertex> PerfectEliminationOrdering(const Graph& g, const MaximalCliqueOrdering& mco);

// Direct check of the predicate above: {v_1..v_i} ∩ N[v_i] induces a
// complete graph for every i.
bool IsPerfectEliminationOrdering(const Graph& g, std::span<const Vertex> order);

// All maximal cliques (Bron–Kerbosch with pivoting), sorted.
std::vector<VertexSet> MaximalCliques(const Graph& g);

// Exhaustive recognition: tries every ordering of the maximal cliques in
// lexicographic permutation order and returns the first that verifies, or
// nullopt when g is not an interval graph. Throws kOracleBoundExceeded when
// g has more than `clique_bound` maximal cliques.
std::optional<MaximalCliqueOrdering> RecognizeIntervalBruteforce(
    const Graph& g, int clique_bound = kDefaultIntervalCliqueBound);

}  // namespace sigraph

#endif  // SIGRAPH_INTERVAL_H_
