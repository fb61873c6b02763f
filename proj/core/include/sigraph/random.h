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

#ifndef SIGRAPH_RANDOM_H_
#define SIGRAPH_RANDOM_H_

#include <random>
#include <vector>

#include "sigraph/graph.h"
#include "sigraph/interval.h"
#include "sigraph/signed_graph.h"

namespace sigraph {

// Instance generators shared by the CLI report, tests and benchmarks.
// Reproducible for a given engine state on a given standard library.

Graph RandomGraph(std::mt19937_64& rng, int n, double edge_probability);

// Each edge of g is negative with probability `negative_probability`.
SignedGraph RandomSignature(std::mt19937_64& rng, const Graph& g,
                            double negative_probability = 0.5);

SignedGraph RandomSignedGraph(std::mt19937_64& rng, int n, double edge_probability,
                              double negative_probability = 0.5);

// Random tree on n vertices (uniform parent among earlier vertices).
Graph RandomTree(std::mt19937_64& rng, int n);

// Intervals on a half-integer grid of width about 2n, so that touching and
// nested intervals are common.
IntervalRepresentation RandomIntervals(std::mt19937_64& rng, int n);

// Intervals with exactly two maximal cliques (needs n >= 2): every interval
// contains 1 or 2 (or both), at least one contains only 1 and one only 2.
IntervalRepresentation RandomTwoCliqueIntervals(std::mt19937_64& rng, int n);

}  // namespace sigraph

#endif  // SIGRAPH_RANDOM_H_
