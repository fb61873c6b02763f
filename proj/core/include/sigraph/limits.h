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

#ifndef SIGRAPH_LIMITS_H_
#define SIGRAPH_LIMITS_H_

namespace sigraph {

// Default vertex-count bounds for the exponential procedures. Exceeding a
// bound raises the matching *BoundExceeded error; nothing is truncated.
inline constexpr int kDefaultOracleBound = 24;
inline constexpr int kDefaultIntervalCliqueBound = 9;
inline constexpr int kDefaultSCliqueOracleBound = 14;
inline constexpr int kDefaultSolverBound = 14;
inline constexpr int kDefaultHomomorphismBound = 8;
inline constexpr int kDefaultExactBound = 20;

// Bitmask-based searches cannot go beyond this many vertices regardless of
// the configured bound.
inline constexpr int kMaxMaskVertices = 62;

struct Limits {
  int oracle_bound = kDefaultOracleBound;
  int interval_clique_bound = kDefaultIntervalCliqueBound;
  int sclique_oracle_bound = kDefaultSCliqueOracleBound;
  int solver_bound = kDefaultSolverBound;
  int homomorphism_bound = kDefaultHomomorphismBound;
  int exact_bound = kDefaultExactBound;
};

}  // namespace sigraph

#endif  // SIGRAPH_LIMITS_H_
