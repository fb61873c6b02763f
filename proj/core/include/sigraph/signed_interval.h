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

#ifndef SIGRAPH_SIGNED_INTERVAL_H_
#define SIGRAPH_SIGNED_INTERVAL_H_

#include <span>

#include "sigraph/interval.h"
#include "sigraph/signed_graph.h"

namespace sigraph {

// A signed graph whose ground is the intersection graph of `rep`, together
// with the sweep clique ordering of `rep`.
class SignedIntervalInstance {
 public:
  // Ground derived from the intervals; signature given on that ground.
  SignedIntervalInstance(IntervalRepresentation rep, std::span<const Edge> negative_edges);

  // Throws Error(kNotIntervalInstance) unless sg's ground equals the
  // intersection graph of rep and mco verifies against it.
  SignedIntervalInstance(SignedGraph sg, IntervalRepresentation rep, MaximalCliqueOrdering mco);

  const SignedGraph& sg() const { return sg_; }
  const IntervalRepresentation& rep() const { return rep_; }
  const MaximalCliqueOrdering& mco() const { return mco_; }
  int num_vertices() const { return sg_.num_vertices(); }

 private:
  SignedGraph sg_;
  IntervalRepresentation rep_;
  MaximalCliqueOrdering mco_;
};

}  // namespace sigraph

#endif  // SIGRAPH_SIGNED_INTERVAL_H_
