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

#include "sigraph/signed_interval.h"

#include "sigraph/error.h"

namespace sigraph {

SignedIntervalInstance::SignedIntervalInstance(IntervalRepresentation rep,
                                               std::span<const Edge> negative_edges)
    : sg_(GraphFromIntervals(rep), negative_edges),
      rep_(std::move(rep)),
      mco_(ComputeMaximalCliqueOrdering(rep_)) {}

SignedIntervalInstance::SignedIntervalInstance(SignedGraph sg, IntervalRepresentation rep,
                                               MaximalCliqueOrdering mco)
    : sg_(std::move(sg)), rep_(std::move(rep)), mco_(std::move(mco)) {
  if (!(sg_.ground() == GraphFromIntervals(rep_))) {
    throw Error(ErrorCode::kNotIntervalInstance,
                "signed graph ground differs from the intersection graph of the intervals");
  }
  if (!VerifyCliqueOrdering(sg_.ground(), mco_)) {
    throw Error(ErrorCode::kNotIntervalInstance, "maximal clique ordering does not verify");
  }
}

}  // namespace sigraph
