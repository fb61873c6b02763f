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

#include "sigraph/error.h"

#include <sstream>

namespace sigraph {
namespace {

std::string DescribeOddCycle(const std::vector<int>& cycle) {
  std::ostringstream out;
  out << "graph is not bipartite; odd cycle:";
  for (int v : cycle) out << ' ' << v;
  return out.str();
}

}  // namespace

NotBipartiteError::NotBipartiteError(std::vector<int> odd_cycle)
    : Error(ErrorCode::kNotBipartite, DescribeOddCycle(odd_cycle)),
      odd_cycle_(std::move(odd_cycle)) {}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kOracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorCode::kSolverBoundExceeded: return "SolverBoundExceeded";
    case ErrorCode::kExactBoundExceeded: return "ExactBoundExceeded";
    case ErrorCode::kNotInterval: return "NotInterval";
    case ErrorCode::kInvalidOrdering: return "InvalidOrdering";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kWrongCliqueCount: return "WrongCliqueCount";
    case ErrorCode::kNotIntervalInstance: return "NotIntervalInstance";
    case ErrorCode::kUncoloredVertex: return "UncoloredVertex";
    case ErrorCode::kBadSigma: return "BadSigma";
  }
  return "Unknown";
}

bool IsInputError(ErrorCode code) {
  return code == ErrorCode::kParse || code == ErrorCode::kInvalidArgument;
}

}  // namespace sigraph
