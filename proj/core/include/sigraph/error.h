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

#ifndef SIGRAPH_ERROR_H_
#define SIGRAPH_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigraph {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kNotBipartite,
  kOracleBoundExceeded,
  kSolverBoundExceeded,
  kExactBoundExceeded,
  kNotInterval,
  kInvalidOrdering,
  kNotACycle,
  kGroundMismatch,
  kWrongCliqueCount,
  kNotIntervalInstance,
  kUncoloredVertex,
  kBadSigma,
};

// Stable name used in CLI output, e.g. "NotBipartite".
const char* ErrorCodeName(ErrorCode code);

// True for errors caused by malformed input text or configuration rather
// than by the mathematical content of a well-formed input.
bool IsInputError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by MaxIndependentSetBipartite; carries an odd cycle of the input.
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<int> odd_cycle);

  const std::vector<int>& odd_cycle() const { return odd_cycle_; }

 private:
  std::vector<int> odd_cycle_;
};

}  // namespace sigraph

#endif  // SIGRAPH_ERROR_H_
