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

#ifndef SIGRAPH_SRC_INTERNAL_H_
#define SIGRAPH_SRC_INTERNAL_H_

#include <bit>
#include <cstdint>
#include <string>

#include "sigraph/error.h"
#include "sigraph/limits.h"

namespace sigraph::internal {

inline void RequireWithinBound(int n, int bound, ErrorCode code, const char* what) {
  if (bound <= 0) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": bound must be positive");
  }
  if (n > bound || n > kMaxMaskVertices) {
    throw Error(code, std::string(what) + ": " + std::to_string(n) +
                          " vertices exceeds bound " + std::to_string(bound));
  }
}

// Lexicographic comparison of the sorted member lists encoded by two masks.
inline bool MaskLexLess(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace sigraph::internal

#endif  // SIGRAPH_SRC_INTERNAL_H_
