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

#ifndef SIGRAPH_TOOLS_CLI_H_
#define SIGRAPH_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sigraph/limits.h"

namespace sigraph::cli {

enum class Subcommand { kBalance, kEquiv, kSClique, kChroma, kMinSig, kGadget, kRecognize, kReport };
enum class OutputMode { kHuman, kStructured };

const char* SubcommandName(Subcommand s);

struct RunConfig {
  Subcommand subcommand = Subcommand::kBalance;
  std::vector<std::string> graph_paths;
  std::string intervals_path;
  Limits limits;
  std::uint64_t seed = 0;
  OutputMode output = OutputMode::kHuman;
  bool timing = false;

  bool oracle = false;        // sclique
  bool hom_check = false;     // chroma
  bool local_search = false;  // minsig; exact otherwise

  std::optional<int> gadget_n;
  std::string sigma_path;
  std::string write_intervals;
  std::string write_graph;
  bool analyze = false;

  int report_count = 100;
  int report_min_n = 3;
  int report_max_n = 10;
};

// Exit status: 0 success, 1 domain error (NotBipartite, NotInterval, bound
// exceeded, failed gadget invariants, ...), 2 parse or configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and runs it.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sigraph::cli

#endif  // SIGRAPH_TOOLS_CLI_H_
