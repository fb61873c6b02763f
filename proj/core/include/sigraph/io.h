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

#ifndef SIGRAPH_IO_H_
#define SIGRAPH_IO_H_

#include <istream>
#include <string>
#include <vector>

#include "sigraph/graph.h"
#include "sigraph/interval.h"
#include "sigraph/signed_graph.h"

namespace sigraph {

// Text formats. Blank lines and everything after '#' are ignored. Errors are
// Error(kParse) naming the offending line.
//
//   graph:        "n m", then m lines "u v"   (0-based, no loops/duplicates)
//   signed graph: "n m", then m lines "u v s" with s one of + -
//   intervals:    one line per vertex "label lo hi", endpoints "num[/den]"
//   edge list:    lines "u v" with no header (used for sigma specs)

Graph ParseGraph(std::istream& in);
SignedGraph ParseSignedGraph(std::istream& in);
IntervalRepresentation ParseIntervals(std::istream& in);
std::vector<Edge> ParseEdgeList(std::istream& in);

Graph ReadGraphFile(const std::string& path);
SignedGraph ReadSignedGraphFile(const std::string& path);
IntervalRepresentation ReadIntervalsFile(const std::string& path);
std::vector<Edge> ReadEdgeListFile(const std::string& path);

// "p" when the denominator is 1, "p/q" otherwise.
std::string FormatRational(const Rational& r);
Rational ParseRational(const std::string& text);

std::string FormatGraph(const Graph& g);
std::string FormatSignedGraph(const SignedGraph& sg);
std::string FormatIntervals(const IntervalRepresentation& rep);

}  // namespace sigraph

#endif  // SIGRAPH_IO_H_
