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

#include "sigraph/io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "sigraph/error.h"

namespace sigraph {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> Tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream words(text);
    Line line{number, {}};
    for (std::string word; words >> word;) line.tokens.push_back(word);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

std::int64_t ParseInteger(const std::string& text, int line) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && text[0] == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) Fail(line, "bad integer '" + text + "'");
  return value;
}

Vertex ParseVertex(const std::string& text, int n, int line) {
  const std::int64_t v = ParseInteger(text, line);
  if (v < 0 || v >= n) Fail(line, "vertex " + text + " outside 0.." + std::to_string(n - 1));
  return static_cast<Vertex>(v);
}

struct Header {
  int n;
  int m;
};

Header ParseHeader(const std::vector<Line>& lines) {
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty input: expected header 'n m'");
  const Line& first = lines.front();
  if (first.tokens.size() != 2) Fail(first.number, "expected header 'n m'");
  const std::int64_t n = ParseInteger(first.tokens[0], first.number);
  const std::int64_t m = ParseInteger(first.tokens[1], first.number);
  if (n < 0 || m < 0 || n > 1'000'000) Fail(first.number, "header values out of range");
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    throw Error(ErrorCode::kParse, "header declares " + std::to_string(m) + " edges but " +
                                       std::to_string(lines.size() - 1) + " edge lines follow");
  }
  return {static_cast<int>(n), static_cast<int>(m)};
}

Edge ParseEdgeTokens(const Line& line, int n, std::set<Edge>& seen) {
  const Vertex u = ParseVertex(line.tokens[0], n, line.number);
  const Vertex v = ParseVertex(line.tokens[1], n, line.number);
  if (u == v) Fail(line.number, "loop at vertex " + std::to_string(u));
  const Edge e = Edge::Of(u, v);
  if (!seen.insert(e).second) Fail(line.number, "duplicate edge " + line.tokens[0] + " " + line.tokens[1]);
  return e;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Parser>
auto ParseFile(const std::string& path, Parser parse) {
  std::istringstream in(ReadAll(path));
  try {
    return parse(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace

Graph ParseGraph(std::istream& in) {
  const std::vector<Line> lines = Tokenize(in);
  const Header header = ParseHeader(lines);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.size() != 2) Fail(lines[i].number, "expected 'u v'");
    edges.push_back(ParseEdgeTokens(lines[i], header.n, seen));
  }
  return Graph(header.n, edges);
}

SignedGraph ParseSignedGraph(std::istream& in) {
  const std::vector<Line> lines = Tokenize(in);
  const Header header = ParseHeader(lines);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  std::vector<Edge> negative;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) Fail(line.number, "expected 'u v s' with s in {+,-}");
    const Edge e = ParseEdgeTokens(line, header.n, seen);
    const std::string& s = line.tokens[2];
    edges.push_back(e);
    if (s == "-" || s == "−") {
      negative.push_back(e);
    } else if (s != "+") {
      Fail(line.number, "bad sign '" + s + "' (expected + or -)");
    }
  }
  return SignedGraph(Graph(header.n, edges), negative);
}

Rational ParseRational(const std::string& text) {
  const auto slash = text.find('/');
  const std::int64_t num = ParseInteger(text.substr(0, slash), 0);
  std::int64_t den = 1;
  if (slash != std::string::npos) den = ParseInteger(text.substr(slash + 1), 0);
  if (den <= 0) throw Error(ErrorCode::kParse, "denominator must be positive in '" + text + "'");
  return Rational(num, den);
}

IntervalRepresentation ParseIntervals(std::istream& in) {
  std::vector<Interval> intervals;
  std::vector<std::string> labels;
  for (const Line& line : Tokenize(in)) {
    if (line.tokens.size() != 3) Fail(line.number, "expected 'label lo hi'");
    Rational lo;
    Rational hi;
    try {
      lo = ParseRational(line.tokens[1]);
      hi = ParseRational(line.tokens[2]);
    } catch (const Error& e) {
      Fail(line.number, std::string("bad endpoint: ") + e.what());
    }
    if (hi < lo) Fail(line.number, "interval " + line.tokens[0] + " has hi < lo");
    intervals.emplace_back(lo, hi);
    labels.push_back(line.tokens[0]);
  }
  if (intervals.empty()) throw Error(ErrorCode::kParse, "interval file has no intervals");
  return IntervalRepresentation(std::move(intervals), std::move(labels));
}

std::vector<Edge> ParseEdgeList(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const Line& line : Tokenize(in)) {
    if (line.tokens.size() != 2) Fail(line.number, "expected 'u v'");
    const std::int64_t u = ParseInteger(line.tokens[0], line.number);
    const std::int64_t v = ParseInteger(line.tokens[1], line.number);
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000) Fail(line.number, "vertex out of range");
    if (u == v) Fail(line.number, "loop at vertex " + line.tokens[0]);
    const Edge e = Edge::Of(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) Fail(line.number, "duplicate pair");
    edges.push_back(e);
  }
  return edges;
}

Graph ReadGraphFile(const std::string& path) {
  return ParseFile(path, [](std::istream& in) { return ParseGraph(in); });
}

SignedGraph ReadSignedGraphFile(const std::string& path) {
  return ParseFile(path, [](std::istream& in) { return ParseSignedGraph(in); });
}

IntervalRepresentation ReadIntervalsFile(const std::string& path) {
  return ParseFile(path, [](std::istream& in) { return ParseIntervals(in); });
}

std::vector<Edge> ReadEdgeListFile(const std::string& path) {
  return ParseFile(path, [](std::istream& in) { return ParseEdgeList(in); });
}

std::string FormatRational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string FormatSignedGraph(const SignedGraph& sg) {
  std::ostringstream out;
  out << sg.num_vertices() << ' ' << sg.ground().num_edges() << '\n';
  for (const Edge& e : sg.ground().edges()) {
    out << e.u << ' ' << e.v << ' ' << (sg.is_negative(e.u, e.v) ? '-' : '+') << '\n';
  }
  return out.str();
}

std::string FormatIntervals(const IntervalRepresentation& rep) {
  std::ostringstream out;
  for (Vertex v = 0; v < rep.size(); ++v) {
    out << rep.label(v) << ' ' << FormatRational(rep.interval(v).lo) << ' '
        << FormatRational(rep.interval(v).hi) << '\n';
  }
  return out.str();
}

}  // namespace sigraph
