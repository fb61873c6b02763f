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

#include "sigraph/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "sigraph/chromatic.h"
#include "sigraph/error.h"
#include "sigraph/gadget.h"
#include "sigraph/interval.h"
#include "sigraph/io.h"
#include "sigraph/random.h"
#include "sigraph/sclique.h"
#include "sigraph/signature.h"
#include "sigraph/signed_graph.h"
#include "sigraph/signed_interval.h"

namespace sigraph::cli {
namespace {

using Json = nlohmann::ordered_json;

// A usage problem detected after argument parsing (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json ToJson(const VertexSet& s) { return Json(s.members()); }

Json ToJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json DescribeSignedGraph(const std::string& path, const SignedGraph& sg) {
  return {{"path", path},
          {"n", sg.num_vertices()},
          {"m", sg.ground().num_edges()},
          {"negative", sg.signature().size()}};
}

// Document being built for one invocation; sections print in this order.
struct Document {
  Json input = Json::object();
  Json result = Json::object();
  Json witness = Json::object();
  int exit_code = kExitOk;
};

const std::string& OnlyGraph(const RunConfig& config) {
  if (config.graph_paths.size() != 1) throw UsageError("expected exactly one --graph FILE");
  return config.graph_paths.front();
}

void RunBalance(const RunConfig& config, Document& doc) {
  const std::string& path = OnlyGraph(config);
  const SignedGraph sg = ReadSignedGraphFile(path);
  doc.input["graph"] = DescribeSignedGraph(path, sg);
  const BalanceResult result = CheckBalance(sg);
  if (const auto* balanced = std::get_if<Balanced>(&result)) {
    doc.result["balanced"] = true;
    doc.witness["side"] = ToJson(balanced->side);
  } else {
    const auto& cycle = std::get<Unbalanced>(result).cycle;
    doc.result["balanced"] = false;
    doc.witness["cycle"] = cycle;
    doc.witness["cycle_sign"] = CycleSign(sg, cycle);
  }
}

void RunEquiv(const RunConfig& config, Document& doc) {
  if (config.graph_paths.size() != 2) throw UsageError("equiv expects --graph FILE twice");
  const SignedGraph first = ReadSignedGraphFile(config.graph_paths[0]);
  const SignedGraph second = ReadSignedGraphFile(config.graph_paths[1]);
  doc.input["first"] = DescribeSignedGraph(config.graph_paths[0], first);
  doc.input["second"] = DescribeSignedGraph(config.graph_paths[1], second);
  const std::optional<Switching> switching = SwitchingEquivalent(first, second);
  doc.result["equivalent"] = switching.has_value();
  if (switching) {
    doc.witness["resign_set"] = ToJson(switching->resign_set);
    return;
  }
  std::vector<Edge> difference;
  std::set_symmetric_difference(first.signature().begin(), first.signature().end(),
                                second.signature().begin(), second.signature().end(),
                                std::back_inserter(difference));
  const auto cycle =
      std::get<Unbalanced>(CheckBalance(SignedGraph(first.ground(), difference))).cycle;
  doc.witness["distinguishing_cycle"] = cycle;
  doc.witness["sign_first"] = CycleSign(first, cycle);
  doc.witness["sign_second"] = CycleSign(second, cycle);
}

void RunSClique(const RunConfig& config, Document& doc) {
  if (config.oracle) {
    const std::string& path = OnlyGraph(config);
    const SignedGraph sg = ReadSignedGraphFile(path);
    doc.input["graph"] = DescribeSignedGraph(path, sg);
    doc.input["method"] = "oracle";
    const VertexSet best = MaxSCliqueBruteforce(sg, config.limits.sclique_oracle_bound);
    doc.result["size"] = best.size();
    doc.witness["vertices"] = ToJson(best);
    return;
  }
  if (config.intervals_path.empty()) throw UsageError("sclique needs --intervals FILE");
  if (config.graph_paths.size() > 1) throw UsageError("sclique takes at most one --graph");
  IntervalRepresentation rep = ReadIntervalsFile(config.intervals_path);
  const Graph ground = GraphFromIntervals(rep);
  SignedGraph sg(ground);
  if (!config.graph_paths.empty()) sg = ReadSignedGraphFile(config.graph_paths.front());
  doc.input["intervals"] = {{"path", config.intervals_path}, {"n", rep.size()}};
  if (!config.graph_paths.empty()) {
    doc.input["graph"] = DescribeSignedGraph(config.graph_paths.front(), sg);
  }
  doc.input["method"] = "interval";
  MaximalCliqueOrdering mco = ComputeMaximalCliqueOrdering(rep);
  const SignedIntervalInstance inst(sg, std::move(rep), std::move(mco));
  const VertexSet best = MaxSClique(inst);
  doc.result["size"] = best.size();
  doc.result["maximal_cliques"] = inst.mco().size();
  doc.result["induced_s_clique"] = IsSClique(sg.InducedSubgraph(best));
  doc.witness["vertices"] = ToJson(best);
}

void RunChroma(const RunConfig& config, Document& doc) {
  const std::string& path = OnlyGraph(config);
  const SignedGraph sg = ReadSignedGraphFile(path);
  doc.input["graph"] = DescribeSignedGraph(path, sg);
  const ChromaticResult result = SignedChromaticNumber(sg, config.limits.solver_bound);
  doc.result["chromatic_number"] = result.chromatic_number;
  doc.witness["switching"] = ToJson(result.witness.switching.resign_set);
  doc.witness["colors"] = result.witness.colors;
  if (!config.hom_check) return;
  Json hom = Json::object();
  if (sg.num_vertices() > config.limits.homomorphism_bound) {
    hom["skipped"] = std::to_string(sg.num_vertices()) + " vertices exceeds homomorphism bound " +
                     std::to_string(config.limits.homomorphism_bound);
  } else {
    const HomomorphismResult via = SignedChromaticViaHomomorphism(sg, config.limits.homomorphism_bound);
    hom["order"] = via.order;
    hom["agrees"] = via.order == result.chromatic_number;
    hom["verified"] = VerifyHomomorphism(sg, via.witness);
    hom["switching"] = ToJson(via.witness.switching.resign_set);
    hom["target_negative"] = ToJson(via.witness.target.signature());
    hom["map"] = via.witness.vertex_map;
    if (via.order != result.chromatic_number) doc.exit_code = kExitDomainError;
  }
  doc.result["homomorphism_check"] = hom;
}

void RunMinSig(const RunConfig& config, Document& doc) {
  const std::string& path = OnlyGraph(config);
  const SignedGraph sg = ReadSignedGraphFile(path);
  doc.input["graph"] = DescribeSignedGraph(path, sg);
  doc.input["method"] = config.local_search ? "local-search" : "exact";
  if (config.local_search) doc.input["seed"] = config.seed;
  const SignatureOptResult result = config.local_search
                                        ? MinSignatureLocalSearch(sg, config.seed)
                                        : MinSignatureExact(sg, config.limits.exact_bound);
  doc.result["size"] = result.size;
  doc.result["original_size"] = sg.signature().size();
  doc.result["certified_optimal"] = !config.local_search;
  doc.witness["resign_set"] = ToJson(result.resign_set);
  doc.witness["signature"] = ToJson(result.min_signature);
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Json AnalysisJson(const GadgetAnalysis& a) {
  return {{"X", ToJson(a.x)},
          {"Y", ToJson(a.y)},
          {"clique_Y_positive", ToJson(a.clique_y)},
          {"clique_X_positive", ToJson(a.clique_x)},
          {"biclique_XY_negative", {{"left", ToJson(a.biclique.left)},
                                    {"right", ToJson(a.biclique.right)}}},
          {"case", GadgetCaseName(a.best_case)},
          {"best_L_size", a.best_l_size},
          {"predicted_chi", a.predicted_chi}};
}

void RunGadget(const RunConfig& config, Document& doc) {
  GadgetInstance inst;
  if (config.gadget_n) {
    std::vector<Edge> sigma;
    if (!config.sigma_path.empty()) sigma = ReadEdgeListFile(config.sigma_path);
    doc.input["n"] = *config.gadget_n;
    doc.input["sigma"] = ToJson(sigma);
    inst = BuildGadget(*config.gadget_n, sigma);
  } else {
    if (config.intervals_path.empty() || config.graph_paths.size() != 1) {
      throw UsageError("gadget needs --n N, or --intervals FILE and --graph FILE");
    }
    doc.input["intervals"] = config.intervals_path;
    doc.input["graph"] = config.graph_paths.front();
    inst = GadgetFromParts(ReadIntervalsFile(config.intervals_path),
                           ReadSignedGraphFile(config.graph_paths.front()));
  }
  doc.result["vertices"] = inst.sg.num_vertices();
  doc.result["edges"] = inst.sg.ground().num_edges();
  doc.result["negative"] = ToJson(inst.sg.signature());
  if (!config.write_intervals.empty()) {
    WriteText(config.write_intervals, FormatIntervals(inst.rep));
    doc.result["intervals_file"] = config.write_intervals;
  }
  if (!config.write_graph.empty()) {
    WriteText(config.write_graph, FormatSignedGraph(inst.sg));
    doc.result["graph_file"] = config.write_graph;
  }
  if (config.write_intervals.empty() && config.write_graph.empty() && !config.analyze) {
    doc.result["intervals_text"] = FormatIntervals(inst.rep);
    doc.result["graph_text"] = FormatSignedGraph(inst.sg);
  }
  if (!config.analyze) return;

  const GadgetReport report = MakeGadgetReport(inst, config.limits);
  Json checks = Json::array();
  for (const InvariantCheck& c : report.checks) {
    Json item = {{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(item);
  }
  doc.result["invariants_ok"] = report.invariants_ok;
  doc.result["invariants"] = checks;
  if (report.analysis) {
    doc.result["analysis"] = AnalysisJson(*report.analysis);
  } else {
    doc.result["analysis"] = {{"error", report.analysis_error}};
  }
  if (report.exact_chi) {
    doc.result["exact_chi"] = *report.exact_chi;
    doc.result["mismatch"] = report.mismatch;
  } else {
    doc.result["exact_chi"] = {{"skipped", report.exact_skipped_reason}};
  }
  if (!report.invariants_ok || !report.analysis) doc.exit_code = kExitDomainError;
}

Json OrderingJson(const MaximalCliqueOrdering& mco) {
  Json out = Json::array();
  for (const VertexSet& m : mco.cliques) out.push_back(ToJson(m));
  return out;
}

void RunRecognize(const RunConfig& config, Document& doc) {
  if (!config.intervals_path.empty()) {
    const IntervalRepresentation rep = ReadIntervalsFile(config.intervals_path);
    const Graph g = GraphFromIntervals(rep);
    const MaximalCliqueOrdering mco = ComputeMaximalCliqueOrdering(rep);
    doc.input["intervals"] = {{"path", config.intervals_path}, {"n", rep.size()}};
    doc.input["method"] = "sweep";
    doc.result["interval"] = true;
    doc.result["verified"] = VerifyCliqueOrdering(g, mco);
    doc.witness["edges"] = ToJson(g.edges());
    doc.witness["clique_ordering"] = OrderingJson(mco);
    doc.witness["perfect_elimination_ordering"] = PerfectEliminationOrdering(g, mco);
    return;
  }
  const std::string& path = OnlyGraph(config);
  const Graph g = ReadGraphFile(path);
  doc.input["graph"] = {{"path", path}, {"n", g.num_vertices()}, {"m", g.num_edges()}};
  doc.input["method"] = "exhaustive";
  const std::optional<MaximalCliqueOrdering> mco =
      RecognizeIntervalBruteforce(g, config.limits.interval_clique_bound);
  doc.result["interval"] = mco.has_value();
  if (!mco) {
    doc.result["error"] = ErrorCodeName(ErrorCode::kNotInterval);
    doc.exit_code = kExitDomainError;
    return;
  }
  doc.witness["clique_ordering"] = OrderingJson(*mco);
  doc.witness["perfect_elimination_ordering"] = PerfectEliminationOrdering(g, *mco);
}

void RunReport(const RunConfig& config, Document& doc) {
  if (config.report_count < 0 || config.report_min_n < 1 ||
      config.report_max_n < config.report_min_n) {
    throw UsageError("report needs count >= 0 and 1 <= min-n <= max-n");
  }
  doc.input["count"] = config.report_count;
  doc.input["min_n"] = config.report_min_n;
  doc.input["max_n"] = config.report_max_n;
  doc.input["seed"] = config.seed;
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> size(config.report_min_n, config.report_max_n);
  Json rows = Json::array();
  int mismatches = 0;
  int claim_violations = 0;
  for (int id = 0; id < config.report_count; ++id) {
    const IntervalRepresentation rep = RandomIntervals(rng, size(rng));
    const SignedGraph sg = RandomSignature(rng, GraphFromIntervals(rep));
    const SignedIntervalInstance inst(rep, sg.signature());
    const CorrespondenceRow row = CompareSCliqueCorrespondence(sg, config.limits);
    const int polynomial = MaxSClique(inst).size();
    const auto violations = FindEndCliqueViolations(inst).size();
    claim_violations += static_cast<int>(violations);
    Json item = {{"id", id},
                 {"n", row.num_vertices},
                 {"m", row.num_edges},
                 {"negative", row.num_negative},
                 {"s_clique_oracle", row.s_clique.size()},
                 {"auxiliary_clique", row.auxiliary_clique.size()},
                 {"max_s_clique", polynomial},
                 {"match", row.match()},
                 {"end_clique_violations", violations}};
    if (!row.match()) {
      ++mismatches;
      item["intervals"] = FormatIntervals(rep);
      item["signed_graph"] = FormatSignedGraph(sg);
      item["s_clique_witness"] = ToJson(row.s_clique);
      item["auxiliary_witness"] = ToJson(row.auxiliary_clique);
    }
    rows.push_back(item);
  }
  doc.result["instances"] = config.report_count;
  doc.result["matches"] = config.report_count - mismatches;
  doc.result["mismatches"] = mismatches;
  doc.result["end_clique_violations"] = claim_violations;
  doc.witness["rows"] = rows;
}

void Dispatch(const RunConfig& config, Document& doc) {
  switch (config.subcommand) {
    case Subcommand::kBalance: return RunBalance(config, doc);
    case Subcommand::kEquiv: return RunEquiv(config, doc);
    case Subcommand::kSClique: return RunSClique(config, doc);
    case Subcommand::kChroma: return RunChroma(config, doc);
    case Subcommand::kMinSig: return RunMinSig(config, doc);
    case Subcommand::kGadget: return RunGadget(config, doc);
    case Subcommand::kRecognize: return RunRecognize(config, doc);
    case Subcommand::kReport: return RunReport(config, doc);
  }
}

std::string Scalar(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

bool IsFlat(const Json& value) {
  if (!value.is_array()) return !value.is_object();
  for (const Json& item : value) {
    if (item.is_object() || (item.is_array() && !IsFlat(item))) return false;
  }
  return true;
}

void PrintHuman(const Json& value, int indent, std::ostream& out) {
  const std::string pad(indent, ' ');
  for (const auto& [key, item] : value.items()) {
    if (item.is_string() && item.get<std::string>().find('\n') != std::string::npos) {
      out << pad << key << ":\n";
      std::istringstream lines(item.get<std::string>());
      for (std::string line; std::getline(lines, line);) out << pad << "  " << line << '\n';
    } else if (IsFlat(item)) {
      out << pad << key << ": ";
      if (item.is_array()) {
        for (std::size_t i = 0; i < item.size(); ++i) out << (i ? " " : "") << item[i].dump();
      } else {
        out << Scalar(item);
      }
      out << '\n';
    } else {
      out << pad << key << ":\n";
      PrintHuman(item, indent + 2, out);
    }
  }
}

void Emit(const RunConfig& config, const Json& document, std::ostream& out) {
  if (config.output == OutputMode::kStructured) {
    out << document.dump(2) << '\n';
  } else {
    PrintHuman(document, 0, out);
  }
}

}  // namespace

const char* SubcommandName(Subcommand s) {
  switch (s) {
    case Subcommand::kBalance: return "balance";
    case Subcommand::kEquiv: return "equiv";
    case Subcommand::kSClique: return "sclique";
    case Subcommand::kChroma: return "chroma";
    case Subcommand::kMinSig: return "minsig";
    case Subcommand::kGadget: return "gadget";
    case Subcommand::kRecognize: return "recognize";
    case Subcommand::kReport: return "report";
  }
  return "unknown";
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json document;
  document["command"] = SubcommandName(config.subcommand);
  Document doc;
  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  try {
    for (int bound : {config.limits.oracle_bound, config.limits.sclique_oracle_bound,
                      config.limits.solver_bound, config.limits.homomorphism_bound,
                      config.limits.exact_bound, config.limits.interval_clique_bound}) {
      if (bound <= 0) throw UsageError("bounds must be positive");
    }
    Dispatch(config, doc);
    status = doc.exit_code;
  } catch (const UsageError& e) {
    err << "sigraph: " << e.what() << '\n';
    document["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    status = kExitUsageError;
  } catch (const Error& e) {
    err << "sigraph: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    document["error"] = {{"code", ErrorCodeName(e.code())}, {"message", e.what()}};
    status = IsInputError(e.code()) ? kExitUsageError : kExitDomainError;
  }
  if (!document.contains("error")) {
    document["input"] = doc.input;
    document["result"] = doc.result;
    document["witness"] = doc.witness;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (config.timing) {
    document["timing_ms"] = std::round(elapsed_ms * 1000.0) / 1000.0;
    err << "sigraph: " << SubcommandName(config.subcommand) << " took " << std::fixed
        << std::setprecision(3) << elapsed_ms << " ms\n";
  }
  Emit(config, document, out);
  return status;
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed graph algorithms: balance, switching, S-cliques, signed colouring"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "human";
  std::optional<int> oracle_bound;
  std::optional<int> solver_bound;
  std::optional<int> exact_bound;
  std::optional<int> clique_bound;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", config.graph_paths, "Graph file (repeat for equiv)");
    sub->add_option("--intervals", config.intervals_path, "Interval file");
    sub->add_option("--oracle-bound", oracle_bound, "Vertex bound for brute-force oracles")
        ->check(CLI::PositiveNumber);
    sub->add_option("--solver-bound", solver_bound, "Vertex bound for the exact colouring solver")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Seed for randomised steps (default 0)");
    sub->add_option("--format", format, "Output mode")
        ->check(CLI::IsMember({"human", "structured"}));
    sub->add_flag("--timing", config.timing, "Report elapsed time");
  };

  struct Entry {
    Subcommand id;
    const char* help;
  };
  const Entry entries[] = {
      {Subcommand::kBalance, "Balance test with bipartition or unbalanced cycle"},
      {Subcommand::kEquiv, "Switching equivalence of two signatures on one ground"},
      {Subcommand::kSClique, "Maximum S-clique of a signed interval graph"},
      {Subcommand::kChroma, "Exact signed chromatic number"},
      {Subcommand::kMinSig, "Minimum signature in the switching class"},
      {Subcommand::kGadget, "Generate or analyse the interval colouring gadget"},
      {Subcommand::kRecognize, "Maximal clique ordering and elimination ordering"},
      {Subcommand::kReport, "S-clique oracle versus auxiliary clique report"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  for (const Entry& entry : entries) {
    CLI::App* sub = app.add_subcommand(SubcommandName(entry.id), entry.help);
    add_common(sub);
    subs.emplace_back(sub, entry.id);
    switch (entry.id) {
      case Subcommand::kSClique:
        sub->add_flag("--oracle", config.oracle, "Use the exhaustive S-clique oracle");
        break;
      case Subcommand::kChroma:
        sub->add_flag("--hom-check", config.hom_check, "Cross-check via homomorphisms");
        break;
      case Subcommand::kMinSig: {
        auto* exact = sub->add_flag("--exact", "Exhaustive minimisation (default)");
        auto* local = sub->add_flag("--local-search", config.local_search, "Hill climbing");
        exact->excludes(local);
        sub->add_option("--exact-bound", exact_bound, "Vertex bound for --exact")
            ->check(CLI::PositiveNumber);
        break;
      }
      case Subcommand::kGadget:
        sub->add_option("--n", config.gadget_n, "Gadget size (> 1)");
        sub->add_option("--sigma", config.sigma_path, "Negative K-internal pairs, lines 'u v'");
        sub->add_option("--write-intervals", config.write_intervals, "Write the interval file");
        sub->add_option("--write-graph", config.write_graph, "Write the signed graph file");
        sub->add_flag("--analyze", config.analyze, "Emit the invariant and case report");
        break;
      case Subcommand::kRecognize:
        sub->add_option("--clique-bound", clique_bound, "Maximal clique bound for --graph")
            ->check(CLI::PositiveNumber);
        break;
      case Subcommand::kReport:
        sub->add_option("--count", config.report_count, "Number of random instances");
        sub->add_option("--min-n", config.report_min_n, "Smallest instance size");
        sub->add_option("--max-n", config.report_max_n, "Largest instance size");
        break;
      default:
        break;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }
  for (const auto& [sub, id] : subs) {
    if (sub->parsed()) config.subcommand = id;
  }
  config.output = format == "structured" ? OutputMode::kStructured : OutputMode::kHuman;
  if (oracle_bound) {
    config.limits.oracle_bound = *oracle_bound;
    config.limits.sclique_oracle_bound = *oracle_bound;
  }
  if (solver_bound) {
    config.limits.solver_bound = *solver_bound;
    config.limits.homomorphism_bound = std::min(*solver_bound, config.limits.homomorphism_bound);
  }
  if (exact_bound) config.limits.exact_bound = *exact_bound;
  if (clique_bound) config.limits.interval_clique_bound = *clique_bound;
  return Run(config, out, err);
}

}  // namespace sigraph::cli
