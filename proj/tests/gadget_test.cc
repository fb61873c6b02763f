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

#include "sigraph/gadget.h"

#include "gtest/gtest.h"
#include "sigraph/chromatic.h"
#include "oracles.h"
#include "sigraph/error.h"

namespace sigraph {
namespace {

TEST(GadgetTest, LayoutForTwo) {
  const GadgetInstance inst = BuildGadget(2, {});
  EXPECT_EQ(inst.sg.num_vertices(), 6);
  EXPECT_EQ(inst.labels, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(inst.h, (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(inst.k, (VertexSet{4, 5}));
  EXPECT_EQ(inst.c, (VertexSet{2, 3}));
  EXPECT_EQ(inst.rep.label(0), "B1");
  EXPECT_EQ(inst.rep.label(3), "A2");
  EXPECT_EQ(inst.rep.label(4), "C1");
  // B_1 = [1/2 + 1/4, 3/2 - 1/4].
  EXPECT_EQ(inst.rep.interval(0), Interval(Rational(3, 4), Rational(5, 4)));
  // A_2 = [2/4, 3 - 2/4].
  EXPECT_EQ(inst.rep.interval(3), Interval(Rational(1, 2), Rational(5, 2)));
}

TEST(GadgetTest, InvariantsHold) {
  for (int n = 2; n <= 5; ++n) {
    const GadgetInstance inst = BuildGadget(n, {});
    for (const InvariantCheck& check : CheckGadgetInvariants(inst)) {
      EXPECT_TRUE(check.ok) << n << " " << check.name << " " << check.detail;
    }
  }
}

TEST(GadgetTest, RejectsBadInput) {
  try {
    BuildGadget(1, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  const std::vector<Edge> outside{{0, 1}};
  try {
    BuildGadget(2, outside);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadSigma);
  }
}

TEST(GadgetTest, TamperedSignatureFailsInvariants) {
  GadgetInstance inst = BuildGadget(2, {});
  inst.sg = SignedGraph(inst.sg.ground(), {{0, 1}});
  bool inside_k_ok = true;
  for (const InvariantCheck& check : CheckGadgetInvariants(inst)) {
    if (check.name == "signature_inside_K") inside_k_ok = check.ok;
  }
  EXPECT_FALSE(inside_k_ok);
}

TEST(GadgetTest, AnalysisPredictsExactValue) {
  for (int n = 2; n <= 3; ++n) {
    std::vector<Edge> k_pairs;
    for (Vertex u = 2 * n; u < 3 * n; ++u) {
      for (Vertex v = u + 1; v < 3 * n; ++v) k_pairs.push_back({u, v});
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k_pairs.size()); ++mask) {
      std::vector<Edge> sigma;
      for (std::size_t i = 0; i < k_pairs.size(); ++i) {
        if (mask >> i & 1) sigma.push_back(k_pairs[i]);
      }
      const GadgetInstance inst = BuildGadget(n, sigma);
      const GadgetAnalysis analysis = AnalyzeGadget(inst);
      EXPECT_EQ(analysis.x, inst.k);
      EXPECT_TRUE(analysis.y.empty());
      EXPECT_EQ(analysis.predicted_chi, 3 * n - analysis.best_l_size);
      EXPECT_EQ(analysis.predicted_chi, SignedChromaticNumber(inst.sg).chromatic_number);
    }
  }
}

TEST(GadgetTest, SizeTwoMatchesDefinition) {
  for (const std::vector<Edge>& sigma : {std::vector<Edge>{}, std::vector<Edge>{{4, 5}}}) {
    const GadgetInstance inst = BuildGadget(2, sigma);
    EXPECT_EQ(AnalyzeGadget(inst).predicted_chi, oracle::SignedChromaticByDefinition(inst.sg));
  }
}

TEST(GadgetTest, ReportSkipsExactAboveBound) {
  Limits limits;
  limits.solver_bound = 6;
  const GadgetReport report = MakeGadgetReport(BuildGadget(3, {}), limits);
  EXPECT_TRUE(report.invariants_ok);
  ASSERT_TRUE(report.analysis.has_value());
  EXPECT_FALSE(report.exact_chi.has_value());
  EXPECT_FALSE(report.exact_skipped_reason.empty());
  EXPECT_FALSE(report.mismatch);
}

TEST(GadgetTest, RoundTripFromParts) {
  const GadgetInstance built = BuildGadget(3, std::vector<Edge>{{6, 7}});
  const GadgetInstance rebuilt = GadgetFromParts(built.rep, built.sg);
  EXPECT_EQ(rebuilt.n, 3);
  EXPECT_EQ(rebuilt.k, built.k);
  EXPECT_EQ(AnalyzeGadget(rebuilt).predicted_chi, AnalyzeGadget(built).predicted_chi);
}

}  // namespace
}  // namespace sigraph
