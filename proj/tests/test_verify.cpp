// Copyright 2026 The jmobius Authors
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

#include <gtest/gtest.h>

#include "jmobius/cli.hpp"
#include "jmobius/verify.hpp"

namespace jmobius {
namespace {

// A single "piece" that is a proper restriction of U2,4: not a subdivision.
SubdivisionFixture fake_fixture() {
  const Matroid parent = uniform(2, 4);
  std::vector<ElementSet> b;
  for (ElementSet s : parent.bases())
    if (s != make_set({0, 1})) b.push_back(s);
  return {"fake", parent, {Matroid::from_bases(4, b)}, {}};
}

void expect_clean(const VerifyReport& rep) {
  EXPECT_FALSE(rep.any_violated());
  for (const auto& c : rep.checks)
    EXPECT_NE(c.status, CheckStatus::violated) << c.suite << ": " << c.identity << " on " << c.object << ": " << c.detail;
}

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, NoViolations) {
  const auto rep = run_suite(GetParam());
  expect_clean(rep);
  EXPECT_GT(rep.count(CheckStatus::holds), 0U);
}

INSTANTIATE_TEST_SUITE_P(AllSuites, SuiteTest, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Verify, JAxiomsCoverCoreLattices) {
  const auto rep = run_suite("j-axioms");
  EXPECT_EQ(rep.checks.size(), 3 * core_test_names().size());
  EXPECT_EQ(rep.count(CheckStatus::holds), rep.checks.size());
}

TEST(Verify, NonLatticeChecksAreSkipped) {
  const auto rep = run_suite("classical", std::vector<NamedObject>{{"bowtie", bowtie(), std::nullopt}});
  EXPECT_EQ(rep.count(CheckStatus::skipped), 3U);
  EXPECT_EQ(rep.count(CheckStatus::holds), 4U);
}

TEST(Verify, NonModularObjectSkippedInModularRoot) {
  VerifyOptions opt;
  opt.max_ground = 4;
  const auto rep = run_suite("modular-root", std::vector<NamedObject>{named_object("M*(K3,3)")}, opt);
  ASSERT_EQ(rep.checks.size(), 2U);
  EXPECT_EQ(rep.checks[0].status, CheckStatus::skipped);
  EXPECT_EQ(rep.checks[1].status, CheckStatus::holds);
}

TEST(Verify, MValuationIsReportedNotAsserted) {
  const auto rep = run_suite("valuation");
  EXPECT_EQ(rep.count(CheckStatus::reported), fixture_names().size());
  EXPECT_EQ(rep.count(CheckStatus::holds), fixture_names().size());
}

TEST(Verify, FakeSubdivisionIsViolation) {
  const auto rep = run_suite("valuation", std::nullopt, {}, std::vector<SubdivisionFixture>{fake_fixture()});
  EXPECT_TRUE(rep.any_violated());
}

TEST(Verify, StructureWitnessesFail) {
  VerifyOptions opt;
  opt.random_trials = 50;
  const auto rep = run_suite("structure", std::nullopt, opt);
  expect_clean(rep);
  bool assoc = false;
  for (const auto& c : rep.checks) assoc = assoc || c.identity.find("associativ") != std::string::npos;
  EXPECT_TRUE(assoc);
}

TEST(Verify, QseriesRestriction) {
  VerifyOptions opt;
  opt.q = 3;
  opt.n = 2;
  const auto rep = run_suite("qseries", std::nullopt, opt);
  expect_clean(rep);
  EXPECT_EQ(rep.checks.size(), 6U);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope"), ParseError); }

TEST(CliRun, ComputeJMobiusJson) {
  JobSpec s;
  s.command = "compute";
  s.object = "U2,3";
  s.invariant = "jmobius";
  const auto r = run(s);
  EXPECT_EQ(r.exit_code, kExitOk);
  const Json j = parse_json(r.output);
  EXPECT_EQ(j["at_one"], 0);
  EXPECT_EQ(j["invariant"], "jmobius");
}

TEST(CliRun, ComputeBivariate) {
  JobSpec s;
  s.command = "compute";
  s.invariant = "jmobius";
  s.n = 1;
  s.format = "text";
  const auto r = run(s);
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.output.find("t^3 - t^2 - t + 1"), std::string::npos) << r.output;
}

TEST(CliRun, ComputeErrors) {
  JobSpec s;
  s.command = "compute";
  s.object = "B2";
  EXPECT_EQ(run(s).exit_code, kExitInputError);
  s.invariant = "bogus";
  EXPECT_EQ(run(s).exit_code, kExitInputError);
  s.invariant = "chi";
  s.object = "bowtie?";
  const auto r = run(s);
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_EQ(parse_json(r.output)["error"]["code"], "ParseError");
  s.object = "C3";
  s.format = "yaml";
  EXPECT_EQ(run(s).exit_code, kExitInputError);
}

TEST(CliRun, ComputeOnNonGradedIsRankError) {
  JobSpec s;
  s.command = "compute";
  s.object = R"({"size":5,"covers":[[0,1],[1,2],[2,4],[0,3],[3,4]]})";
  s.invariant = "chi";
  const auto r = run(s);
  EXPECT_EQ(r.exit_code, kExitInputError);
  EXPECT_EQ(parse_json(r.output)["error"]["code"], "RankError");
}

TEST(CliRun, SubdivisionExitCodes) {
  JobSpec s;
  s.command = "subdivision";
  s.fixture = "u24-split";
  EXPECT_EQ(run(s).exit_code, kExitOk);
  s.fixture = fixture_to_json(fake_fixture()).dump();
  EXPECT_EQ(run(s).exit_code, kExitViolation);
  s.invariant = "jmobius";
  EXPECT_EQ(run(s).exit_code, kExitOk);  // reported only
  s.invariant = "mu";
  EXPECT_EQ(run(s).exit_code, kExitInputError);
}

TEST(CliRun, SearchSummary) {
  JobSpec s;
  s.command = "search";
  s.max_ground = 5;
  const auto r = run(s);
  EXPECT_EQ(r.exit_code, kExitOk);
  const Json j = parse_json(r.output);
  EXPECT_TRUE(j["summary"]["modular_violations"].empty());
  EXPECT_EQ(j["rows"].size(), j["summary"]["rows"]);
}

}  // namespace
}  // namespace jmobius
