//------------------------------------------------------------------------------
//
//   Copyright 2026 The mechlab Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "mechlab/audit.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace mechlab {
namespace {

using testing::P;

MarketConfig const kThreeOne(3, 1);

Json BaseConfig(Json mechanisms, Json axioms)
{
  return {{"schema", 1},
          {"market", {{"n", 3}, {"m", 1}}},
          {"grid", {{"values", {"0", "1", "2", "3"}}}},
          {"mechanisms", std::move(mechanisms)},
          {"axioms", std::move(axioms)}};
}

TEST(SerializeTest, RationalAndProfile)
{
  EXPECT_EQ(ToJson(Rational(-1, 2)), Json("-1/2"));
  EXPECT_EQ(RationalFromJson(Json("3/6")), Rational(1, 2));
  EXPECT_EQ(RationalFromJson(Json(4)), Rational(4));
  EXPECT_THROW(RationalFromJson(Json("x")), UsageError);
  EXPECT_THROW(RationalFromJson(Json(0.5)), UsageError);
  auto const p = P(kThreeOne, {3, 2, 2});
  EXPECT_EQ(ProfileFromJson(ToJson(p), kThreeOne), p);
  EXPECT_THROW(ProfileFromJson(Json::array({"1", "2"}), kThreeOne), UsageError);
}

TEST(SerializeTest, WitnessRoundTrip)
{
  Witness const w{P(kThreeOne, {4, 1, 0}), {0}, Rational(2),
                  {{"truthful_utility", 0}, {"misreport_utility", 2}}};
  auto const    json = ToJson(w);
  EXPECT_EQ(json.at("agents"), Json::array({1}));
  EXPECT_EQ(WitnessFromJson(json, kThreeOne), w);
}

TEST(SerializeTest, AxiomReportRoundTrip)
{
  auto const space = ProfileSpace(GridSpace::Shared(kThreeOne, testing::Range(4)));
  for (auto const axiom : {Axiom::kStrategyProofness, Axiom::kNonObviousManipulability,
                           Axiom::kEgalitarianEquivalence, Axiom::kBestCaseCondition})
  {
    for (auto const &f : {Mechanism::PayAsBid(), Mechanism::Vickrey(),
                          Mechanism::EvPab(TildeAssignment::AlwaysEv())})
    {
      auto const report = CheckAxiom(axiom, f, space);
      auto const back   = AxiomReportFromJson(ToJson(report), kThreeOne);
      EXPECT_EQ(back.axiom, report.axiom);
      EXPECT_EQ(back.verdict, report.verdict);
      EXPECT_EQ(back.witness, report.witness);
      EXPECT_EQ(back.manipulation, report.manipulation);
      EXPECT_EQ(back.profiles_checked, report.profiles_checked);
      EXPECT_EQ(ToJson(back), ToJson(report));
    }
  }
}

TEST(MechanismSpecTest, ShortForms)
{
  struct Case
  {
    char const *text;
    char const *name;
  };
  for (auto const &[text, name] :
       {Case{"vickrey", "vickrey"}, Case{"efficient_vickrey", "efficient_vickrey"},
        Case{"pay_as_bid", "pay_as_bid"}, Case{"tau_vnt:strict", "tau_vnt(strict_winners)"},
        Case{"tau_vnt:dictatorial=1@2", "tau_vnt(dictatorial_threshold(1,2))"},
        Case{"ev_pab:always_ev", "ev_pab(always_ev)"},
        Case{"ev_pab:threshold=1/2", "ev_pab(threshold(1/2))"}})
  {
    EXPECT_EQ(MechanismFromJson(ParseMechanismSpec(text), kThreeOne).name(), name) << text;
  }
  auto const fee = MechanismFromJson(ParseMechanismSpec("no_trade:fee=-1"), kThreeOne);
  EXPECT_EQ(fee.family(), Family::kNoTrade);
  EXPECT_EQ(fee.fee(), Rational(-1));
}

TEST(MechanismSpecTest, JsonRuleTables)
{
  Json const wsf = {
      {"family", "TAU_VICKREY_NO_TRADE"},
      {"wsf",
       {{"kind", "RULE_TABLE"}, {"entries", {{{"profile", {"3", "2", "2"}}, {"winners", {1}}}}}}}};
  auto const f = MechanismFromJson(wsf, kThreeOne);
  EXPECT_EQ(f(P(kThreeOne, {3, 2, 2})).Winners(), std::vector<AgentIndex>{0});
  EXPECT_EQ(f(P(kThreeOne, {4, 2, 2})).Winners(), std::vector<AgentIndex>{});

  Json const branch = {
      {"family", "EV_PAB"},
      {"assignment",
       {{"kind", "RULE_TABLE"}, {"entries", {{{"profile", {"3", "1", "1"}}, {"branch", "EV"}}}}}}};
  auto const g = MechanismFromJson(branch, kThreeOne);
  EXPECT_EQ(g(P(kThreeOne, {3, 1, 1}))[0].transfer, Rational(1));
  EXPECT_EQ(g(P(kThreeOne, {2, 1, 1}))[0].transfer, Rational(2));
}

TEST(MechanismSpecTest, Errors)
{
  EXPECT_THROW(ParseMechanismSpec("auction"), UsageError);
  EXPECT_THROW(MechanismFromJson(Json{{"family", "LOTTERY"}}, kThreeOne), UsageError);
  EXPECT_THROW(ParseMechanismSpec("no_trade:fee=x"), UsageError);
  Json const invalid = {
      {"family", "TAU_VICKREY_NO_TRADE"},
      {"wsf",
       {{"kind", "RULE_TABLE"}, {"entries", {{{"profile", {"3", "2", "1"}}, {"winners", {1}}}}}}}};
  EXPECT_THROW(MechanismFromJson(invalid, kThreeOne), UsageError);
  EXPECT_EQ(ParseValues("1/2,0,3"), (Values{Rational(1, 2), 0, 3}));
  EXPECT_THROW(ParseValues("1,,2"), UsageError);
}

TEST(AuditConfigTest, Errors)
{
  auto config = BaseConfig({"vickrey"}, {"SP"});
  EXPECT_NO_THROW(ParseAuditConfig(config));

  auto bad_market          = config;
  bad_market["market"]["m"] = 3;
  EXPECT_THROW(ParseAuditConfig(bad_market), UsageError);

  auto bad_axiom      = config;
  bad_axiom["axioms"] = {"SP", "FAIRNESS"};
  EXPECT_THROW(ParseAuditConfig(bad_axiom), UsageError);

  auto bad_family          = config;
  bad_family["mechanisms"] = {{{"family", "LOTTERY"}}};
  EXPECT_THROW(ParseAuditConfig(bad_family), UsageError);

  auto no_baseline      = config;
  no_baseline["axioms"] = {"WELFARE_COMPARE"};
  EXPECT_THROW(ParseAuditConfig(no_baseline), UsageError);

  auto schema      = config;
  schema["schema"] = 2;
  EXPECT_THROW(ParseAuditConfig(schema), UsageError);
}

TEST(AuditConfigTest, AxiomAliases)
{
  auto const all = ParseAuditConfig(BaseConfig({"vickrey"}, "all"));
  EXPECT_EQ(all.axioms.size(), 9u);
  auto with_baseline        = BaseConfig({"vickrey"}, "all");
  with_baseline["baseline"] = "no_trade";
  EXPECT_EQ(ParseAuditConfig(with_baseline).axioms.size(), 10u);
  EXPECT_EQ(ParseAuditConfig(BaseConfig({"vickrey"}, "efficient_nom")).axioms.size(), 6u);
}

TEST(AuditRunTest, ExitCodesFollowVerdicts)
{
  auto const pass = RunAudit(ParseAuditConfig(BaseConfig({"ev_pab:always_ev"}, "efficient_nom")));
  EXPECT_TRUE(pass.all_pass);
  EXPECT_EQ(pass.ExitCode(), 0);

  auto const fail = RunAudit(ParseAuditConfig(BaseConfig({"pay_as_bid"}, {"SP"})));
  EXPECT_EQ(fail.ExitCode(), 1);
  auto const &cell = fail.report.at("results")[0].at("reports")[0];
  EXPECT_EQ(cell.at("verdict"), "FAIL");
  EXPECT_TRUE(cell.contains("shrunk_witness"));
  EXPECT_NE(fail.table.find("FAIL"), std::string::npos);
}

TEST(AuditRunTest, ReportsReplayAfterRoundTrip)
{
  auto config        = BaseConfig({"vickrey", "pay_as_bid", "no_trade:fee=1", "no_trade:fee=-1",
                                   "tau_vnt:dictatorial=1@2", "ev_pab:always_ev"},
                                  "all");
  config["baseline"] = "ev_pab:ev_iff_price_zero";
  auto const run     = RunAudit(ParseAuditConfig(config));
  EXPECT_EQ(run.ExitCode(), 1);
  auto const reparsed = Json::parse(run.report.dump());
  EXPECT_TRUE(ReplayReport(reparsed));

  // A tampered witness no longer replays.
  auto tampered = reparsed;
  for (auto &cell : tampered.at("results")[0].at("reports"))
  {
    if (cell.at("axiom") == "EE")
    {
      cell["witness"]["profile"] = {"3", "0", "0"};
    }
  }
  EXPECT_FALSE(ReplayReport(tampered));
}

TEST(AuditRunTest, DeterministicAcrossRunsAndWorkers)
{
  auto config      = BaseConfig({"pay_as_bid", "vickrey", "tau_vnt:dictatorial=1@2"}, "all");
  config["mode"]   = "sampled";
  config["seed"]   = 9;
  config["samples"] = 40;
  auto const parsed = ParseAuditConfig(config);
  auto const first  = StableDump(RunAudit(parsed, 1).report);
  EXPECT_EQ(first, StableDump(RunAudit(parsed, 1).report));
  EXPECT_EQ(first, StableDump(RunAudit(parsed, 4).report));
  EXPECT_EQ(first.find("timing"), std::string::npos);
}

}  // namespace
}  // namespace mechlab
