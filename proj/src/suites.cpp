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

#include "mechlab/search.hpp"

#include <algorithm>

namespace mechlab {
namespace {

MarketConfig const kMarket{3, 1};

ProfileSpace Space(GridConfig const &grid, unsigned workers)
{
  ProfileSpace::Options options;
  options.workers = workers;
  return ProfileSpace(grid.Space(), options);
}

void AddRow(SuiteResult &suite, std::string name, Mechanism const &f, ProfileSpace const &space,
            std::vector<bool> expected)
{
  suite.mechanisms.push_back(std::move(name));
  std::vector<AxiomReport> row;
  row.reserve(suite.axioms.size());
  for (auto const axiom : suite.axioms)
  {
    row.push_back(CheckAxiom(axiom, f, space));
  }
  suite.cells.push_back(std::move(row));
  suite.expected.push_back(std::move(expected));
}

std::vector<bool> AllPass(SuiteResult const &suite)
{
  return std::vector<bool>(suite.axioms.size(), true);
}

std::vector<bool> FailsOnly(SuiteResult const &suite, std::initializer_list<Axiom> failing)
{
  std::vector<bool> out;
  for (auto const axiom : suite.axioms)
  {
    out.push_back(std::find(failing.begin(), failing.end(), axiom) == failing.end());
  }
  return out;
}

void Check(SuiteResult &suite, std::string name, bool passed, std::string detail = {})
{
  suite.checks.push_back({std::move(name), passed, std::move(detail)});
}

Profile At(Values values, MarketConfig config = kMarket)
{
  return Profile(config, std::move(values));
}

SuiteResult UncompromisingSuite(unsigned workers)
{
  auto const grid  = GridConfig::Range(kMarket, 3);
  auto const space = Space(grid, workers);

  SuiteResult suite;
  suite.name   = "theorem1";
  suite.axioms = {Axiom::kEgalitarianEquivalence, Axiom::kStrategyProofness,
                  Axiom::kIndividualRationality, Axiom::kNoSubsidy, Axiom::kEfficiency};

  std::vector<std::pair<std::string, WinnerSelectionFunction>> rules;
  for (auto wsf : {WinnerSelectionFunction::Empty(), WinnerSelectionFunction::StrictWinners(),
                   WinnerSelectionFunction::DictatorialThreshold(0, 2),
                   WinnerSelectionFunction::EfficientWinners()})
  {
    rules.emplace_back(Mechanism::TauVickreyNoTrade(wsf).name(), wsf);
  }
  auto tables = RandomUncompromisingTables(space.grid(), 24, 1);
  for (std::size_t k = 0; k < tables.size(); ++k)
  {
    rules.emplace_back(Mechanism::TauVickreyNoTrade(tables[k]).name() + "#" + std::to_string(k + 1),
                       std::move(tables[k]));
  }

  auto const not_efficient = At({3, 2, 1});
  bool       all_valid     = true;
  bool       all_inefficient_at_321 = true;
  for (auto const &[name, wsf] : rules)
  {
    all_valid = all_valid && ValidateWinnerSelection(wsf, space.grid()).ok() &&
                CheckUncompromising(wsf, space.grid()).ok();
    auto const f = Mechanism::TauVickreyNoTrade(wsf);
    AddRow(suite, name, f, space, FailsOnly(suite, {Axiom::kEfficiency}));
    auto const w = Reevaluate(f, Axiom::kEfficiency, Witness{not_efficient, {}, {}, {}});
    all_inefficient_at_321 = all_inefficient_at_321 && w && w->Value("achieved") == Rational{0} &&
                             w->Value("optimum") == Rational{3};
  }
  Check(suite, "every selection rule is valid and uncompromising", all_valid);
  Check(suite, "every row is inefficient at (3,2,1): achieved 0, optimum 3",
        all_inefficient_at_321);

  // Compromising control: selected at (3,2,2), dropped when agent 1 raises to 4.
  auto const wide = GridConfig::Range(kMarket, 4).Space();
  auto const compromising =
      WinnerSelectionFunction::RuleTable(kMarket, {{Values{3, 2, 2}, WinnerSet{0}}});
  auto const uncompromising = CheckUncompromising(compromising, wide);
  auto const sp = CheckStrategyProofness(Mechanism::TauVickreyNoTrade(compromising), wide);
  bool       mapped = false;
  if (sp.witness && uncompromising.profile && uncompromising.agent && uncompromising.misreport)
  {
    auto const &w = *sp.witness;
    auto const  i = w.agents.front();
    mapped        = i == *uncompromising.agent &&
             w.profile.With(i, *w.misreport) == *uncompromising.profile &&
             w.profile[i] == *uncompromising.misreport;
  }
  Check(suite, "compromising table fails SP at the raise that drops its winner",
        !uncompromising.ok() && sp.verdict == Verdict::kFail && mapped,
        sp.witness ? sp.witness->profile.ToString() : "no SP witness");
  return suite;
}

SuiteResult EfficientNomSuite(unsigned workers)
{
  auto const grid  = GridConfig::Range(kMarket, 3);
  auto const space = Space(grid, workers);

  SuiteResult suite;
  suite.name   = "theorem2";
  suite.axioms = {Axiom::kEgalitarianEquivalence, Axiom::kNonObviousManipulability,
                  Axiom::kEfficiency,             Axiom::kIndividualRationality,
                  Axiom::kNoSubsidy,              Axiom::kBestCaseCondition};

  auto const manipulable =
      FailsOnly(suite, {Axiom::kNonObviousManipulability, Axiom::kBestCaseCondition});
  struct Row
  {
    TildeAssignment assignment;
    bool            member;
  };
  std::vector<Row> rows = {
      {TildeAssignment::AlwaysEv(), true},
      {TildeAssignment::EvIffPriceZero(), true},
      {TildeAssignment::Threshold(1), true},
      {TildeAssignment::Threshold(-1), false},
  };
  bool characterization = true;
  for (auto const &[assignment, member] : rows)
  {
    auto const f = Mechanism::EvPab(assignment);
    AddRow(suite, f.name(), f, space, member ? AllPass(suite) : manipulable);
    characterization = characterization &&
                       CheckEfficiencyCharacterization(assignment, space.grid()).ok() == member;
  }
  auto const pab = Mechanism::PayAsBid();
  AddRow(suite, pab.name(), pab, space, manipulable);

  Check(suite, "zero-price efficient Vickrey condition holds exactly for the members",
        characterization);

  auto const always = Mechanism::EvPab(TildeAssignment::AlwaysEv());
  bool       bounds = true;
  for (AgentIndex i = 0; i < kMarket.n; ++i)
  {
    for (auto const &v : grid.values)
    {
      auto const b = NomAnalyticBounds(always, kMarket, i, v);
      bounds       = bounds && b && b->sup == v && b->inf == Rational{0};
    }
  }
  Check(suite, "always-EV truthful bounds are sup = value, inf = 0", bounds);

  auto const om = FindObviousManipulation(pab, space.grid());
  Check(suite, "pay-as-bid first obvious manipulation is agent 1, value 2, report 1 (SUP 0 -> 1)",
        om && om->agent == 0 && om->true_value == Rational{2} && om->misreport == Rational{1} &&
            om->direction == Direction::kSup && om->truthful_bound == Rational{0} &&
            om->misreport_bound == Rational{1});
  return suite;
}

SuiteResult WelfareSuite(unsigned workers)
{
  auto const grid  = GridConfig::Range(kMarket, 3);
  auto const space = Space(grid, workers);

  SuiteResult suite;
  suite.name   = "welfare";
  suite.axioms = {Axiom::kWelfareCompare};

  auto const always = Mechanism::EvPab(TildeAssignment::AlwaysEv());
  std::vector<std::pair<std::string, Mechanism>> others;
  auto const add = [&](Mechanism f, std::string suffix = {}) {
    auto name = f.name() + suffix;
    others.emplace_back(std::move(name), std::move(f));
  };
  add(Mechanism::EvPab(TildeAssignment::EvIffPriceZero()));
  add(Mechanism::EvPab(TildeAssignment::Threshold(-1)));
  for (auto const &c : grid.values)
  {
    add(Mechanism::EvPab(TildeAssignment::Threshold(c)));
  }
  add(Mechanism::PayAsBid());
  auto tables = RandomBranchTables(space.grid(), 8, 2);
  for (std::size_t k = 0; k < tables.size(); ++k)
  {
    add(Mechanism::EvPab(std::move(tables[k])), "#" + std::to_string(k + 1));
  }

  for (auto const &[name, g] : others)
  {
    auto const  cmp = CompareWelfare(always, g, space);
    AxiomReport cell;
    cell.axiom            = Axiom::kWelfareCompare;
    cell.profiles_checked = cmp.profiles_checked;
    cell.note             = std::string(ToString(cmp.relation));
    if (cmp.first_loss)
    {
      cell.verdict = Verdict::kFail;
      cell.witness = cmp.first_loss;
    }
    suite.mechanisms.push_back(name);
    suite.cells.push_back({std::move(cell)});
    suite.expected.push_back({true});
  }

  auto const baseline = Mechanism::EvPab(TildeAssignment::EvIffPriceZero());
  auto const cmp      = CompareWelfare(always, baseline, space);
  auto const at       = At({3, 1, 1});
  auto const u_always = Utility(always(at)[0], 3);
  auto const u_base   = Utility(baseline(at)[0], 3);
  Check(suite, "always-EV strictly dominates EV-iff-price-zero, agent 1 at (3,1,1) gets 2 vs 0",
        cmp.relation == WelfareRelation::kDominates && u_always == Rational{2} &&
            u_base == Rational{0});
  return suite;
}

SuiteResult ExamplesFiveSixSuite(unsigned workers)
{
  auto const grid  = GridConfig::Range(kMarket, 3);
  auto const space = Space(grid, workers);

  SuiteResult suite;
  suite.name   = "examples56";
  suite.axioms = {Axiom::kAnonymityInWelfare, Axiom::kEgalitarianEquivalence,
                  Axiom::kStrategyProofness, Axiom::kIndividualRationality, Axiom::kNoSubsidy};

  auto const dictatorial =
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::DictatorialThreshold(0, 2));
  auto const efficient =
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::EfficientWinners());
  AddRow(suite, dictatorial.name(), dictatorial, space,
         FailsOnly(suite, {Axiom::kAnonymityInWelfare}));
  AddRow(suite, efficient.name(), efficient, space, AllPass(suite));

  Witness const pair{At({3, 2, 2}), {0, 1}, std::nullopt, {{"utility", 1}, {"swapped_utility", 0}}};
  Check(suite, "dictatorial rule: (3,2,2) vs swapped (2,3,2) gives utilities 1 vs 0",
        Replays(dictatorial, Axiom::kAnonymityInWelfare, pair));
  return suite;
}

}  // namespace

bool SuiteResult::CellMatches(std::size_t row, std::size_t column) const
{
  return IsPass(cells.at(row).at(column).verdict) == expected.at(row).at(column);
}

bool SuiteResult::Matches() const
{
  for (std::size_t r = 0; r < cells.size(); ++r)
  {
    for (std::size_t c = 0; c < cells[r].size(); ++c)
    {
      if (!CellMatches(r, c))
      {
        return false;
      }
    }
  }
  return std::all_of(checks.begin(), checks.end(), [](SuiteCheck const &c) { return c.passed; });
}

std::vector<std::string> SuiteNames()
{
  return {"independence", "theorem1", "theorem2", "welfare", "examples56"};
}

SuiteResult IndependenceSuite(GridConfig const &grid, unsigned workers)
{
  auto const space = Space(grid, workers);

  SuiteResult suite;
  suite.name   = "independence";
  suite.axioms = {Axiom::kEgalitarianEquivalence, Axiom::kStrategyProofness,
                  Axiom::kIndividualRationality, Axiom::kNoSubsidy};

  std::pair<Mechanism, Axiom> const rows[] = {
      {Mechanism::Vickrey(), Axiom::kEgalitarianEquivalence},
      {Mechanism::PayAsBid(), Axiom::kStrategyProofness},
      {Mechanism::NoTrade(1), Axiom::kIndividualRationality},
      {Mechanism::NoTrade(-1), Axiom::kNoSubsidy},
  };
  for (auto const &[f, dropped] : rows)
  {
    AddRow(suite, f.name(), f, space, FailsOnly(suite, {dropped}));
  }
  return suite;
}

SuiteResult RunSuite(std::string const &name, unsigned workers)
{
  if (name == "independence")
  {
    return IndependenceSuite(GridConfig::Range(kMarket, 3), workers);
  }
  if (name == "theorem1")
  {
    return UncompromisingSuite(workers);
  }
  if (name == "theorem2")
  {
    return EfficientNomSuite(workers);
  }
  if (name == "welfare")
  {
    return WelfareSuite(workers);
  }
  if (name == "examples56")
  {
    return ExamplesFiveSixSuite(workers);
  }
  throw UsageError("unknown suite '" + name + "'");
}

}  // namespace mechlab
