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

#include "mechlab/axioms.hpp"
#include "mechlab/search.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

namespace mechlab {
namespace {

using testing::P;

MarketConfig const kThreeOne(3, 1);

ProfileSpace Space(std::int64_t upper, MarketConfig config = kThreeOne)
{
  return ProfileSpace(GridSpace::Shared(config, testing::Range(upper)));
}

std::vector<Mechanism> ClosedForms()
{
  return {Mechanism::Vickrey(),
          Mechanism::EfficientVickrey(),
          Mechanism::PayAsBid(),
          Mechanism::NoTrade(),
          Mechanism::NoTrade(1),
          Mechanism::NoTrade(-1),
          Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::Empty()),
          Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::StrictWinners()),
          Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::EfficientWinners()),
          Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::DictatorialThreshold(0, 1)),
          Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::DictatorialThreshold(1, 0)),
          Mechanism::EvPab(TildeAssignment::AlwaysEv()),
          Mechanism::EvPab(TildeAssignment::EvIffPriceZero()),
          Mechanism::EvPab(TildeAssignment::Threshold(1)),
          Mechanism::EvPab(TildeAssignment::Threshold(-1))};
}

TEST(NomBoundsTest, Examples)
{
  auto const ev = NomAnalyticBounds(Mechanism::EvPab(TildeAssignment::AlwaysEv()), kThreeOne, 0, 3);
  ASSERT_TRUE(ev);
  EXPECT_EQ(ev->sup, Rational(3));
  EXPECT_EQ(ev->inf, Rational(0));
  ASSERT_TRUE(ev->sup_realizer);
  EXPECT_EQ(*ev->sup_realizer, P(kThreeOne, {3, 0, 0}));

  auto const pab = NomAnalyticBounds(Mechanism::PayAsBid(), kThreeOne, 0, 4);
  ASSERT_TRUE(pab);
  EXPECT_EQ(pab->sup, Rational(0));
  EXPECT_EQ(pab->inf, Rational(0));

  auto const none = NomAnalyticBounds(Mechanism::NoTrade(), kThreeOne, 1, 5);
  ASSERT_TRUE(none);
  EXPECT_EQ(none->sup, Rational(0));
  EXPECT_EQ(none->inf, Rational(0));

  auto const shade = ManipulationBounds(Mechanism::PayAsBid(), kThreeOne, 0, 2, 4);
  ASSERT_TRUE(shade);
  EXPECT_EQ(shade->sup, Rational(2));
}

TEST(NomBoundsTest, RuleTablesAndCustomHaveNoClosedForm)
{
  auto const grid  = GridSpace::Shared(kThreeOne, testing::Range(3));
  auto const table = Mechanism::EvPab(RandomBranchTables(grid, 1, 4).front());
  EXPECT_FALSE(NomAnalyticBounds(table, kThreeOne, 0, 1));
  auto const custom = Mechanism::Custom("none", [](Profile const &p) { return NoTrade(p); });
  EXPECT_FALSE(NomAnalyticBounds(custom, kThreeOne, 0, 1));
  EXPECT_THROW(NomAnalyticBounds(Mechanism::Vickrey(), kThreeOne, 3, 1), UsageError);
  EXPECT_THROW(NomAnalyticBounds(Mechanism::Vickrey(), kThreeOne, 0, -1), UsageError);
}

// The closed forms bracket every grid: grid sup never exceeds the exact sup
// and grid inf never falls below the exact inf. Realizers attain the bound.
TEST(NomBoundsTest, ClosedFormsBracketFineGrids)
{
  for (auto const config : {MarketConfig(3, 1), MarketConfig(3, 2), MarketConfig(4, 2)})
  {
    auto const grid = GridConfig::Range(config, 3, config.m == 1 ? 2 : 1).Space();
    for (auto const &f : ClosedForms())
    {
      for (AgentIndex i = 0; i < config.n; ++i)
      {
        for (auto const &value : grid.values(i))
        {
          for (auto const &report : grid.values(i))
          {
            auto const exact = ManipulationBounds(f, config, i, report, value);
            ASSERT_TRUE(exact) << f.name();
            auto const on_grid = GridManipulationBounds(f, grid, i, report, value);
            EXPECT_LE(on_grid.sup, exact->sup) << f.name() << " i=" << i << " v=" << value
                                               << " r=" << report;
            EXPECT_GE(on_grid.inf, exact->inf) << f.name() << " i=" << i << " v=" << value
                                               << " r=" << report;
            for (auto const &[realizer, bound] :
                 {std::pair{exact->sup_realizer, exact->sup},
                  std::pair{exact->inf_realizer, exact->inf}})
            {
              if (realizer)
              {
                EXPECT_EQ((*realizer)[i], report);
                EXPECT_EQ(Utility(f(*realizer)[i], value), bound) << f.name() << ' ' << *realizer;
              }
            }
          }
        }
      }
    }
  }
}

TEST(NomCheckTest, Examples)
{
  auto const pab = CheckNonObviousManipulability(Mechanism::PayAsBid(), Space(4));
  ASSERT_EQ(pab.verdict, Verdict::kFail);
  ASSERT_TRUE(pab.manipulation);
  EXPECT_EQ(pab.manipulation->direction, Direction::kSup);
  EXPECT_EQ(pab.manipulation->truthful_bound, Rational(0));
  EXPECT_FALSE(pab.grid_relative);
  EXPECT_TRUE(Replays(Mechanism::PayAsBid(), kThreeOne, *pab.manipulation));

  auto const ev = CheckNonObviousManipulability(Mechanism::EvPab(TildeAssignment::AlwaysEv()),
                                                Space(3));
  EXPECT_EQ(ev.verdict, Verdict::kPassAnalytic);
  for (auto const &row : ev.bounds)
  {
    EXPECT_EQ(row.bounds.sup, row.value);
    EXPECT_EQ(row.bounds.inf, Rational(0));
  }
  EXPECT_EQ(CheckNonObviousManipulability(Mechanism::NoTrade(), Space(3)).verdict,
            Verdict::kPassAnalytic);
}

TEST(NomCheckTest, RuleTablesAreGridRelative)
{
  auto const space = Space(3);
  auto const f     = Mechanism::EvPab(RandomBranchTables(space.grid(), 1, 4).front());
  auto const r     = CheckNonObviousManipulability(f, space);
  EXPECT_TRUE(r.grid_relative);
  EXPECT_NE(r.verdict, Verdict::kPassAnalytic);
  EXPECT_NE(r.verdict, Verdict::kPassExhaustive);
}

TEST(BestCaseConditionTest, Examples)
{
  auto const ev = CheckBestCaseCondition(Mechanism::EvPab(TildeAssignment::AlwaysEv()), Space(3));
  EXPECT_TRUE(IsPass(ev.verdict));
  auto const pab = CheckBestCaseCondition(Mechanism::PayAsBid(), Space(4));
  ASSERT_EQ(pab.verdict, Verdict::kFail);
  EXPECT_EQ(pab.witness->Value("sup"), Rational(0));
  EXPECT_GT(*pab.witness->Value("target"), Rational(0));
  // Premises fail: no-trade with a fee is not individually rational.
  EXPECT_EQ(CheckBestCaseCondition(Mechanism::NoTrade(1), Space(3)).verdict,
            Verdict::kNotApplicable);
  // Value zero is trivially fine: best case 0 equals receiving the object free.
  auto const zero = NomAnalyticBounds(Mechanism::PayAsBid(), kThreeOne, 0, 0);
  EXPECT_EQ(zero->sup, Rational(0));
}

// The best-case condition and NOM agree for efficient, rational,
// subsidy-free mechanisms with closed forms.
TEST(BestCaseConditionTest, AgreesWithNom)
{
  auto const space = Space(3);
  for (auto const &f :
       {Mechanism::EvPab(TildeAssignment::AlwaysEv()),
        Mechanism::EvPab(TildeAssignment::EvIffPriceZero()),
        Mechanism::EvPab(TildeAssignment::Threshold(2)),
        Mechanism::EvPab(TildeAssignment::Threshold(-1)), Mechanism::PayAsBid(),
        Mechanism::EfficientVickrey()})
  {
    auto const nom  = CheckNonObviousManipulability(f, space);
    auto const best = CheckBestCaseCondition(f, space);
    ASSERT_NE(best.verdict, Verdict::kNotApplicable) << f.name();
    EXPECT_EQ(IsPass(nom.verdict), IsPass(best.verdict)) << f.name();
  }
}

// Strategy-proof on the grid implies no obvious manipulation on the grid.
TEST(NomCheckTest, StrategyProofImpliesNom)
{
  auto const space = Space(3);
  for (auto const &f : ClosedForms())
  {
    if (CheckStrategyProofness(f, space).verdict != Verdict::kPassExhaustive)
    {
      continue;
    }
    EXPECT_TRUE(IsPass(CheckNonObviousManipulability(f, space).verdict)) << f.name();
    EXPECT_FALSE(FindObviousManipulation(f, space.grid())) << f.name();
  }
}

}  // namespace
}  // namespace mechlab
