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

#include "mechlab/mechanisms.hpp"
#include "mechlab/search.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace mechlab {
namespace {

using testing::P;

MarketConfig const kThreeOne(3, 1);
Bundle const       kZero{};

Allocation Z(std::vector<Bundle> bundles)
{
  return Allocation{std::move(bundles)};
}

TEST(MechanismTest, TauVickreyNoTradeExamples)
{
  auto const strict = Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::StrictWinners());
  EXPECT_EQ(strict(P(kThreeOne, {3, 2, 2})), Z({{true, 2}, kZero, kZero}));
  EXPECT_EQ(strict(P(kThreeOne, {3, 2, 1})), Allocation::Zero(3));

  auto const dict =
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::DictatorialThreshold(0, 2));
  EXPECT_EQ(dict(P(kThreeOne, {3, 2, 2})), Z({{true, 2}, kZero, kZero}));
  EXPECT_EQ(dict(P(kThreeOne, {2, 3, 2})), Allocation::Zero(3));
  EXPECT_EQ(dict.name(), "tau_vnt(dictatorial_threshold(1,2))");
}

TEST(MechanismTest, EvPabExamples)
{
  auto const f = Mechanism::EvPab(TildeAssignment::AlwaysEv());
  EXPECT_EQ(f(P(kThreeOne, {3, 2, 2})), Z({{true, 2}, kZero, kZero}));
  EXPECT_EQ(f(P(kThreeOne, {3, 2, 1})), Z({{true, 3}, kZero, kZero}));
  auto const free = P(kThreeOne, {3, 0, 0});
  EXPECT_EQ(f(free), Z({{true, 0}, kZero, kZero}));
  EXPECT_EQ(f(free).Utilities(free).front(), Rational(3));

  auto const g = Mechanism::EvPab(TildeAssignment::EvIffPriceZero());
  EXPECT_EQ(g(P(kThreeOne, {3, 1, 1})), Z({{true, 3}, kZero, kZero}));
}

TEST(MechanismTest, CanonicalFamilies)
{
  EXPECT_EQ(Mechanism::Vickrey()(P(kThreeOne, {5, 3, 2})), Z({{true, 3}, kZero, kZero}));
  EXPECT_EQ(Mechanism::Vickrey()(P(kThreeOne, {3, 3, 2})), Allocation::Zero(3));
  EXPECT_EQ(Mechanism::EfficientVickrey()(P(kThreeOne, {3, 3, 2})), Z({{true, 3}, kZero, kZero}));
  EXPECT_EQ(Mechanism::PayAsBid()(P(kThreeOne, {1, 3, 2})), Z({kZero, {true, 3}, kZero}));
  EXPECT_EQ(Mechanism::NoTrade(1)(P(kThreeOne, {5, 0, 0})),
            Z({{false, 1}, {false, 1}, {false, 1}}));
}

TEST(MechanismTest, CustomRuleMustBeFeasible)
{
  auto const bad = Mechanism::Custom("two_objects", [](Profile const &p) {
    auto z       = Allocation::Zero(p.size());
    z.bundles[0] = Bundle{true, 0};
    z.bundles[1] = Bundle{true, 0};
    return z;
  });
  EXPECT_THROW(bad(P(kThreeOne, {1, 1, 1})), std::logic_error);
  EXPECT_EQ(bad.family(), Family::kCustom);
}

TEST(MechanismTest, TauVickreyAllocation)
{
  auto const p = P(MarketConfig(4, 2), {5, 1, 1, 1});
  EXPECT_EQ(TauVickreyAllocation(p, {0, 2}), Z({{true, 1}, kZero, {true, 1}, kZero}));
}

std::vector<Mechanism> ClassMembers(GridSpace const &grid)
{
  std::vector<Mechanism> out{
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::Empty()),
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::StrictWinners()),
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::DictatorialThreshold(0, 2)),
      Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::EfficientWinners()),
      Mechanism::EvPab(TildeAssignment::AlwaysEv()),
      Mechanism::EvPab(TildeAssignment::EvIffPriceZero()),
      Mechanism::EvPab(TildeAssignment::Threshold(1)),
  };
  for (auto const &wsf : RandomUncompromisingTables(grid, 6, 9))
  {
    out.push_back(Mechanism::TauVickreyNoTrade(wsf));
  }
  for (auto const &a : RandomBranchTables(grid, 4, 9))
  {
    out.push_back(Mechanism::EvPab(a));
  }
  return out;
}

// Structural invariants of both characterised classes on every grid
// profile: feasibility, losers hold the zero bundle, winners are at or above
// the (m+1)-th value, and tau-mechanisms charge exactly that value.
TEST(MechanismPropertyTest, ClassInvariantsOnGrid)
{
  for (auto const config : {MarketConfig(3, 1), MarketConfig(3, 2), MarketConfig(4, 1)})
  {
    auto const grid = GridSpace::Shared(config, testing::Range(3));
    for (auto const &f : ClassMembers(grid))
    {
      bool const tau = f.family() == Family::kTauVickreyNoTrade;
      for (auto const &p : testing::AllProfiles(config, testing::Range(3)))
      {
        auto const z     = f(p);
        auto const price = testing::Rank(p, config.m + 1);
        ASSERT_TRUE(IsFeasible(z, config));
        for (AgentIndex i = 0; i < p.size(); ++i)
        {
          if (!z[i].object)
          {
            EXPECT_TRUE(z[i].is_zero()) << f.name() << ' ' << p;
            continue;
          }
          EXPECT_GE(p[i], price) << f.name() << ' ' << p;
          if (tau)
          {
            EXPECT_EQ(z[i].transfer, price) << f.name() << ' ' << p;
          }
        }
      }
    }
  }
}

TEST(MechanismPropertyTest, EmptySelectionEqualsNoTrade)
{
  auto const empty = Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::Empty());
  auto const none  = Mechanism::NoTrade();
  std::mt19937_64 rng(23);
  for (int k = 0; k < 500; ++k)
  {
    MarketConfig const config(2 + rng() % 4, 1);
    auto const         p = testing::RandomProfile(rng, config, 3, 3);
    EXPECT_EQ(empty(p), none(p));
  }
}

// With one trailing rank the tie class is everything, and the strict-winner
// tau mechanism and the always-EV composition coincide in utility with the
// canonical efficient Vickrey allocation.
TEST(MechanismPropertyTest, OneTrailingRankUtilitiesCoincide)
{
  auto const strict = Mechanism::TauVickreyNoTrade(WinnerSelectionFunction::StrictWinners());
  auto const ev_pab = Mechanism::EvPab(TildeAssignment::AlwaysEv());
  auto const ev     = Mechanism::EfficientVickrey();
  for (auto const config : {MarketConfig(3, 2), MarketConfig(4, 3)})
  {
    for (auto const &p : testing::AllProfiles(config, testing::Range(3)))
    {
      auto const u = ev(p).Utilities(p);
      EXPECT_EQ(strict(p).Utilities(p), u) << p;
      EXPECT_EQ(ev_pab(p).Utilities(p), u) << p;
    }
  }
}

}  // namespace
}  // namespace mechlab
