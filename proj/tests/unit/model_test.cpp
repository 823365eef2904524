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

#include "mechlab/model.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace mechlab {
namespace {

using testing::P;

MarketConfig const kThreeOne(3, 1);

TEST(MarketConfigTest, RequiresMoreAgentsThanObjects)
{
  EXPECT_THROW(MarketConfig(3, 3), UsageError);
  EXPECT_THROW(MarketConfig(2, 0), UsageError);
  EXPECT_NO_THROW(MarketConfig(3, 2));
}

TEST(ProfileTest, RejectsWrongSizeOrNegativeValues)
{
  EXPECT_THROW(P(kThreeOne, {1, 2}), UsageError);
  EXPECT_THROW(P(kThreeOne, {1, -2, 0}), UsageError);
}

TEST(UtilityTest, QuasiLinear)
{
  EXPECT_EQ(Utility(Bundle{true, 3}, 5), Rational(2));
  EXPECT_EQ(Utility(Bundle{false, 0}, 7), Rational(0));
  EXPECT_EQ(Utility(Bundle{true, 5}, 5), Rational(0));
  EXPECT_EQ(Utility(Bundle{false, -1}, 5), Rational(1));
}

TEST(UtilityTest, LinearInTransfer)
{
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k)
  {
    Rational const v(static_cast<std::int64_t>(rng() % 20), 3);
    Rational const t(static_cast<std::int64_t>(rng() % 41) - 20, 7);
    Rational const delta(static_cast<std::int64_t>(rng() % 41) - 20, 5);
    bool const     x = (rng() & 1u) != 0;
    EXPECT_EQ(Utility(Bundle{x, t + delta}, v), Utility(Bundle{x, t}, v) - delta);
  }
}

TEST(KthHighestTest, Examples)
{
  EXPECT_EQ(KthHighest(P(MarketConfig(4, 1), {5, 3, 3, 1}), 2), Rational(3));
  EXPECT_EQ(KthHighest(P(kThreeOne, {2, 2, 2}), 3), Rational(2));
  EXPECT_EQ(KthHighest(P(kThreeOne, {0, 4, 1}), 1), Rational(4));
  EXPECT_THROW(KthHighest(P(kThreeOne, {0, 4, 1}), 0), UsageError);
  EXPECT_THROW(KthHighest(P(kThreeOne, {0, 4, 1}), 4), UsageError);
}

TEST(KthHighestTest, WeaklyDecreasingAndMatchesSort)
{
  std::mt19937_64    rng(11);
  MarketConfig const config(5, 2);
  for (int k = 0; k < 200; ++k)
  {
    auto const p = testing::RandomProfile(rng, config, 4, 2);
    for (std::size_t r = 1; r <= 5; ++r)
    {
      EXPECT_EQ(KthHighest(p, r), testing::Rank(p, r));
      if (r > 1)
      {
        EXPECT_LE(KthHighest(p, r), KthHighest(p, r - 1));
      }
    }
  }
}

TEST(TildeTest, Examples)
{
  EXPECT_TRUE(InTildeV(P(kThreeOne, {3, 2, 2})));
  EXPECT_FALSE(InTildeV(P(kThreeOne, {3, 2, 1})));
  EXPECT_TRUE(InTildeV(P(MarketConfig(3, 2), {3, 2, 1})));
}

TEST(TildeTest, PermutationInvariantAndAlwaysTrueWhenOneTrailingRank)
{
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k)
  {
    auto const p      = testing::RandomProfile(rng, MarketConfig(4, 1), 2, 1);
    auto       values = p.values();
    std::shuffle(values.begin(), values.end(), rng);
    EXPECT_EQ(InTildeV(p), InTildeV(Profile(p.config(), values)));

    auto const q = testing::RandomProfile(rng, MarketConfig(4, 3), 5, 2);
    EXPECT_TRUE(InTildeV(q));
  }
}

TEST(FeasibilityTest, Examples)
{
  auto const one  = Bundle{true, 0};
  auto const zero = Bundle::Zero();
  EXPECT_TRUE(IsFeasible(Allocation{{one, zero, zero}}, kThreeOne));
  EXPECT_FALSE(IsFeasible(Allocation{{one, one, zero}}, kThreeOne));
  EXPECT_TRUE(IsFeasible(Allocation{{zero, zero, zero}}, MarketConfig(3, 2)));
  EXPECT_FALSE(IsFeasible(Allocation{{zero, zero}}, kThreeOne));
}

TEST(ProfileTest, WithAndSwapped)
{
  auto const p = P(kThreeOne, {3, 2, 1});
  EXPECT_EQ(p.With(2, 5), P(kThreeOne, {3, 2, 5}));
  EXPECT_EQ(p.Swapped(0, 1), P(kThreeOne, {2, 3, 1}));
  EXPECT_EQ(p.ToString(), "(3,2,1)");
  EXPECT_EQ(MaxSurplus(p), Rational(3));
  EXPECT_EQ(MaxSurplus(P(MarketConfig(3, 2), {3, 2, 1})), Rational(5));
}

TEST(AllocationTest, WinnersSurplusUtilities)
{
  auto const       p = P(kThreeOne, {3, 2, 1});
  Allocation const z{{Bundle{false, 0}, Bundle{true, 1}, Bundle{false, -1}}};
  EXPECT_EQ(z.ObjectCount(), 1u);
  EXPECT_EQ(z.Winners(), std::vector<AgentIndex>{1});
  EXPECT_EQ(z.Surplus(p), Rational(2));
  EXPECT_EQ(z.Utilities(p), (std::vector<Rational>{0, 1, 1}));
}

}  // namespace
}  // namespace mechlab
