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

#include <vector>

namespace mechlab {
namespace {

// Agent i reports `report`, every opponent reports `others`.
Profile Uniform(MarketConfig const &config, AgentIndex i, Rational const &report,
                Rational const &others)
{
  Values values(config.n, others);
  values[i] = report;
  return Profile(config, std::move(values));
}

// Opponents all strictly above the report: agent i never holds an object.
Profile Losing(MarketConfig const &config, AgentIndex i, Rational const &report)
{
  return Uniform(config, i, report, report + 1);
}

// Profiles where agent i might win at a price equal to its own report:
// off the tie class under pay-as-bid, or tied at the report and first in
// canonical order among the tied agents. Callers keep the ones that do.
std::vector<Profile> PricedAtReport(MarketConfig const &config, AgentIndex i,
                                    Rational const &report)
{
  std::vector<Profile> out;
  auto const           above = report + 1;

  // m - 1 opponents above, one strictly between zero and the report, rest zero.
  for (auto const &low : {report / 2, report * 3 / 4})
  {
    Values      values(config.n, Rational{0});
    std::size_t placed = 0;
    bool        lowest = false;
    for (AgentIndex j = 0; j < config.n; ++j)
    {
      if (j == i)
      {
        values[j] = report;
      }
      else if (placed + 1 < config.m)
      {
        values[j] = above;
        ++placed;
      }
      else if (!lowest)
      {
        values[j] = low;
        lowest    = true;
      }
    }
    out.emplace_back(config, std::move(values));
  }

  // Lower-indexed agents above (up to m - 1) or at zero, higher ones tied.
  {
    Values      values(config.n, report);
    std::size_t placed = 0;
    for (AgentIndex j = 0; j < i; ++j)
    {
      values[j] = placed + 1 < config.m ? above : Rational{0};
      placed += placed + 1 < config.m ? 1 : 0;
    }
    for (AgentIndex j = i + 1; j < config.n && placed + 1 < config.m; ++j)
    {
      values[j] = above;
      ++placed;
    }
    out.emplace_back(config, std::move(values));
  }
  return out;
}

UtilityBounds Constant(Rational const &utility, Profile const &anywhere)
{
  return {utility, utility, anywhere, anywhere};
}

// Outcomes are exactly {win at a fixed price, lose for nothing}, both reachable.
UtilityBounds WinOrLose(Rational const &win_utility, Profile const &win, Profile const &lose)
{
  UtilityBounds b;
  bool const    winning_is_better = win_utility.is_positive();
  b.sup                           = winning_is_better ? win_utility : Rational{0};
  b.sup_realizer                  = winning_is_better ? win : lose;
  b.inf                           = winning_is_better ? Rational{0} : win_utility;
  b.inf_realizer                  = winning_is_better ? lose : win;
  return b;
}

// Winning prices fill [0, report), possibly including the report itself, and
// losing is reachable. The sup is attained at price zero. The inf v - report
// is attained only if some candidate realises it, otherwise approached.
UtilityBounds PriceInterval(Mechanism const &f, MarketConfig const &config, AgentIndex i,
                            Rational const &report, Rational const &value)
{
  UtilityBounds b;
  b.sup          = value;
  b.sup_realizer = Uniform(config, i, report, 0);
  auto const low = value - report;
  if (!low.is_negative())
  {
    b.inf          = 0;
    b.inf_realizer = Losing(config, i, report);
    return b;
  }
  b.inf = low;
  for (auto &candidate : PricedAtReport(config, i, report))
  {
    if (Utility(f(candidate)[i], value) == low)
    {
      b.inf_realizer = std::move(candidate);
      break;
    }
  }
  return b;
}

}  // namespace

std::optional<UtilityBounds> ManipulationBounds(Mechanism const &f, MarketConfig const &config,
                                                AgentIndex i, Rational const &report,
                                                Rational const &true_value)
{
  if (i >= config.n || report.is_negative() || true_value.is_negative())
  {
    throw UsageError("manipulation bounds need a valid agent and nonnegative values");
  }
  auto const lose = Losing(config, i, report);

  // A zero report never wins under any built-in rule: canonical selection
  // leaves zero-value agents out and zero is never strictly above a price.
  auto const never_wins = [&] { return Constant(0, lose); };

  switch (f.family())
  {
  case Family::kNoTrade:
    return Constant(-f.fee(), lose);

  case Family::kPayAsBid:
    if (report.is_zero())
    {
      return never_wins();
    }
    return WinOrLose(true_value - report, Uniform(config, i, report, 0), lose);

  case Family::kVickrey:
  case Family::kEfficientVickrey:
    if (report.is_zero())
    {
      return never_wins();
    }
    return PriceInterval(f, config, i, report, true_value);

  case Family::kEvPab:
  {
    auto const &assignment = *f.assignment();
    if (assignment.kind() == TildeAssignment::Kind::kRuleTable)
    {
      return std::nullopt;
    }
    if (report.is_zero())
    {
      return never_wins();
    }
    if (!assignment.EvAtZeroPrice())
    {
      // The tie class never uses efficient Vickrey: pure pay-as-bid.
      return WinOrLose(true_value - report, Uniform(config, i, report, 0), lose);
    }
    return PriceInterval(f, config, i, report, true_value);
  }

  case Family::kTauVickreyNoTrade:
  {
    auto const &wsf = *f.wsf();
    using Kind      = WinnerSelectionFunction::Kind;
    switch (wsf.kind())
    {
    case Kind::kEmpty:
      return Constant(0, lose);
    case Kind::kStrictWinners:
    case Kind::kEfficientWinners:
      if (report.is_zero())
      {
        return never_wins();
      }
      return PriceInterval(f, config, i, report, true_value);
    case Kind::kDictatorialThreshold:
    {
      auto const &theta = wsf.threshold();
      if (wsf.agent() != i || theta.is_negative() || report <= theta)
      {
        return Constant(0, lose);
      }
      return WinOrLose(true_value - theta, Uniform(config, i, report, theta), lose);
    }
    case Kind::kRuleTable:
      return std::nullopt;
    }
    return std::nullopt;
  }

  case Family::kCustom:
    return std::nullopt;
  }
  return std::nullopt;
}

UtilityBounds GridManipulationBounds(Mechanism const &f, GridSpace const &grid, AgentIndex i,
                                     Rational const &report, Rational const &true_value)
{
  auto const         &config = grid.config();
  std::vector<Values> sets;
  sets.reserve(config.n);
  for (AgentIndex j = 0; j < config.n; ++j)
  {
    sets.push_back(j == i ? Values{report} : grid.values(j));
  }
  GridSpace const opponents(config, std::move(sets));

  UtilityBounds out;
  bool          first = true;
  for (std::uint64_t k = 0; k < opponents.size(); ++k)
  {
    auto const v = opponents.At(k);
    auto const u = Utility(f(v)[i], true_value);
    if (first || u > out.sup)
    {
      out.sup          = u;
      out.sup_realizer = v;
    }
    if (first || u < out.inf)
    {
      out.inf          = u;
      out.inf_realizer = v;
    }
    first = false;
  }
  return out;
}

}  // namespace mechlab
