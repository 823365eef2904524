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

#include <algorithm>

namespace mechlab {
namespace {

bool Contains(WinnerSet const &set, AgentIndex i)
{
  return std::binary_search(set.begin(), set.end(), i);
}

std::string JoinAgents(WinnerSet const &set)
{
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k)
  {
    out += (k ? "," : "") + std::to_string(set[k] + 1);
  }
  return out + "}";
}

// Shape checks on a rule-table entry that make it a usable profile/set pair.
void RequireWellFormed(Values const &key, WinnerSet const &winners, MarketConfig const &config)
{
  Profile const profile(config, key);  // throws on length / sign
  if (!std::is_sorted(winners.begin(), winners.end()) ||
      std::adjacent_find(winners.begin(), winners.end()) != winners.end())
  {
    throw UsageError("rule-table winner set must be ascending without repeats at " +
                     profile.ToString());
  }
  if (!winners.empty() && winners.back() >= config.n)
  {
    throw UsageError("rule-table winner index out of range at " + profile.ToString());
  }
}

}  // namespace

WinnerSelectionFunction WinnerSelectionFunction::Empty()
{
  return {};
}

WinnerSelectionFunction WinnerSelectionFunction::StrictWinners()
{
  WinnerSelectionFunction w;
  w.kind_ = Kind::kStrictWinners;
  return w;
}

WinnerSelectionFunction WinnerSelectionFunction::DictatorialThreshold(AgentIndex agent,
                                                                      Rational   threshold)
{
  WinnerSelectionFunction w;
  w.kind_      = Kind::kDictatorialThreshold;
  w.agent_     = agent;
  w.threshold_ = threshold;
  return w;
}

WinnerSelectionFunction WinnerSelectionFunction::EfficientWinners()
{
  WinnerSelectionFunction w;
  w.kind_ = Kind::kEfficientWinners;
  return w;
}

WinnerSelectionFunction WinnerSelectionFunction::RuleTable(MarketConfig    config,
                                                           WinnerRuleTable table)
{
  for (auto const &[key, winners] : table)
  {
    RequireWellFormed(key, winners, config);
  }
  WinnerSelectionFunction w;
  w.kind_         = Kind::kRuleTable;
  w.table_config_ = config;
  w.table_ = std::make_shared<WinnerRuleTable const>(std::move(table));
  return w;
}

WinnerSet WinnerSelectionFunction::Select(Profile const &profile) const
{
  switch (kind_)
  {
  case Kind::kEmpty:
    return {};
  case Kind::kStrictWinners:
  {
    if (!InTildeV(profile))
    {
      return {};
    }
    auto const price = KthHighest(profile, profile.config().m + 1);
    WinnerSet  out;
    for (AgentIndex i = 0; i < profile.size(); ++i)
    {
      if (profile[i] > price)
      {
        out.push_back(i);
      }
    }
    return out;
  }
  case Kind::kDictatorialThreshold:
  {
    if (agent_ >= profile.size())
    {
      throw UsageError("dictatorial agent " + std::to_string(agent_ + 1) + " outside market");
    }
    if (profile[agent_] <= threshold_)
    {
      return {};
    }
    for (AgentIndex j = 0; j < profile.size(); ++j)
    {
      if (j != agent_ && profile[j] != threshold_)
      {
        return {};
      }
    }
    return {agent_};
  }
  case Kind::kEfficientWinners:
    return InTildeV(profile) ? CanonicalEfficientVickrey(profile).Winners() : WinnerSet{};
  case Kind::kRuleTable:
  {
    auto const it = table_->find(profile.values());
    return it == table_->end() ? WinnerSet{} : it->second;
  }
  }
  return {};
}

std::string WinnerSelectionFunction::Describe() const
{
  switch (kind_)
  {
  case Kind::kEmpty:
    return "empty";
  case Kind::kStrictWinners:
    return "strict_winners";
  case Kind::kDictatorialThreshold:
    return "dictatorial_threshold(" + std::to_string(agent_ + 1) + "," + threshold_.ToString() +
           ")";
  case Kind::kEfficientWinners:
    return "efficient_winners";
  case Kind::kRuleTable:
    return "rule_table[" + std::to_string(table_->size()) + "]";
  }
  return "?";
}

std::optional<int> FirstViolatedCondition(WinnerSet const &selected, Profile const &profile)
{
  if (selected.empty())
  {
    return std::nullopt;
  }
  if (!InTildeV(profile))
  {
    return 1;
  }
  auto const price = KthHighest(profile, profile.config().m + 1);
  for (auto const i : selected)
  {
    if (i >= profile.size() || profile[i] < price)
    {
      return 2;
    }
  }
  for (AgentIndex i = 0; i < profile.size(); ++i)
  {
    if (profile[i] > price && !Contains(selected, i))
    {
      return 3;
    }
  }
  if (selected.size() > profile.config().m)
  {
    return 4;
  }
  return std::nullopt;
}

ValidityReport ValidateWinnerSelection(WinnerSelectionFunction const &wsf, GridSpace const &grid)
{
  using Kind = WinnerSelectionFunction::Kind;
  ValidityReport report;
  auto const    &config = grid.config();
  switch (wsf.kind())
  {
  case Kind::kEmpty:
    report.detail = "selects nobody; conditions vacuous";
    return report;
  case Kind::kStrictWinners:
    report.detail = "selects exactly the strict winners on the tie class";
    return report;
  case Kind::kEfficientWinners:
    report.detail = "efficient winners on the tie class contain every strict winner";
    return report;
  case Kind::kDictatorialThreshold:
    if (wsf.agent() >= config.n)
    {
      report.verdict = Verdict::kFail;
      report.detail  = "dictatorial agent outside market";
      return report;
    }
    report.detail = "single strict winner at price equal to the threshold";
    return report;
  case Kind::kRuleTable:
    break;
  }

  report.verdict = Verdict::kPassExhaustive;
  for (auto const &[key, winners] : wsf.table())
  {
    Profile const profile(config, key);
    ++report.profiles_checked;
    if (auto const condition = FirstViolatedCondition(winners, profile))
    {
      report.verdict   = Verdict::kFail;
      report.condition = condition;
      report.profile   = profile;
      report.detail    = "condition (" + std::to_string(*condition) + ") fails: selects " +
                      JoinAgents(winners) + " at " + profile.ToString();
      return report;
    }
  }
  // Off-table grid profiles select nobody, which satisfies every condition;
  // they are still counted so the report reflects the scanned space.
  report.profiles_checked += grid.size();
  report.detail = "all table entries and grid profiles satisfy (i)-(iv)";
  return report;
}

ValidityReport CheckUncompromising(WinnerSelectionFunction const &wsf, GridSpace const &grid)
{
  using Kind = WinnerSelectionFunction::Kind;
  ValidityReport report;
  if (wsf.kind() != Kind::kRuleTable)
  {
    report.detail = "closed-form family is uncompromising";
    return report;
  }
  report.verdict     = Verdict::kPassExhaustive;
  auto const &config = grid.config();
  for (auto const &[key, winners] : wsf.table())
  {
    Profile const profile(config, key);
    auto const    price = KthHighest(profile, config.m + 1);
    ++report.profiles_checked;
    for (auto const i : winners)
    {
      for (auto const &raised : grid.values(i))
      {
        if (raised <= price)
        {
          continue;
        }
        auto const moved = profile.With(i, raised);
        if (!Contains(wsf.Select(moved), i))
        {
          report.verdict   = Verdict::kFail;
          report.profile   = profile;
          report.agent     = i;
          report.misreport = raised;
          report.detail    = "agent " + std::to_string(i + 1) + " selected at " +
                          profile.ToString() + " but not after raising to " + raised.ToString();
          return report;
        }
      }
    }
  }
  report.detail = "every selected agent survives every grid raise above the price";
  return report;
}

TildeAssignment TildeAssignment::AlwaysEv()
{
  return {};
}

TildeAssignment TildeAssignment::EvIffPriceZero()
{
  TildeAssignment a;
  a.kind_ = Kind::kEvIffPriceZero;
  return a;
}

TildeAssignment TildeAssignment::Threshold(Rational cutoff)
{
  TildeAssignment a;
  a.kind_   = Kind::kThreshold;
  a.cutoff_ = cutoff;
  return a;
}

TildeAssignment TildeAssignment::RuleTable(BranchRuleTable table)
{
  TildeAssignment a;
  a.kind_  = Kind::kRuleTable;
  a.table_ = std::make_shared<BranchRuleTable const>(std::move(table));
  return a;
}

TieBranch TildeAssignment::Classify(Profile const &profile) const
{
  switch (kind_)
  {
  case Kind::kAlwaysEv:
    return TieBranch::kEfficientVickrey;
  case Kind::kEvIffPriceZero:
    return KthHighest(profile, profile.config().m + 1).is_zero() ? TieBranch::kEfficientVickrey
                                                                  : TieBranch::kPayAsBid;
  case Kind::kThreshold:
    return KthHighest(profile, profile.config().m + 1) <= cutoff_ ? TieBranch::kEfficientVickrey
                                                                   : TieBranch::kPayAsBid;
  case Kind::kRuleTable:
  {
    auto const it = table_->find(profile.values());
    return it == table_->end() ? TieBranch::kPayAsBid : it->second;
  }
  }
  return TieBranch::kPayAsBid;
}

bool TildeAssignment::EvAtZeroPrice() const
{
  switch (kind_)
  {
  case Kind::kAlwaysEv:
  case Kind::kEvIffPriceZero:
    return true;
  case Kind::kThreshold:
    return !cutoff_.is_negative();
  case Kind::kRuleTable:
    return false;
  }
  return false;
}

std::string TildeAssignment::Describe() const
{
  switch (kind_)
  {
  case Kind::kAlwaysEv:
    return "always_ev";
  case Kind::kEvIffPriceZero:
    return "ev_iff_price_zero";
  case Kind::kThreshold:
    return "threshold(" + cutoff_.ToString() + ")";
  case Kind::kRuleTable:
    return "rule_table[" + std::to_string(table_->size()) + "]";
  }
  return "?";
}

ValidityReport CheckEfficiencyCharacterization(TildeAssignment const &assignment,
                                               GridSpace const       &grid)
{
  ValidityReport report;
  report.condition   = 3;
  auto const &config = grid.config();

  if (assignment.kind() != TildeAssignment::Kind::kRuleTable)
  {
    if (assignment.EvAtZeroPrice())
    {
      report.condition.reset();
      report.detail = "certified: opponents all zero give a tie-class profile at price 0 "
                      "classified efficient Vickrey";
      return report;
    }
    // Negative cutoff: no tie-class profile is ever efficient Vickrey.
    Rational value = 1;
    for (auto const &v : grid.values(0))
    {
      if (v.is_positive())
      {
        value = v;
        break;
      }
    }
    Values witness(config.n, Rational{0});
    witness[0]       = value;
    report.verdict   = Verdict::kFail;
    report.agent     = 0;
    report.profile   = Profile(config, witness);
    report.detail    = "no tie-class profile is classified efficient Vickrey";
    return report;
  }

  // Grid evidence only: collect (agent, value) pairs that have a witness.
  std::vector<std::vector<bool>> covered(config.n);
  for (AgentIndex i = 0; i < config.n; ++i)
  {
    covered[i].assign(grid.values(i).size(), false);
  }
  for (std::uint64_t k = 0; k < grid.size(); ++k)
  {
    auto const profile = grid.At(k);
    ++report.profiles_checked;
    if (!InTildeV(profile) || assignment.Classify(profile) != TieBranch::kEfficientVickrey)
    {
      continue;
    }
    for (AgentIndex i = 0; i < config.n; ++i)
    {
      bool zero_min = false;
      for (AgentIndex j = 0; j < config.n; ++j)
      {
        zero_min = zero_min || (j != i && profile[j].is_zero());
      }
      if (zero_min)
      {
        auto const &set = grid.values(i);
        auto const  pos = std::lower_bound(set.begin(), set.end(), profile[i]) - set.begin();
        covered[i][static_cast<std::size_t>(pos)] = true;
      }
    }
  }
  for (AgentIndex i = 0; i < config.n; ++i)
  {
    auto const &set = grid.values(i);
    for (std::size_t k = 0; k < set.size(); ++k)
    {
      if (set[k].is_positive() && !covered[i][k])
      {
        Values witness(config.n, Rational{0});
        witness[i]       = set[k];
        report.verdict   = Verdict::kFail;
        report.agent     = i;
        report.profile   = Profile(config, witness);
        report.misreport = set[k];
        report.detail    = "no grid opponents with zero minimum give an efficient Vickrey "
                        "tie-class profile for agent " +
                        std::to_string(i + 1) + " at value " + set[k].ToString();
        return report;
      }
    }
  }
  report.verdict = Verdict::kNotCertified;
  report.condition.reset();
  report.detail = "grid witnesses exist for every positive grid value; a finite table cannot "
                  "be certified over all valuations";
  return report;
}

}  // namespace mechlab
