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

#include <stdexcept>

namespace mechlab {

std::string_view ToString(Family family)
{
  switch (family)
  {
  case Family::kVickrey:
    return "VICKREY";
  case Family::kEfficientVickrey:
    return "EFFICIENT_VICKREY";
  case Family::kPayAsBid:
    return "PAY_AS_BID";
  case Family::kNoTrade:
    return "NO_TRADE";
  case Family::kTauVickreyNoTrade:
    return "TAU_VICKREY_NO_TRADE";
  case Family::kEvPab:
    return "EV_PAB";
  case Family::kCustom:
    return "CUSTOM";
  }
  return "?";
}

Mechanism::Mechanism(std::string name, Family family, Rule rule)
  : name_(std::move(name))
  , family_(family)
  , rule_(std::move(rule))
{}

Mechanism Mechanism::Vickrey()
{
  return {"vickrey", Family::kVickrey, CanonicalVickrey};
}

Mechanism Mechanism::EfficientVickrey()
{
  return {"efficient_vickrey", Family::kEfficientVickrey, CanonicalEfficientVickrey};
}

Mechanism Mechanism::PayAsBid()
{
  return {"pay_as_bid", Family::kPayAsBid, CanonicalPayAsBid};
}

Mechanism Mechanism::NoTrade(Rational fee)
{
  std::string name = "no_trade";
  if (fee.is_positive())
  {
    name = "no_trade_fee(" + fee.ToString() + ")";
  }
  else if (fee.is_negative())
  {
    name = "no_trade_subsidy(" + fee.ToString() + ")";
  }
  Mechanism mechanism(std::move(name), Family::kNoTrade,
                      [fee](Profile const &profile) { return mechlab::NoTrade(profile, fee); });
  mechanism.fee_ = fee;
  return mechanism;
}

Mechanism Mechanism::TauVickreyNoTrade(WinnerSelectionFunction wsf)
{
  if (wsf.kind() == WinnerSelectionFunction::Kind::kRuleTable)
  {
    // Table entries are the only profiles with a nonempty selection, so
    // checking them decides validity everywhere.
    for (auto const &[key, winners] : wsf.table())
    {
      Profile const profile(wsf.table_config(), key);
      if (auto const condition = FirstViolatedCondition(winners, profile))
      {
        throw UsageError("invalid winner selection: condition (" + std::to_string(*condition) +
                         ") fails at " + profile.ToString());
      }
    }
  }
  auto mechanism = Mechanism("tau_vnt(" + wsf.Describe() + ")", Family::kTauVickreyNoTrade,
                             [wsf](Profile const &profile) {
                               return TauVickreyAllocation(profile, wsf.Select(profile));
                             });
  mechanism.wsf_ = std::move(wsf);
  return mechanism;
}

Mechanism Mechanism::EvPab(TildeAssignment assignment)
{
  auto mechanism = Mechanism(
      "ev_pab(" + assignment.Describe() + ")", Family::kEvPab, [assignment](Profile const &profile) {
        if (InTildeV(profile) && assignment.Classify(profile) == TieBranch::kEfficientVickrey)
        {
          return CanonicalEfficientVickrey(profile);
        }
        return CanonicalPayAsBid(profile);
      });
  mechanism.assignment_ = std::move(assignment);
  return mechanism;
}

Mechanism Mechanism::Custom(std::string name, Rule rule)
{
  return {std::move(name), Family::kCustom, std::move(rule)};
}

Allocation Mechanism::operator()(Profile const &profile) const
{
  auto allocation = rule_(profile);
  if (!IsFeasible(allocation, profile.config()))
  {
    throw std::logic_error("mechanism " + name_ + " produced an infeasible allocation at " +
                           profile.ToString());
  }
  return allocation;
}

}  // namespace mechlab
