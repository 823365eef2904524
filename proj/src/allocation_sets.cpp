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

struct Split
{
  WinnerSet   mandatory;
  WinnerSet   tied;
  std::size_t min_extra = 0;
  std::size_t max_extra = 0;
};

// Agents strictly above the (m+1)-th valuation always win; tied agents fill
// any subset of the remaining slots.
Split VickreySplit(Profile const &profile)
{
  auto const price = KthHighest(profile, profile.config().m + 1);
  Split      split;
  for (AgentIndex i = 0; i < profile.size(); ++i)
  {
    if (profile[i] > price)
    {
      split.mandatory.push_back(i);
    }
    else if (profile[i] == price)
    {
      split.tied.push_back(i);
    }
  }
  split.max_extra = std::min(profile.config().m - split.mandatory.size(), split.tied.size());
  return split;
}

// Argmax of sum v_i x_i: agents above the m-th valuation q always win; the
// remaining slots go to agents tied at q, exactly filled when q > 0 and
// optionally when q == 0.
Split EfficientSplit(Profile const &profile)
{
  auto const cutoff = KthHighest(profile, profile.config().m);
  Split      split;
  for (AgentIndex i = 0; i < profile.size(); ++i)
  {
    if (profile[i] > cutoff)
    {
      split.mandatory.push_back(i);
    }
    else if (profile[i] == cutoff)
    {
      split.tied.push_back(i);
    }
  }
  auto const free_slots = profile.config().m - split.mandatory.size();
  split.max_extra       = std::min(free_slots, split.tied.size());
  split.min_extra       = cutoff.is_positive() ? split.max_extra : 0;
  return split;
}

template <typename Visit>
void ForEachCompletion(Split const &split, Visit const &visit)
{
  WinnerSet chosen;
  // Recursive subset walk over `tied`, bounded by max_extra.
  auto walk = [&](auto &&self, std::size_t from) -> void {
    if (chosen.size() >= split.min_extra)
    {
      WinnerSet winners = split.mandatory;
      winners.insert(winners.end(), chosen.begin(), chosen.end());
      std::sort(winners.begin(), winners.end());
      visit(winners);
    }
    if (chosen.size() == split.max_extra)
    {
      return;
    }
    for (std::size_t k = from; k < split.tied.size(); ++k)
    {
      chosen.push_back(split.tied[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 0);
}

template <typename PriceOf>
Allocation Build(Profile const &profile, WinnerSet const &winners, PriceOf const &price_of)
{
  auto allocation = Allocation::Zero(profile.size());
  for (auto const i : winners)
  {
    allocation.bundles[i] = Bundle{true, price_of(i)};
  }
  return allocation;
}

template <typename PriceOf>
std::vector<Allocation> Expand(Profile const &profile, Split const &split, PriceOf const &price_of)
{
  std::vector<Allocation> out;
  ForEachCompletion(split, [&](WinnerSet const &winners) {
    out.push_back(Build(profile, winners, price_of));
  });
  std::sort(out.begin(), out.end(), [](Allocation const &a, Allocation const &b) {
    auto const wa = a.Winners();
    auto const wb = b.Winners();
    return CanonicalLess(wa, wb);
  });
  return out;
}

WinnerSet CanonicalWinners(Split const &split)
{
  WinnerSet winners = split.mandatory;
  winners.insert(winners.end(), split.tied.begin(),
                 split.tied.begin() + static_cast<std::ptrdiff_t>(split.min_extra));
  std::sort(winners.begin(), winners.end());
  return winners;
}

}  // namespace

bool CanonicalLess(std::span<AgentIndex const> lhs, std::span<AgentIndex const> rhs)
{
  while (!lhs.empty() && !rhs.empty())
  {
    if (lhs.back() != rhs.back())
    {
      return lhs.back() < rhs.back();
    }
    lhs = lhs.first(lhs.size() - 1);
    rhs = rhs.first(rhs.size() - 1);
  }
  return lhs.empty() && !rhs.empty();
}

std::vector<Allocation> VickreySet(Profile const &profile)
{
  auto const price = KthHighest(profile, profile.config().m + 1);
  return Expand(profile, VickreySplit(profile), [&](AgentIndex) { return price; });
}

std::vector<Allocation> EfficientVickreySet(Profile const &profile)
{
  auto const price = KthHighest(profile, profile.config().m + 1);
  return Expand(profile, EfficientSplit(profile), [&](AgentIndex) { return price; });
}

std::vector<Allocation> PayAsBidSet(Profile const &profile)
{
  return Expand(profile, EfficientSplit(profile), [&](AgentIndex i) { return profile[i]; });
}

Allocation NoTrade(Profile const &profile, Rational const &fee)
{
  return Allocation{std::vector<Bundle>(profile.size(), Bundle{false, fee})};
}

Allocation SelectCanonical(std::span<Allocation const> allocations)
{
  if (allocations.empty())
  {
    throw UsageError("canonical selection from an empty allocation set");
  }
  auto const *best         = &allocations.front();
  auto        best_winners = best->Winners();
  for (auto const &candidate : allocations.subspan(1))
  {
    auto winners = candidate.Winners();
    if (CanonicalLess(winners, best_winners))
    {
      best         = &candidate;
      best_winners = std::move(winners);
    }
  }
  return *best;
}

Allocation CanonicalVickrey(Profile const &profile)
{
  auto const price = KthHighest(profile, profile.config().m + 1);
  return Build(profile, VickreySplit(profile).mandatory, [&](AgentIndex) { return price; });
}

Allocation CanonicalEfficientVickrey(Profile const &profile)
{
  auto const price = KthHighest(profile, profile.config().m + 1);
  return Build(profile, CanonicalWinners(EfficientSplit(profile)),
               [&](AgentIndex) { return price; });
}

Allocation CanonicalPayAsBid(Profile const &profile)
{
  return Build(profile, CanonicalWinners(EfficientSplit(profile)),
               [&](AgentIndex i) { return profile[i]; });
}

Allocation TauVickreyAllocation(Profile const &profile, WinnerSet const &selected)
{
  if (selected.empty())
  {
    return Allocation::Zero(profile.size());
  }
  auto const price = KthHighest(profile, profile.config().m + 1);
  return Build(profile, selected, [&](AgentIndex) { return price; });
}

}  // namespace mechlab
