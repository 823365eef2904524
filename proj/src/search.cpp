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
#include <string>

namespace mechlab {

GridConfig GridConfig::Explicit(MarketConfig market, Values values)
{
  if (values.empty())
  {
    throw UsageError("grid needs at least one value");
  }
  return {market, std::move(values)};
}

GridConfig GridConfig::Range(MarketConfig market, std::int64_t upper, std::int64_t denominator)
{
  if (upper < 0 || denominator < 1)
  {
    throw UsageError("grid range needs upper >= 0 and denominator >= 1");
  }
  Values values;
  for (std::int64_t k = 0; k <= upper * denominator; ++k)
  {
    values.emplace_back(k, denominator);
  }
  return {market, std::move(values)};
}

GridSpace GridConfig::Space() const
{
  return GridSpace::Shared(market, values);
}

ProfileStream::ProfileStream(GridConfig const &grid, std::uint64_t budget, bool tilde_only)
  : space_(grid.Space())
  , tilde_only_(tilde_only)
{
  if (space_.size() > budget)
  {
    throw UsageError("grid has " + std::to_string(space_.size()) + " profiles, over the budget of " +
                     std::to_string(budget) + "; use sampled mode or a coarser grid");
  }
}

std::optional<Profile> ProfileStream::Next()
{
  while (position_ < space_.size())
  {
    auto profile = space_.At(position_++);
    if (!tilde_only_ || InTildeV(profile))
    {
      return profile;
    }
  }
  return std::nullopt;
}

std::vector<Profile> ProfileStream::Collect()
{
  std::vector<Profile> out;
  while (auto profile = Next())
  {
    out.push_back(std::move(*profile));
  }
  return out;
}

ProfileStream EnumerateProfiles(GridConfig const &grid, std::uint64_t budget)
{
  return ProfileStream(grid, budget, false);
}

ProfileStream EnumerateTilde(GridConfig const &grid, std::uint64_t budget)
{
  return ProfileStream(grid, budget, true);
}

namespace {

std::optional<Rational> NextLower(Values const &grid_values, Rational const &value)
{
  auto it = std::lower_bound(grid_values.begin(), grid_values.end(), value);
  if (it == grid_values.begin())
  {
    return std::nullopt;
  }
  return *std::prev(it);
}

}  // namespace

Witness ShrinkWitness(Mechanism const &f, Axiom axiom, Witness const &witness,
                      GridSpace const &grid)
{
  if (axiom == Axiom::kBestCaseCondition)
  {
    throw UsageError("PROP2 witnesses describe a bound, not a shrinkable profile");
  }
  auto current = Reevaluate(f, axiom, witness, &grid);
  if (!current)
  {
    throw UsageError("witness does not replay; nothing to shrink");
  }

  auto const try_lower = [&](auto &&coordinate_of, auto &&with) {
    bool moved = false;
    while (true)
    {
      auto const lower = coordinate_of(*current);
      if (!lower)
      {
        return moved;
      }
      auto candidate = Reevaluate(f, axiom, with(*current, *lower), &grid);
      if (!candidate)
      {
        return moved;
      }
      current = std::move(candidate);
      moved   = true;
    }
  };

  bool moved = true;
  while (moved)
  {
    moved = false;
    for (AgentIndex i = 0; i < current->profile.size(); ++i)
    {
      moved |= try_lower(
          [&](Witness const &w) { return NextLower(grid.values(i), w.profile[i]); },
          [&](Witness w, Rational const &value) {
            w.profile = w.profile.With(i, value);
            return w;
          });
    }
    if (current->misreport && !current->agents.empty())
    {
      auto const agent = current->agents.front();
      moved |= try_lower([&](Witness const &w) { return NextLower(grid.values(agent), *w.misreport); },
                         [&](Witness w, Rational const &value) {
                           w.misreport = value;
                           return w;
                         });
    }
  }
  return *current;
}

std::optional<ObviousManipulationWitness> FindObviousManipulation(Mechanism const &f,
                                                                   GridSpace const &grid)
{
  return CheckNonObviousManipulability(f, ProfileSpace(grid)).manipulation;
}

}  // namespace mechlab
