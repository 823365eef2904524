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
#include <deque>
#include <random>
#include <set>

namespace mechlab {
namespace {

// Engine output is fixed by the standard; the distributions are not, so
// draws reduce the raw output directly.
class Draws
{
public:
  explicit Draws(std::uint64_t seed)
    : engine_(seed)
  {}

  std::size_t Below(std::size_t bound)
  {
    return static_cast<std::size_t>(engine_() % bound);
  }

  bool Coin()
  {
    return (engine_() & 1U) != 0;
  }

private:
  std::mt19937_64 engine_;
};

std::vector<Profile> TildeProfiles(GridSpace const &grid)
{
  std::vector<Profile> out;
  for (std::uint64_t k = 0; k < grid.size(); ++k)
  {
    auto profile = grid.At(k);
    if (InTildeV(profile))
    {
      out.push_back(std::move(profile));
    }
  }
  return out;
}

// Strict winners plus a random subset of the agents tied at the price,
// capped at m and never empty when someone is eligible.
WinnerSet RandomSelection(Profile const &v, Draws &draws)
{
  auto const m     = v.config().m;
  auto const price = KthHighest(v, m + 1);
  WinnerSet  selected;
  WinnerSet  tied;
  for (AgentIndex i = 0; i < v.size(); ++i)
  {
    if (v[i] > price)
    {
      selected.push_back(i);
    }
    else if (v[i] == price)
    {
      tied.push_back(i);
    }
  }
  for (auto const i : tied)
  {
    if (selected.size() < m && draws.Coin())
    {
      selected.push_back(i);
    }
  }
  if (selected.empty())
  {
    selected.push_back(tied[draws.Below(tied.size())]);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

// Adds `required` to the entry at `key` and queues it when it grew. Fails
// when the merged set no longer fits in m objects.
bool Merge(WinnerRuleTable &table, std::deque<Values> &pending, Values const &key,
           WinnerSet const &required, std::size_t m)
{
  auto &entry = table[key];
  WinnerSet merged;
  std::set_union(entry.begin(), entry.end(), required.begin(), required.end(),
                 std::back_inserter(merged));
  if (merged.size() > m)
  {
    return false;
  }
  if (merged != entry)
  {
    entry = std::move(merged);
    pending.push_back(key);
  }
  return true;
}

// Closes the table under grid raises of selected agents above the price.
bool Close(WinnerRuleTable &table, GridSpace const &grid)
{
  auto const        &config = grid.config();
  std::deque<Values> pending;
  for (auto const &[key, winners] : table)
  {
    pending.push_back(key);
  }
  while (!pending.empty())
  {
    auto const key = pending.front();
    pending.pop_front();
    Profile const v(config, key);
    auto const    price   = KthHighest(v, config.m + 1);
    auto const    winners = table.at(key);
    for (auto const i : winners)
    {
      for (auto const &raise : grid.values(i))
      {
        if (raise <= price || raise == v[i])
        {
          continue;
        }
        if (!Merge(table, pending, v.With(i, raise).values(), winners, config.m))
        {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

std::vector<WinnerSelectionFunction> RandomUncompromisingTables(GridSpace const &grid,
                                                                std::size_t      count,
                                                                std::uint64_t    seed)
{
  auto const tilde = TildeProfiles(grid);
  if (tilde.empty())
  {
    throw UsageError("grid has no tie-class profiles to build tables from");
  }
  Draws                                draws(seed);
  std::set<WinnerRuleTable>            seen;
  std::vector<WinnerSelectionFunction> out;
  std::size_t const                    max_attempts = 1000 * (count + 1);
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt)
  {
    WinnerRuleTable table;
    auto const      seeds = 1 + draws.Below(3);
    for (std::size_t s = 0; s < seeds; ++s)
    {
      auto const &v = tilde[draws.Below(tilde.size())];
      table[v.values()] = RandomSelection(v, draws);
    }
    if (!Close(table, grid) || seen.count(table) != 0)
    {
      continue;
    }
    auto wsf = WinnerSelectionFunction::RuleTable(grid.config(), table);
    if (!ValidateWinnerSelection(wsf, grid).ok() || !CheckUncompromising(wsf, grid).ok())
    {
      continue;
    }
    seen.insert(table);
    out.push_back(std::move(wsf));
  }
  if (out.size() < count)
  {
    throw UsageError("could only build " + std::to_string(out.size()) + " distinct tables");
  }
  return out;
}

std::vector<TildeAssignment> RandomBranchTables(GridSpace const &grid, std::size_t count,
                                                std::uint64_t seed)
{
  auto const                   tilde = TildeProfiles(grid);
  Draws                        draws(seed);
  std::vector<TildeAssignment> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k)
  {
    BranchRuleTable table;
    for (auto const &v : tilde)
    {
      table[v.values()] = draws.Coin() ? TieBranch::kEfficientVickrey : TieBranch::kPayAsBid;
    }
    out.push_back(TildeAssignment::RuleTable(std::move(table)));
  }
  return out;
}

}  // namespace mechlab
