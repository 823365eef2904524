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

#include <algorithm>
#include <functional>
#include <ostream>

namespace mechlab {
namespace {

Values SortedDescending(Values values)
{
  std::sort(values.begin(), values.end(), std::greater<>{});
  return values;
}

}  // namespace

MarketConfig::MarketConfig(std::size_t agents, std::size_t objects)
  : n(agents)
  , m(objects)
{
  if (objects < 1 || agents <= objects)
  {
    throw UsageError("market requires n > m >= 1 (got n=" + std::to_string(agents) +
                     ", m=" + std::to_string(objects) + ")");
  }
}

Rational Utility(Bundle const &bundle, Valuation const &value)
{
  return (bundle.object ? value : Rational{0}) - bundle.transfer;
}

std::string Bundle::ToString() const
{
  return "(" + std::string(object ? "1" : "0") + "," + transfer.ToString() + ")";
}

Profile::Profile(MarketConfig config, Values values)
  : config_(config)
  , values_(std::move(values))
{
  if (values_.size() != config_.n)
  {
    throw UsageError("profile has " + std::to_string(values_.size()) + " valuations, market has " +
                     std::to_string(config_.n) + " agents");
  }
  for (auto const &v : values_)
  {
    if (v.is_negative())
    {
      throw UsageError("valuations must be nonnegative (got " + v.ToString() + ")");
    }
  }
}

Profile Profile::With(AgentIndex i, Valuation value) const
{
  Values values = values_;
  values.at(i)  = std::move(value);
  return Profile(config_, std::move(values));
}

Profile Profile::Swapped(AgentIndex i, AgentIndex j) const
{
  Values values = values_;
  std::swap(values.at(i), values.at(j));
  return Profile(config_, std::move(values));
}

std::string Profile::ToString() const
{
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i)
  {
    if (i != 0)
    {
      out += ",";
    }
    out += values_[i].ToString();
  }
  return out + ")";
}

Valuation KthHighest(Profile const &profile, std::size_t k)
{
  if (k < 1 || k > profile.size())
  {
    throw UsageError("rank " + std::to_string(k) + " out of range 1.." +
                     std::to_string(profile.size()));
  }
  Values sorted = profile.values();
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   sorted.end(), std::greater<>{});
  return sorted[k - 1];
}

bool InTildeV(Profile const &profile)
{
  auto const  sorted = SortedDescending(profile.values());
  auto const  m      = profile.config().m;
  auto const &pivot  = sorted[m];
  return std::all_of(sorted.begin() + static_cast<std::ptrdiff_t>(m), sorted.end(),
                     [&](Rational const &v) { return v == pivot; });
}

Rational MaxSurplus(Profile const &profile)
{
  auto const sorted = SortedDescending(profile.values());
  Rational   total  = 0;
  for (std::size_t k = 0; k < profile.config().m; ++k)
  {
    total += sorted[k];
  }
  return total;
}

std::size_t Allocation::ObjectCount() const
{
  return static_cast<std::size_t>(
      std::count_if(bundles.begin(), bundles.end(), [](Bundle const &b) { return b.object; }));
}

std::vector<AgentIndex> Allocation::Winners() const
{
  std::vector<AgentIndex> winners;
  for (AgentIndex i = 0; i < bundles.size(); ++i)
  {
    if (bundles[i].object)
    {
      winners.push_back(i);
    }
  }
  return winners;
}

Rational Allocation::Surplus(Profile const &profile) const
{
  Rational total = 0;
  for (AgentIndex i = 0; i < bundles.size(); ++i)
  {
    if (bundles[i].object)
    {
      total += profile[i];
    }
  }
  return total;
}

std::vector<Rational> Allocation::Utilities(Profile const &profile) const
{
  std::vector<Rational> out;
  out.reserve(bundles.size());
  for (AgentIndex i = 0; i < bundles.size(); ++i)
  {
    out.push_back(Utility(bundles[i], profile[i]));
  }
  return out;
}

std::string Allocation::ToString() const
{
  std::string out = "[";
  for (std::size_t i = 0; i < bundles.size(); ++i)
  {
    if (i != 0)
    {
      out += ",";
    }
    out += bundles[i].ToString();
  }
  return out + "]";
}

bool IsFeasible(Allocation const &allocation, MarketConfig const &config)
{
  return allocation.size() == config.n && allocation.ObjectCount() <= config.m;
}

std::ostream &operator<<(std::ostream &os, Bundle const &bundle)
{
  return os << bundle.ToString();
}

std::ostream &operator<<(std::ostream &os, Profile const &profile)
{
  return os << profile.ToString();
}

std::ostream &operator<<(std::ostream &os, Allocation const &allocation)
{
  return os << allocation.ToString();
}

}  // namespace mechlab
