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

#pragma once

#include "mechlab/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace mechlab {

/// Malformed input to an operation: out-of-range ranks, inconsistent sizes,
/// unknown names. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

using AgentIndex = std::size_t;  // 0-based internally, 1-based in reports
using Valuation  = Rational;
using Values     = std::vector<Valuation>;

/// n agents and m identical objects with n > m >= 1.
struct MarketConfig
{
  std::size_t n = 0;
  std::size_t m = 0;

  MarketConfig() = default;
  MarketConfig(std::size_t agents, std::size_t objects);

  friend bool operator==(MarketConfig const &, MarketConfig const &) = default;
};

/// Consumption bundle (x, t): object indicator and transfer paid by the agent.
struct Bundle
{
  bool     object   = false;
  Rational transfer = 0;

  static Bundle Zero()
  {
    return {};
  }

  bool is_zero() const
  {
    return !object && transfer.is_zero();
  }

  std::string ToString() const;

  friend bool operator==(Bundle const &, Bundle const &) = default;
};

/// Quasi-linear utility v*x - t.
Rational Utility(Bundle const &bundle, Valuation const &value);

class Profile
{
public:
  Profile(MarketConfig config, Values values);

  MarketConfig const &config() const
  {
    return config_;
  }
  Values const &values() const
  {
    return values_;
  }
  std::size_t size() const
  {
    return values_.size();
  }
  Valuation const &operator[](AgentIndex i) const
  {
    return values_[i];
  }

  /// Copy of this profile with agent i reporting `value` instead.
  Profile With(AgentIndex i, Valuation value) const;

  /// Copy with the reports of agents i and j exchanged.
  Profile Swapped(AgentIndex i, AgentIndex j) const;

  std::string ToString() const;

  friend bool operator==(Profile const &, Profile const &) = default;

private:
  MarketConfig config_;
  Values       values_;
};

/// k-th highest valuation, k in 1..n.
Valuation KthHighest(Profile const &profile, std::size_t k);

/// Membership in the tie class: ranks m+1..n carry equal valuations.
bool InTildeV(Profile const &profile);

/// Sum of the m largest valuations; the optimum of sum v_i x_i over X.
Rational MaxSurplus(Profile const &profile);

struct Allocation
{
  std::vector<Bundle> bundles;

  static Allocation Zero(std::size_t n)
  {
    return Allocation{std::vector<Bundle>(n)};
  }

  std::size_t size() const
  {
    return bundles.size();
  }
  Bundle const &operator[](AgentIndex i) const
  {
    return bundles[i];
  }

  std::size_t ObjectCount() const;

  /// Agents holding an object, ascending.
  std::vector<AgentIndex> Winners() const;

  /// sum v_i x_i under the given profile.
  Rational Surplus(Profile const &profile) const;

  std::vector<Rational> Utilities(Profile const &profile) const;

  std::string ToString() const;

  friend bool operator==(Allocation const &, Allocation const &) = default;
};

bool IsFeasible(Allocation const &allocation, MarketConfig const &config);

std::ostream &operator<<(std::ostream &os, Bundle const &bundle);
std::ostream &operator<<(std::ostream &os, Profile const &profile);
std::ostream &operator<<(std::ostream &os, Allocation const &allocation);

}  // namespace mechlab
