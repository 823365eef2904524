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

#include "mechlab/model.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mechlab {

/// Finite restriction of the valuation domain: one sorted, deduplicated,
/// nonempty set of nonnegative values per agent. Profiles are indexed in
/// lexicographic order with agent 0 most significant.
class GridSpace
{
public:
  GridSpace(MarketConfig config, std::vector<Values> per_agent);

  /// Same value set for every agent.
  static GridSpace Shared(MarketConfig config, Values values);

  MarketConfig const &config() const
  {
    return config_;
  }
  Values const &values(AgentIndex i) const
  {
    return per_agent_.at(i);
  }
  bool is_shared() const;

  /// Number of profiles; saturates at UINT64_MAX.
  std::uint64_t size() const
  {
    return size_;
  }

  Profile At(std::uint64_t index) const;

  /// Position of a profile, or nullopt when some coordinate is off-grid.
  std::optional<std::uint64_t> IndexOf(Profile const &profile) const;

  bool Contains(Profile const &profile) const
  {
    return IndexOf(profile).has_value();
  }

private:
  MarketConfig        config_;
  std::vector<Values> per_agent_;
  std::uint64_t       size_ = 0;
};

/// Default enumeration budget before a scan must switch to sampling.
inline constexpr std::uint64_t kDefaultProfileBudget = 1'000'000;

/// Worker count from MECHLAB_WORKERS, default 1.
unsigned WorkersFromEnvironment();

/// splitmix64 finalizer; counter-based so any worker can draw sample k alone.
std::uint64_t MixBits(std::uint64_t x);

/// The set of profiles a checker visits: the full grid when it fits in the
/// budget, otherwise `samples` uniform draws keyed by (seed, position).
class ProfileSpace
{
public:
  struct Options
  {
    std::uint64_t budget  = kDefaultProfileBudget;
    bool          sampled = false;  // force sampling even under budget
    std::uint64_t samples = 100'000;
    std::uint64_t seed    = 0;
    unsigned      workers = 1;
  };

  ProfileSpace(GridSpace grid);  // NOLINT(google-explicit-constructor)
  ProfileSpace(GridSpace grid, Options options);

  GridSpace const &grid() const
  {
    return grid_;
  }
  MarketConfig const &config() const
  {
    return grid_.config();
  }
  bool is_sampled() const
  {
    return sampled_;
  }
  std::uint64_t seed() const
  {
    return options_.seed;
  }
  unsigned workers() const
  {
    return options_.workers;
  }

  /// Number of positions visited.
  std::uint64_t count() const;

  /// Grid index of the profile at scan position k.
  std::uint64_t GridIndex(std::uint64_t position) const;

  Profile At(std::uint64_t position) const
  {
    return grid_.At(GridIndex(position));
  }

private:
  GridSpace grid_;
  Options   options_;
  bool      sampled_ = false;
};

}  // namespace mechlab
