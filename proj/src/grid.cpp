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

#include "mechlab/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <string_view>

namespace mechlab {

GridSpace::GridSpace(MarketConfig config, std::vector<Values> per_agent)
  : config_(config)
  , per_agent_(std::move(per_agent))
{
  if (per_agent_.size() != config_.n)
  {
    throw UsageError("grid has " + std::to_string(per_agent_.size()) +
                     " value sets, market has " + std::to_string(config_.n) + " agents");
  }
  size_ = 1;
  for (auto &values : per_agent_)
  {
    if (values.empty())
    {
      throw UsageError("grid value sets must be nonempty");
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.front().is_negative())
    {
      throw UsageError("grid values must be nonnegative");
    }
    auto const width = static_cast<std::uint64_t>(values.size());
    if (size_ > std::numeric_limits<std::uint64_t>::max() / width)
    {
      size_ = std::numeric_limits<std::uint64_t>::max();
    }
    else if (size_ != std::numeric_limits<std::uint64_t>::max())
    {
      size_ *= width;
    }
  }
}

GridSpace GridSpace::Shared(MarketConfig config, Values values)
{
  return GridSpace(config, std::vector<Values>(config.n, std::move(values)));
}

bool GridSpace::is_shared() const
{
  return std::all_of(per_agent_.begin(), per_agent_.end(),
                     [&](Values const &v) { return v == per_agent_.front(); });
}

Profile GridSpace::At(std::uint64_t index) const
{
  if (index >= size_)
  {
    throw UsageError("profile index out of range");
  }
  Values values(config_.n);
  for (std::size_t k = config_.n; k-- > 0;)
  {
    auto const width = per_agent_[k].size();
    values[k]        = per_agent_[k][index % width];
    index /= width;
  }
  return Profile(config_, std::move(values));
}

std::optional<std::uint64_t> GridSpace::IndexOf(Profile const &profile) const
{
  if (profile.size() != config_.n)
  {
    return std::nullopt;
  }
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < config_.n; ++k)
  {
    auto const &set = per_agent_[k];
    auto const  it  = std::lower_bound(set.begin(), set.end(), profile[k]);
    if (it == set.end() || *it != profile[k])
    {
      return std::nullopt;
    }
    index = index * set.size() + static_cast<std::uint64_t>(it - set.begin());
  }
  return index;
}

unsigned WorkersFromEnvironment()
{
  char const *raw = std::getenv("MECHLAB_WORKERS");
  if (raw == nullptr)
  {
    return 1;
  }
  std::string_view text(raw);
  unsigned         value = 0;
  auto const [ptr, ec]   = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0)
  {
    return 1;
  }
  return std::min(value, 256u);
}

std::uint64_t MixBits(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ProfileSpace::ProfileSpace(GridSpace grid)
  : ProfileSpace(std::move(grid), Options{})
{}

ProfileSpace::ProfileSpace(GridSpace grid, Options options)
  : grid_(std::move(grid))
  , options_(options)
{
  sampled_ = options_.sampled || grid_.size() > options_.budget;
  if (sampled_ && options_.samples == 0)
  {
    throw UsageError("sampled mode needs a positive sample count");
  }
  if (options_.workers == 0)
  {
    options_.workers = 1;
  }
}

std::uint64_t ProfileSpace::count() const
{
  return sampled_ ? options_.samples : grid_.size();
}

std::uint64_t ProfileSpace::GridIndex(std::uint64_t position) const
{
  if (!sampled_)
  {
    return position;
  }
  // Modulo bias is negligible for grids far below 2^64 profiles.
  return MixBits(options_.seed ^ MixBits(position)) % grid_.size();
}

}  // namespace mechlab
