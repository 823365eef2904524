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

#include "mechlab/grid.hpp"
#include "mechlab/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace mechlab::detail {

struct FirstHit
{
  std::optional<Witness> witness;
  std::uint64_t          checked = 0;
};

using Probe = std::function<std::optional<Witness>(Profile const &)>;

/// Visits every position of the space and returns the violation found at the
/// smallest position. Workers take interleaved blocks and stop once their
/// block starts past the best hit so far, so the result does not depend on
/// the worker count.
inline FirstHit ScanFirst(ProfileSpace const &space, Probe const &probe)
{
  constexpr std::uint64_t kBlock = 64;
  constexpr std::uint64_t kNone  = std::numeric_limits<std::uint64_t>::max();

  auto const total   = space.count();
  auto const blocks  = (total + kBlock - 1) / kBlock;
  auto const workers = static_cast<unsigned>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(space.workers(), blocks)));

  std::atomic<std::uint64_t> best{kNone};
  std::mutex                 lock;
  std::optional<Witness>     best_witness;
  std::exception_ptr         failure;

  auto run = [&](unsigned worker) {
    try
    {
      for (std::uint64_t b = worker; b < blocks; b += workers)
      {
        auto const first = b * kBlock;
        if (first > best.load())
        {
          return;
        }
        auto const last = std::min(total, first + kBlock);
        for (auto pos = first; pos < last; ++pos)
        {
          if (pos > best.load())
          {
            return;
          }
          if (auto hit = probe(space.At(pos)))
          {
            std::lock_guard guard(lock);
            if (pos < best.load())
            {
              best.store(pos);
              best_witness = std::move(hit);
            }
            return;
          }
        }
      }
    }
    catch (...)
    {
      std::lock_guard guard(lock);
      if (!failure)
      {
        failure = std::current_exception();
      }
    }
  };

  if (workers == 1)
  {
    run(0);
  }
  else
  {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
    {
      pool.emplace_back(run, w);
    }
    for (auto &t : pool)
    {
      t.join();
    }
  }
  if (failure)
  {
    std::rethrow_exception(failure);
  }

  FirstHit out;
  out.witness = std::move(best_witness);
  out.checked = best.load() == kNone ? total : best.load() + 1;
  return out;
}

}  // namespace mechlab::detail
