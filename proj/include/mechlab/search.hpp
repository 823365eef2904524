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

#include "mechlab/axioms.hpp"
#include "mechlab/grid.hpp"
#include "mechlab/mechanisms.hpp"
#include "mechlab/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mechlab {

/// One value set shared by every agent: either an explicit list or the range
/// 0, 1/q, 2/q, ..., K.
struct GridConfig
{
  MarketConfig market;
  Values       values;

  static GridConfig Explicit(MarketConfig market, Values values);
  static GridConfig Range(MarketConfig market, std::int64_t upper, std::int64_t denominator = 1);

  GridSpace Space() const;
};

/// Grid profiles in lexicographic order, agent 1 most significant.
class ProfileStream
{
public:
  explicit ProfileStream(GridConfig const &grid, std::uint64_t budget = kDefaultProfileBudget,
                         bool tilde_only = false);

  std::optional<Profile> Next();
  std::vector<Profile>   Collect();

private:
  GridSpace     space_;
  bool          tilde_only_;
  std::uint64_t position_ = 0;
};

/// Throws UsageError when the grid exceeds `budget` profiles.
ProfileStream EnumerateProfiles(GridConfig const &grid,
                                std::uint64_t     budget = kDefaultProfileBudget);

/// The subsequence of EnumerateProfiles inside the tie class.
ProfileStream EnumerateTilde(GridConfig const &grid, std::uint64_t budget = kDefaultProfileBudget);

/// Greedy coordinate descent: walks agents in index order, then the
/// misreport, lowering each to the next smaller grid value while the
/// violation still reproduces, and repeats until nothing moves. Values in the
/// result are recomputed at the final point. Throws UsageError when the input
/// does not replay or the axiom has no profile witness.
Witness ShrinkWitness(Mechanism const &f, Axiom axiom, Witness const &witness,
                      GridSpace const &grid);

/// First obvious manipulation in (agent, true value, misreport) order, using
/// closed-form bounds when available and grid bounds otherwise.
std::optional<ObviousManipulationWitness> FindObviousManipulation(Mechanism const &f,
                                                                   GridSpace const &grid);

/// Random rule-table winner selection functions that pass both the validity
/// and the uncompromisingness checks on `grid`. Deterministic in `seed`;
/// tables are pairwise distinct.
std::vector<WinnerSelectionFunction> RandomUncompromisingTables(GridSpace const &grid,
                                                                std::size_t      count,
                                                                std::uint64_t    seed);

/// Random tie-class rule tables for the EV/PAB composition.
std::vector<TildeAssignment> RandomBranchTables(GridSpace const &grid, std::size_t count,
                                                std::uint64_t seed);

struct SuiteCheck
{
  std::string name;
  bool        passed = false;
  std::string detail;
};

struct SuiteResult
{
  std::string                           name;
  std::vector<std::string>              mechanisms;
  std::vector<Axiom>                    axioms;
  std::vector<std::vector<AxiomReport>> cells;     // [mechanism][axiom]
  std::vector<std::vector<bool>>        expected;  // expected IsPass per cell
  std::vector<SuiteCheck>               checks;

  bool CellMatches(std::size_t row, std::size_t column) const;
  bool Matches() const;
};

/// Suite names accepted by RunSuite.
std::vector<std::string> SuiteNames();

/// Vickrey, pay-as-bid, participation fee 1 and subsidy 1 against EE, SP, IR
/// and NS; each fails exactly the axiom it was built to drop.
SuiteResult IndependenceSuite(GridConfig const &grid, unsigned workers = 1);

/// Runs a named suite at its fixed desk-scale configuration. Throws
/// UsageError for unknown names.
SuiteResult RunSuite(std::string const &name, unsigned workers = 1);

}  // namespace mechlab
