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
#include "mechlab/mechanisms.hpp"
#include "mechlab/report.hpp"

#include <optional>

namespace mechlab {

// Every checker scans the profile space in order and reports the first
// violation. Verdicts are PASS_EXHAUSTIVE over a full grid and PASS_SAMPLED
// when the space samples. Misreports for SP and NOM range over the deviating
// agent's own grid values.

AxiomReport CheckIndividualRationality(Mechanism const &f, ProfileSpace const &space);
AxiomReport CheckNoSubsidy(Mechanism const &f, ProfileSpace const &space);
AxiomReport CheckStrategyProofness(Mechanism const &f, ProfileSpace const &space);
AxiomReport CheckEnvyFreeness(Mechanism const &f, ProfileSpace const &space);

/// Decision efficiency: sum v_i x_i(v) equals the sum of the m largest values.
AxiomReport CheckEfficiency(Mechanism const &f, ProfileSpace const &space);

/// A bundle every agent finds exactly as good as its own, if one exists.
///
/// With u_i the realised utilities, a reference bundle (0, t) needs
/// t = -u_i for all i and (1, t) needs t = v_i - u_i for all i. Those are the
/// only two shapes, so failing both proves none exists. The (0, .) form is
/// preferred when both apply.
std::optional<Bundle> FindReferenceBundle(Allocation const &allocation, Profile const &profile);
std::optional<Bundle> FindReferenceBundle(Mechanism const &f, Profile const &profile);

AxiomReport CheckEgalitarianEquivalence(Mechanism const &f, ProfileSpace const &space);

/// Requires the same value set for every agent; throws UsageError otherwise.
AxiomReport CheckAnonymityInWelfare(Mechanism const &f, ProfileSpace const &space);

/// Exact sup/inf over all opponent profiles of agent i's utility at
/// `true_value` when it reports `report`. Available for every closed-form
/// family; nullopt for rule tables and custom mechanisms.
std::optional<UtilityBounds> ManipulationBounds(Mechanism const &f, MarketConfig const &config,
                                                AgentIndex i, Rational const &report,
                                                Rational const &true_value);

/// Truthful special case of ManipulationBounds.
std::optional<UtilityBounds> NomAnalyticBounds(Mechanism const &f, MarketConfig const &config,
                                               AgentIndex i, Rational const &value);

/// Same quantities restricted to opponents drawn from the grid. A grid
/// supremum under-approximates the true one, so results are evidence only.
UtilityBounds GridManipulationBounds(Mechanism const &f, GridSpace const &grid, AgentIndex i,
                                     Rational const &report, Rational const &true_value);

/// PASS_ANALYTIC when closed-form bounds exist; otherwise grid-relative
/// (PASS_SAMPLED, or FAIL flagged grid_relative).
AxiomReport CheckNonObviousManipulability(Mechanism const &f, ProfileSpace const &space);

/// Best-case condition: for efficient, individually rational, subsidy-free
/// mechanisms, non-obvious manipulability holds iff the best case of every
/// agent equals receiving the object for free. NOT_APPLICABLE when the
/// mechanism fails one of the three premises on the space.
AxiomReport CheckBestCaseCondition(Mechanism const &f, ProfileSpace const &space);

/// Runs one catalog axiom. WELFARE_COMPARE is not a single-mechanism axiom
/// and throws UsageError here.
AxiomReport CheckAxiom(Axiom axiom, Mechanism const &f, ProfileSpace const &space);

enum class WelfareRelation
{
  kDominates,
  kDominated,
  kEqual,
  kIncomparable,
};

std::string_view ToString(WelfareRelation relation);

struct WelfareComparison
{
  WelfareRelation relation = WelfareRelation::kEqual;
  /// First point where the first mechanism gives strictly more utility.
  std::optional<Witness> first_gain;
  /// First point where the second mechanism gives strictly more utility.
  std::optional<Witness> first_loss;
  std::uint64_t          gain_points      = 0;
  std::uint64_t          loss_points      = 0;
  std::uint64_t          profiles_checked = 0;
};

/// Pointwise utility comparison of f against g over the space.
WelfareComparison CompareWelfare(Mechanism const &f, Mechanism const &g, ProfileSpace const &space);

/// Recomputes a witness at its own profile, agents and misreport. Returns the
/// fresh witness when the violation holds there, nullopt otherwise. Throws
/// UsageError for NOM/WELFARE_COMPARE or malformed agent lists. PROP2 needs
/// `grid` when the mechanism has no closed form.
std::optional<Witness> Reevaluate(Mechanism const &f, Axiom axiom, Witness const &witness,
                                  GridSpace const *grid = nullptr);

/// The violation reproduces with the recorded values.
bool Replays(Mechanism const &f, Axiom axiom, Witness const &witness,
             GridSpace const *grid = nullptr);
bool Replays(Mechanism const &f, MarketConfig const &config,
             ObviousManipulationWitness const &witness, GridSpace const *grid = nullptr);

}  // namespace mechlab
