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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mechlab {

enum class Verdict
{
  kPassExhaustive,
  kPassAnalytic,
  kPassSampled,
  kFail,
  kNotCertified,
  kNotApplicable,
};

std::string_view ToString(Verdict verdict);
Verdict          ParseVerdict(std::string_view text);

inline bool IsPass(Verdict verdict)
{
  return verdict == Verdict::kPassExhaustive || verdict == Verdict::kPassAnalytic ||
         verdict == Verdict::kPassSampled;
}

enum class Axiom
{
  kEgalitarianEquivalence,
  kStrategyProofness,
  kNonObviousManipulability,
  kEfficiency,
  kIndividualRationality,
  kNoSubsidy,
  kEnvyFreeness,
  kAnonymityInWelfare,
  kBestCaseCondition,
  kWelfareCompare,
};

/// Catalog names: EE, SP, NOM, EFF, IR, NS, EF, AIW, PROP2, WELFARE_COMPARE.
std::string_view ToString(Axiom axiom);
Axiom            ParseAxiom(std::string_view text);

enum class Direction
{
  kSup,
  kInf,
};

std::string_view ToString(Direction direction);
Direction        ParseDirection(std::string_view text);

/// A concrete violation: the profile, the agents involved and, for
/// deviation-based axioms, the misreport. `values` records the exact
/// quantities that make the inequality fail.
struct Witness
{
  Profile                                       profile;
  std::vector<AgentIndex>                       agents;
  std::optional<Rational>                       misreport;
  std::vector<std::pair<std::string, Rational>> values;

  std::optional<Rational> Value(std::string_view name) const;

  friend bool operator==(Witness const &, Witness const &) = default;
};

/// A misreport that raises the best-case (SUP) or worst-case (INF) utility.
struct ObviousManipulationWitness
{
  AgentIndex agent = 0;
  Rational   true_value;
  Rational   misreport;
  Direction  direction = Direction::kSup;
  Rational   truthful_bound;
  Rational   misreport_bound;
  /// Full profiles attaining the bounds, when the bound is attained.
  std::optional<Profile> truthful_realizer;
  std::optional<Profile> misreport_realizer;
  bool                   grid_relative = false;

  friend bool operator==(ObviousManipulationWitness const &,
                         ObviousManipulationWitness const &) = default;
};

/// Exact best/worst case of one agent's utility over all opponent profiles.
struct UtilityBounds
{
  Rational               sup;
  Rational               inf;
  std::optional<Profile> sup_realizer;
  std::optional<Profile> inf_realizer;
};

struct BoundsRow
{
  AgentIndex    agent = 0;
  Rational      value;
  UtilityBounds bounds;
};

struct AxiomReport
{
  Axiom                                     axiom   = Axiom::kEgalitarianEquivalence;
  Verdict                                   verdict = Verdict::kPassExhaustive;
  std::optional<Witness>                    witness;
  std::optional<ObviousManipulationWitness> manipulation;
  std::uint64_t                             profiles_checked = 0;
  bool                                      grid_relative    = false;
  std::optional<std::uint64_t>              seed;
  std::vector<BoundsRow>                    bounds;
  std::string                               note;
};

/// Outcome of a structural check on a winner selection function or a
/// tie-class assignment.
struct ValidityReport
{
  Verdict                   verdict = Verdict::kPassAnalytic;
  std::optional<int>        condition;  // which numbered condition failed
  std::optional<Profile>    profile;
  std::optional<AgentIndex> agent;
  std::optional<Rational>   misreport;
  std::uint64_t             profiles_checked = 0;
  std::string               detail;

  bool ok() const
  {
    return IsPass(verdict);
  }
};

}  // namespace mechlab
