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
#include "mechlab/model.hpp"
#include "mechlab/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mechlab {

// ---------------------------------------------------------------------------
// Allocation sets. Each returns every allocation admitted by the rule at the
// given profile, sorted in canonical order (see CanonicalLess).

/// Winners-pay-(m+1)-th-price set: strict winners always hold an object,
/// agents tied at the price may or may not, everyone else gets the zero bundle.
std::vector<Allocation> VickreySet(Profile const &profile);

/// Object vectors maximising sum v_i x_i; winners pay the (m+1)-th price.
std::vector<Allocation> EfficientVickreySet(Profile const &profile);

/// Object vectors maximising sum v_i x_i; winners pay their own report.
std::vector<Allocation> PayAsBidSet(Profile const &profile);

/// Every agent receives (0, fee). fee > 0 is a participation fee, fee < 0 a
/// subsidy.
Allocation NoTrade(Profile const &profile, Rational const &fee = 0);

/// Strict order on winner sets: compares object indicators from the highest
/// agent index down, so {1} < {2} < {1,2} < {3}. The minimum never contains an
/// optional agent (one whose removal keeps the allocation in its set).
bool CanonicalLess(std::span<AgentIndex const> lhs, std::span<AgentIndex const> rhs);

/// Minimum of a nonempty allocation set under CanonicalLess.
Allocation SelectCanonical(std::span<Allocation const> allocations);

/// Closed forms of SelectCanonical over the three sets, without enumeration.
Allocation CanonicalVickrey(Profile const &profile);
Allocation CanonicalEfficientVickrey(Profile const &profile);
Allocation CanonicalPayAsBid(Profile const &profile);

// ---------------------------------------------------------------------------
// Winner selection functions.

using WinnerSet = std::vector<AgentIndex>;  // ascending

/// Finite profile -> winner set map; profiles off the table select nobody.
using WinnerRuleTable = std::map<Values, WinnerSet>;

class WinnerSelectionFunction
{
public:
  enum class Kind
  {
    kEmpty,
    kStrictWinners,
    kDictatorialThreshold,
    kEfficientWinners,
    kRuleTable,
  };

  /// Never selects anybody.
  static WinnerSelectionFunction Empty();
  /// On the tie class, the agents strictly above the (m+1)-th valuation.
  static WinnerSelectionFunction StrictWinners();
  /// Selects `agent` alone when it reports above `threshold` and every other
  /// agent reports exactly `threshold`.
  static WinnerSelectionFunction DictatorialThreshold(AgentIndex agent, Rational threshold);
  /// On the tie class, the winners of the canonical efficient allocation.
  static WinnerSelectionFunction EfficientWinners();
  /// Throws UsageError on malformed entries (wrong length, negative values,
  /// unsorted or out-of-range winner sets).
  static WinnerSelectionFunction RuleTable(MarketConfig config, WinnerRuleTable table);

  Kind kind() const
  {
    return kind_;
  }
  AgentIndex agent() const
  {
    return agent_;
  }
  Rational const &threshold() const
  {
    return threshold_;
  }
  WinnerRuleTable const &table() const
  {
    return *table_;
  }
  /// Market the rule table was written for; meaningless for other kinds.
  MarketConfig const &table_config() const
  {
    return table_config_;
  }

  WinnerSet Select(Profile const &profile) const;

  std::string Describe() const;

private:
  WinnerSelectionFunction() = default;

  Kind                                   kind_  = Kind::kEmpty;
  AgentIndex                             agent_ = 0;
  Rational                               threshold_;
  MarketConfig                           table_config_;
  std::shared_ptr<WinnerRuleTable const> table_ = std::make_shared<WinnerRuleTable const>();
};

/// Conditions (i)-(iv) of a winner selection function at one profile;
/// returns the first violated condition number.
std::optional<int> FirstViolatedCondition(WinnerSet const &selected, Profile const &profile);

/// Checks conditions (i)-(iv). Built-in families are valid by construction
/// (PASS_ANALYTIC). Rule tables are checked on every table entry, which is
/// complete because off-table profiles select nobody, and on every grid
/// profile.
ValidityReport ValidateWinnerSelection(WinnerSelectionFunction const &wsf, GridSpace const &grid);

/// A selected agent stays selected when raising its report above the
/// (m+1)-th valuation. Analytic for built-in families; for rule tables every
/// grid/table profile and every grid raise is tried.
ValidityReport CheckUncompromising(WinnerSelectionFunction const &wsf, GridSpace const &grid);

// ---------------------------------------------------------------------------
// Tie-class assignments: which rule applies on the tie class.

enum class TieBranch
{
  kEfficientVickrey,
  kPayAsBid,
};

using BranchRuleTable = std::map<Values, TieBranch>;

class TildeAssignment
{
public:
  enum class Kind
  {
    kAlwaysEv,
    kEvIffPriceZero,
    kThreshold,  // efficient Vickrey iff the (m+1)-th valuation <= cutoff
    kRuleTable,  // off-table profiles use pay-as-bid
  };

  static TildeAssignment AlwaysEv();
  static TildeAssignment EvIffPriceZero();
  static TildeAssignment Threshold(Rational cutoff);
  static TildeAssignment RuleTable(BranchRuleTable table);

  Kind kind() const
  {
    return kind_;
  }
  Rational const &cutoff() const
  {
    return cutoff_;
  }
  BranchRuleTable const &table() const
  {
    return *table_;
  }

  /// Branch for a profile in the tie class.
  TieBranch Classify(Profile const &profile) const;

  /// True when efficient Vickrey applies at price zero, i.e. the closed form
  /// admits the all-zero opponents witness.
  bool EvAtZeroPrice() const;

  std::string Describe() const;

private:
  TildeAssignment() = default;

  Kind                                   kind_ = Kind::kAlwaysEv;
  Rational                               cutoff_;
  std::shared_ptr<BranchRuleTable const> table_ = std::make_shared<BranchRuleTable const>();
};

// ---------------------------------------------------------------------------
// Mechanisms.

enum class Family
{
  kVickrey,           // canonical: tied agents unallocated
  kEfficientVickrey,  // canonical element of the efficient Vickrey set
  kPayAsBid,          // canonical element of the pay-as-bid set
  kNoTrade,           // with participation fee (> 0) or subsidy (< 0)
  kTauVickreyNoTrade,
  kEvPab,
  kCustom,
};

std::string_view ToString(Family family);

/// Deterministic total map from profiles to feasible allocations.
class Mechanism
{
public:
  using Rule = std::function<Allocation(Profile const &)>;

  static Mechanism Vickrey();
  static Mechanism EfficientVickrey();
  static Mechanism PayAsBid();
  static Mechanism NoTrade(Rational fee = 0);
  /// Throws UsageError when the selection function violates (i)-(iv).
  static Mechanism TauVickreyNoTrade(WinnerSelectionFunction wsf);
  static Mechanism EvPab(TildeAssignment assignment);
  /// Black-box mechanism; analytic shortcuts never apply to it.
  static Mechanism Custom(std::string name, Rule rule);

  std::string const &name() const
  {
    return name_;
  }
  Family family() const
  {
    return family_;
  }
  Rational const &fee() const
  {
    return fee_;
  }
  std::optional<WinnerSelectionFunction> const &wsf() const
  {
    return wsf_;
  }
  std::optional<TildeAssignment> const &assignment() const
  {
    return assignment_;
  }

  /// Throws std::logic_error if the rule returns an infeasible allocation.
  Allocation operator()(Profile const &profile) const;

private:
  Mechanism(std::string name, Family family, Rule rule);

  std::string                            name_;
  Family                                 family_;
  Rule                                   rule_;
  Rational                               fee_;
  std::optional<WinnerSelectionFunction> wsf_;
  std::optional<TildeAssignment>         assignment_;
};

/// Allocation of a tau-Vickrey mechanism combined with no-trade for a given
/// selected set: (1, v^{m+1}) for the selected agents, zero bundles otherwise.
Allocation TauVickreyAllocation(Profile const &profile, WinnerSet const &selected);

/// Condition (iii) of the efficiency-with-manipulation characterisation: each
/// agent with a positive value has opponents, all in the tie class with a
/// zero minimum, where efficient Vickrey applies. Certified analytically for
/// closed-form assignments; rule tables only get grid evidence and report
/// NOT_CERTIFIED when the grid finds no counterexample.
ValidityReport CheckEfficiencyCharacterization(TildeAssignment const &assignment,
                                               GridSpace const &grid);

}  // namespace mechlab
