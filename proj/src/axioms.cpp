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

#include "mechlab/axioms.hpp"

#include "scan.hpp"

#include <algorithm>

namespace mechlab {
namespace {

using detail::ScanFirst;

AxiomReport FromScan(Axiom axiom, ProfileSpace const &space, detail::FirstHit hit)
{
  AxiomReport report;
  report.axiom            = axiom;
  report.profiles_checked = hit.checked;
  if (space.is_sampled())
  {
    report.seed = space.seed();
  }
  if (hit.witness)
  {
    report.verdict = Verdict::kFail;
    report.witness = std::move(hit.witness);
  }
  else
  {
    report.verdict = space.is_sampled() ? Verdict::kPassSampled : Verdict::kPassExhaustive;
  }
  return report;
}

std::optional<Witness> ProbeIr(Mechanism const &f, Profile const &v)
{
  auto const z = f(v);
  for (AgentIndex i = 0; i < v.size(); ++i)
  {
    auto const u = Utility(z[i], v[i]);
    if (u.is_negative())
    {
      return Witness{v, {i}, std::nullopt, {{"utility", u}}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> ProbeNs(Mechanism const &f, Profile const &v)
{
  auto const z = f(v);
  for (AgentIndex i = 0; i < v.size(); ++i)
  {
    if (z[i].transfer.is_negative())
    {
      return Witness{v, {i}, std::nullopt, {{"transfer", z[i].transfer}}};
    }
  }
  return std::nullopt;
}

std::optional<Witness> ProbeSpAt(Mechanism const &f, Profile const &v, AgentIndex i,
                                 Rational const &lie, Rational const &truthful)
{
  auto const deviated = Utility(f(v.With(i, lie))[i], v[i]);
  if (deviated > truthful)
  {
    return Witness{v, {i}, lie, {{"truthful_utility", truthful}, {"misreport_utility", deviated}}};
  }
  return std::nullopt;
}

std::optional<Witness> ProbeSp(Mechanism const &f, GridSpace const &grid, Profile const &v)
{
  auto const z = f(v);
  for (AgentIndex i = 0; i < v.size(); ++i)
  {
    auto const truthful = Utility(z[i], v[i]);
    for (auto const &lie : grid.values(i))
    {
      if (lie == v[i])
      {
        continue;
      }
      if (auto hit = ProbeSpAt(f, v, i, lie, truthful))
      {
        return hit;
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, Rational>> NamedUtilities(Allocation const &z, Profile const &v)
{
  std::vector<std::pair<std::string, Rational>> out;
  auto const                                    utilities = z.Utilities(v);
  for (AgentIndex i = 0; i < utilities.size(); ++i)
  {
    out.emplace_back("u" + std::to_string(i + 1), utilities[i]);
  }
  return out;
}

std::optional<Witness> ProbeEe(Mechanism const &f, Profile const &v)
{
  auto const z = f(v);
  if (FindReferenceBundle(z, v))
  {
    return std::nullopt;
  }
  return Witness{v, {}, std::nullopt, NamedUtilities(z, v)};
}

std::optional<Witness> ProbeEff(Mechanism const &f, Profile const &v)
{
  auto const achieved = f(v).Surplus(v);
  auto const optimum  = MaxSurplus(v);
  if (achieved < optimum)
  {
    return Witness{v, {}, std::nullopt, {{"achieved", achieved}, {"optimum", optimum}}};
  }
  return std::nullopt;
}

std::optional<Witness> ProbeEfPair(Allocation const &z, Profile const &v, AgentIndex i,
                                   AgentIndex j)
{
  auto const own    = Utility(z[i], v[i]);
  auto const envied = Utility(z[j], v[i]);
  if (own < envied)
  {
    return Witness{v, {i, j}, std::nullopt, {{"own_utility", own}, {"envied_utility", envied}}};
  }
  return std::nullopt;
}

std::optional<Witness> ProbeEf(Mechanism const &f, Profile const &v)
{
  auto const z = f(v);
  for (AgentIndex i = 0; i < v.size(); ++i)
  {
    for (AgentIndex j = 0; j < v.size(); ++j)
    {
      if (i != j)
      {
        if (auto hit = ProbeEfPair(z, v, i, j))
        {
          return hit;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> ProbeAiwPair(Mechanism const &f, Allocation const &z, Profile const &v,
                                    AgentIndex i, AgentIndex j)
{
  auto const swapped = v.Swapped(i, j);
  auto const before  = Utility(z[i], v[i]);
  auto const after   = Utility(f(swapped)[j], v[i]);
  if (before != after)
  {
    return Witness{v, {i, j}, std::nullopt, {{"utility", before}, {"swapped_utility", after}}};
  }
  return std::nullopt;
}

std::optional<Witness> ProbeAiw(Mechanism const &f, Profile const &v)
{
  auto const z = f(v);
  for (AgentIndex i = 0; i < v.size(); ++i)
  {
    for (AgentIndex j = 0; j < v.size(); ++j)
    {
      if (i != j)
      {
        if (auto hit = ProbeAiwPair(f, z, v, i, j))
        {
          return hit;
        }
      }
    }
  }
  return std::nullopt;
}

UtilityBounds BoundsFor(Mechanism const &f, GridSpace const &grid, bool analytic, AgentIndex i,
                        Rational const &report, Rational const &true_value)
{
  if (analytic)
  {
    return *ManipulationBounds(f, grid.config(), i, report, true_value);
  }
  return GridManipulationBounds(f, grid, i, report, true_value);
}

bool HasClosedForm(Mechanism const &f, MarketConfig const &config)
{
  return ManipulationBounds(f, config, 0, 1, 1).has_value();
}

}  // namespace

AxiomReport CheckIndividualRationality(Mechanism const &f, ProfileSpace const &space)
{
  return FromScan(Axiom::kIndividualRationality, space,
                  ScanFirst(space, [&](Profile const &v) { return ProbeIr(f, v); }));
}

AxiomReport CheckNoSubsidy(Mechanism const &f, ProfileSpace const &space)
{
  return FromScan(Axiom::kNoSubsidy, space,
                  ScanFirst(space, [&](Profile const &v) { return ProbeNs(f, v); }));
}

AxiomReport CheckStrategyProofness(Mechanism const &f, ProfileSpace const &space)
{
  return FromScan(
      Axiom::kStrategyProofness, space,
      ScanFirst(space, [&](Profile const &v) { return ProbeSp(f, space.grid(), v); }));
}

AxiomReport CheckEnvyFreeness(Mechanism const &f, ProfileSpace const &space)
{
  return FromScan(Axiom::kEnvyFreeness, space,
                  ScanFirst(space, [&](Profile const &v) { return ProbeEf(f, v); }));
}

AxiomReport CheckEfficiency(Mechanism const &f, ProfileSpace const &space)
{
  return FromScan(Axiom::kEfficiency, space,
                  ScanFirst(space, [&](Profile const &v) { return ProbeEff(f, v); }));
}

std::optional<Bundle> FindReferenceBundle(Allocation const &allocation, Profile const &profile)
{
  auto const utilities = allocation.Utilities(profile);
  auto const all_equal = [](std::vector<Rational> const &xs) {
    return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>{}) == xs.end();
  };
  if (all_equal(utilities))
  {
    return Bundle{false, -utilities.front()};
  }
  std::vector<Rational> gaps;
  gaps.reserve(utilities.size());
  for (AgentIndex i = 0; i < utilities.size(); ++i)
  {
    gaps.push_back(profile[i] - utilities[i]);
  }
  if (all_equal(gaps))
  {
    return Bundle{true, gaps.front()};
  }
  return std::nullopt;
}

std::optional<Bundle> FindReferenceBundle(Mechanism const &f, Profile const &profile)
{
  return FindReferenceBundle(f(profile), profile);
}

AxiomReport CheckEgalitarianEquivalence(Mechanism const &f, ProfileSpace const &space)
{
  return FromScan(Axiom::kEgalitarianEquivalence, space,
                  ScanFirst(space, [&](Profile const &v) { return ProbeEe(f, v); }));
}

AxiomReport CheckAnonymityInWelfare(Mechanism const &f, ProfileSpace const &space)
{
  if (!space.grid().is_shared())
  {
    throw UsageError("anonymity in welfare needs the same value set for every agent");
  }
  return FromScan(Axiom::kAnonymityInWelfare, space,
                  ScanFirst(space, [&](Profile const &v) { return ProbeAiw(f, v); }));
}

std::optional<UtilityBounds> NomAnalyticBounds(Mechanism const &f, MarketConfig const &config,
                                               AgentIndex i, Rational const &value)
{
  return ManipulationBounds(f, config, i, value, value);
}

AxiomReport CheckNonObviousManipulability(Mechanism const &f, ProfileSpace const &space)
{
  auto const &grid     = space.grid();
  auto const &config   = grid.config();
  bool const  analytic = HasClosedForm(f, config);

  AxiomReport report;
  report.axiom         = Axiom::kNonObviousManipulability;
  report.grid_relative = !analytic;
  report.note          = analytic ? "bounds are exact over all opponent valuations"
                                  : "grid-relative: grid suprema under-approximate true suprema, "
                                    "so verdicts are evidence, not proof";

  for (AgentIndex i = 0; i < config.n; ++i)
  {
    for (auto const &value : grid.values(i))
    {
      auto const truthful = BoundsFor(f, grid, analytic, i, value, value);
      report.bounds.push_back({i, value, truthful});
      for (auto const &lie : grid.values(i))
      {
        if (lie == value)
        {
          continue;
        }
        ++report.profiles_checked;
        auto const deviated = BoundsFor(f, grid, analytic, i, lie, value);
        std::optional<Direction> direction;
        if (deviated.sup > truthful.sup)
        {
          direction = Direction::kSup;
        }
        else if (deviated.inf > truthful.inf)
        {
          direction = Direction::kInf;
        }
        if (!direction)
        {
          continue;
        }
        bool const sup = *direction == Direction::kSup;
        report.verdict = Verdict::kFail;
        report.manipulation =
            ObviousManipulationWitness{i,
                                       value,
                                       lie,
                                       *direction,
                                       sup ? truthful.sup : truthful.inf,
                                       sup ? deviated.sup : deviated.inf,
                                       sup ? truthful.sup_realizer : truthful.inf_realizer,
                                       sup ? deviated.sup_realizer : deviated.inf_realizer,
                                       !analytic};
        return report;
      }
    }
  }
  report.verdict = analytic ? Verdict::kPassAnalytic : Verdict::kPassSampled;
  return report;
}

AxiomReport CheckBestCaseCondition(Mechanism const &f, ProfileSpace const &space)
{
  AxiomReport report;
  report.axiom = Axiom::kBestCaseCondition;
  for (auto const &premise : {CheckEfficiency(f, space), CheckIndividualRationality(f, space),
                              CheckNoSubsidy(f, space)})
  {
    if (!IsPass(premise.verdict))
    {
      report.verdict = Verdict::kNotApplicable;
      report.note    = "premise " + std::string(ToString(premise.axiom)) + " fails";
      report.profiles_checked = premise.profiles_checked;
      return report;
    }
  }

  auto const &grid     = space.grid();
  auto const &config   = grid.config();
  bool const  analytic = HasClosedForm(f, config);
  report.grid_relative = !analytic;
  for (AgentIndex i = 0; i < config.n; ++i)
  {
    for (auto const &value : grid.values(i))
    {
      auto const bounds = BoundsFor(f, grid, analytic, i, value, value);
      report.bounds.push_back({i, value, bounds});
      ++report.profiles_checked;
      if (bounds.sup != value)
      {
        Values zeros(config.n, Rational{0});
        zeros[i] = value;
        report.verdict = Verdict::kFail;
        report.witness = Witness{bounds.sup_realizer.value_or(Profile(config, zeros)),
                                 {i},
                                 std::nullopt,
                                 {{"sup", bounds.sup}, {"target", value}}};
        return report;
      }
    }
  }
  report.verdict = analytic ? Verdict::kPassAnalytic : Verdict::kPassSampled;
  report.note    = "best case equals receiving the object for free, realised with a zero "
                   "opponent minimum";
  return report;
}

AxiomReport CheckAxiom(Axiom axiom, Mechanism const &f, ProfileSpace const &space)
{
  switch (axiom)
  {
  case Axiom::kEgalitarianEquivalence:
    return CheckEgalitarianEquivalence(f, space);
  case Axiom::kStrategyProofness:
    return CheckStrategyProofness(f, space);
  case Axiom::kNonObviousManipulability:
    return CheckNonObviousManipulability(f, space);
  case Axiom::kEfficiency:
    return CheckEfficiency(f, space);
  case Axiom::kIndividualRationality:
    return CheckIndividualRationality(f, space);
  case Axiom::kNoSubsidy:
    return CheckNoSubsidy(f, space);
  case Axiom::kEnvyFreeness:
    return CheckEnvyFreeness(f, space);
  case Axiom::kAnonymityInWelfare:
    return CheckAnonymityInWelfare(f, space);
  case Axiom::kBestCaseCondition:
    return CheckBestCaseCondition(f, space);
  case Axiom::kWelfareCompare:
    break;
  }
  throw UsageError("WELFARE_COMPARE needs a second mechanism");
}

std::string_view ToString(WelfareRelation relation)
{
  switch (relation)
  {
  case WelfareRelation::kDominates:
    return "DOMINATES";
  case WelfareRelation::kDominated:
    return "DOMINATED";
  case WelfareRelation::kEqual:
    return "EQUAL";
  case WelfareRelation::kIncomparable:
    return "INCOMPARABLE";
  }
  return "?";
}

WelfareComparison CompareWelfare(Mechanism const &f, Mechanism const &g, ProfileSpace const &space)
{
  WelfareComparison out;
  for (std::uint64_t pos = 0; pos < space.count(); ++pos)
  {
    auto const v  = space.At(pos);
    auto const zf = f(v);
    auto const zg = g(v);
    ++out.profiles_checked;
    for (AgentIndex i = 0; i < v.size(); ++i)
    {
      auto const uf = Utility(zf[i], v[i]);
      auto const ug = Utility(zg[i], v[i]);
      if (uf == ug)
      {
        continue;
      }
      auto &first = uf > ug ? out.first_gain : out.first_loss;
      ++(uf > ug ? out.gain_points : out.loss_points);
      if (!first)
      {
        first = Witness{v, {i}, std::nullopt, {{"utility", uf}, {"other_utility", ug}}};
      }
    }
  }
  if (out.gain_points == 0 && out.loss_points == 0)
  {
    out.relation = WelfareRelation::kEqual;
  }
  else if (out.loss_points == 0)
  {
    out.relation = WelfareRelation::kDominates;
  }
  else if (out.gain_points == 0)
  {
    out.relation = WelfareRelation::kDominated;
  }
  else
  {
    out.relation = WelfareRelation::kIncomparable;
  }
  return out;
}

std::optional<Witness> Reevaluate(Mechanism const &f, Axiom axiom, Witness const &witness,
                                  GridSpace const *grid)
{
  auto const &v      = witness.profile;
  auto const  needed = [&](std::size_t count) {
    if (witness.agents.size() != count ||
        std::any_of(witness.agents.begin(), witness.agents.end(),
                    [&](AgentIndex i) { return i >= v.size(); }))
    {
      throw UsageError("witness for " + std::string(ToString(axiom)) + " needs " +
                       std::to_string(count) + " valid agent(s)");
    }
  };
  switch (axiom)
  {
  case Axiom::kIndividualRationality:
  {
    needed(1);
    auto const i = witness.agents[0];
    auto const u = Utility(f(v)[i], v[i]);
    if (!u.is_negative())
    {
      return std::nullopt;
    }
    return Witness{v, {i}, std::nullopt, {{"utility", u}}};
  }
  case Axiom::kNoSubsidy:
  {
    needed(1);
    auto const i = witness.agents[0];
    auto const t = f(v)[i].transfer;
    if (!t.is_negative())
    {
      return std::nullopt;
    }
    return Witness{v, {i}, std::nullopt, {{"transfer", t}}};
  }
  case Axiom::kStrategyProofness:
  {
    needed(1);
    auto const i = witness.agents[0];
    if (!witness.misreport || witness.misreport->is_negative() || *witness.misreport == v[i])
    {
      return std::nullopt;
    }
    return ProbeSpAt(f, v, i, *witness.misreport, Utility(f(v)[i], v[i]));
  }
  case Axiom::kEgalitarianEquivalence:
    needed(0);
    return ProbeEe(f, v);
  case Axiom::kEfficiency:
    needed(0);
    return ProbeEff(f, v);
  case Axiom::kEnvyFreeness:
    needed(2);
    return ProbeEfPair(f(v), v, witness.agents[0], witness.agents[1]);
  case Axiom::kAnonymityInWelfare:
    needed(2);
    return ProbeAiwPair(f, f(v), v, witness.agents[0], witness.agents[1]);
  case Axiom::kBestCaseCondition:
  {
    needed(1);
    auto const i      = witness.agents[0];
    auto const target = witness.Value("target");
    if (!target)
    {
      return std::nullopt;
    }
    auto const bounds = HasClosedForm(f, v.config())
                            ? NomAnalyticBounds(f, v.config(), i, *target)
                            : (grid != nullptr ? std::optional(GridManipulationBounds(
                                                     f, *grid, i, *target, *target))
                                               : std::nullopt);
    if (!bounds || bounds->sup == *target)
    {
      return std::nullopt;
    }
    return Witness{v, {i}, std::nullopt, {{"sup", bounds->sup}, {"target", *target}}};
  }
  case Axiom::kNonObviousManipulability:
  case Axiom::kWelfareCompare:
    break;
  }
  throw UsageError(std::string(ToString(axiom)) + " witnesses are not profile witnesses");
}

bool Replays(Mechanism const &f, Axiom axiom, Witness const &witness, GridSpace const *grid)
{
  auto const fresh = Reevaluate(f, axiom, witness, grid);
  return fresh && fresh->agents == witness.agents && fresh->values == witness.values;
}

bool Replays(Mechanism const &f, MarketConfig const &config,
             ObviousManipulationWitness const &witness, GridSpace const *grid)
{
  auto bounds = [&](Rational const &report) -> std::optional<UtilityBounds> {
    if (witness.grid_relative)
    {
      if (grid == nullptr)
      {
        return std::nullopt;
      }
      return GridManipulationBounds(f, *grid, witness.agent, report, witness.true_value);
    }
    return ManipulationBounds(f, config, witness.agent, report, witness.true_value);
  };
  auto const truthful = bounds(witness.true_value);
  auto const deviated = bounds(witness.misreport);
  if (!truthful || !deviated)
  {
    return false;
  }
  if (witness.direction == Direction::kSup)
  {
    return truthful->sup == witness.truthful_bound && deviated->sup == witness.misreport_bound &&
           deviated->sup > truthful->sup;
  }
  return truthful->inf == witness.truthful_bound && deviated->inf == witness.misreport_bound &&
         deviated->inf > truthful->inf;
}

}  // namespace mechlab
