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

#include "mechlab/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mechlab {
namespace {

Rational ParseRational(std::string_view text)
{
  try
  {
    return Rational::Parse(text);
  }
  catch (std::invalid_argument const &e)
  {
    throw UsageError(e.what());
  }
  catch (std::domain_error const &e)
  {
    throw UsageError(e.what());
  }
}

Json const &Field(Json const &json, char const *key)
{
  if (!json.is_object() || !json.contains(key))
  {
    throw UsageError(std::string("missing field '") + key + "'");
  }
  return json.at(key);
}

AgentIndex AgentFromJson(Json const &json, MarketConfig const &config)
{
  if (!json.is_number_integer() || json.get<std::int64_t>() < 1 ||
      json.get<std::uint64_t>() > config.n)
  {
    throw UsageError("agent must be an integer in 1.." + std::to_string(config.n));
  }
  return json.get<std::size_t>() - 1;
}

std::string Upper(std::string text)
{
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return text;
}

std::string Text(Json const &json, char const *key)
{
  auto const &field = Field(json, key);
  if (!field.is_string())
  {
    throw UsageError(std::string("field '") + key + "' must be a string");
  }
  return field.get<std::string>();
}

WinnerSelectionFunction WsfFromJson(Json const &json, MarketConfig const &config)
{
  auto const kind = Upper(Text(json, "kind"));
  if (kind == "EMPTY")
  {
    return WinnerSelectionFunction::Empty();
  }
  if (kind == "STRICT_WINNERS")
  {
    return WinnerSelectionFunction::StrictWinners();
  }
  if (kind == "EFFICIENT_WINNERS")
  {
    return WinnerSelectionFunction::EfficientWinners();
  }
  if (kind == "DICTATORIAL_THRESHOLD")
  {
    return WinnerSelectionFunction::DictatorialThreshold(
        AgentFromJson(Field(json, "agent"), config), RationalFromJson(Field(json, "threshold")));
  }
  if (kind == "RULE_TABLE")
  {
    WinnerRuleTable table;
    for (auto const &entry : Field(json, "entries"))
    {
      WinnerSet winners;
      for (auto const &agent : Field(entry, "winners"))
      {
        winners.push_back(AgentFromJson(agent, config));
      }
      std::sort(winners.begin(), winners.end());
      auto const key = ProfileFromJson(Field(entry, "profile"), config).values();
      if (!table.emplace(key, std::move(winners)).second)
      {
        throw UsageError("duplicate rule-table profile");
      }
    }
    return WinnerSelectionFunction::RuleTable(config, std::move(table));
  }
  throw UsageError("unknown winner selection kind '" + kind + "'");
}

TildeAssignment AssignmentFromJson(Json const &json, MarketConfig const &config)
{
  auto const kind = Upper(Text(json, "kind"));
  if (kind == "ALWAYS_EV")
  {
    return TildeAssignment::AlwaysEv();
  }
  if (kind == "EV_IFF_PRICE_ZERO")
  {
    return TildeAssignment::EvIffPriceZero();
  }
  if (kind == "THRESHOLD")
  {
    return TildeAssignment::Threshold(RationalFromJson(Field(json, "cutoff")));
  }
  if (kind == "RULE_TABLE")
  {
    BranchRuleTable table;
    for (auto const &entry : Field(json, "entries"))
    {
      auto const branch = Upper(Text(entry, "branch"));
      if (branch != "EV" && branch != "PAB")
      {
        throw UsageError("branch must be EV or PAB");
      }
      auto const profile = ProfileFromJson(Field(entry, "profile"), config);
      if (!InTildeV(profile))
      {
        throw UsageError("branch table entry " + profile.ToString() + " is outside the tie class");
      }
      table[profile.values()] = branch == "EV" ? TieBranch::kEfficientVickrey : TieBranch::kPayAsBid;
    }
    return TildeAssignment::RuleTable(std::move(table));
  }
  throw UsageError("unknown tie-class assignment '" + kind + "'");
}

Json ValuesToJson(std::vector<std::pair<std::string, Rational>> const &values)
{
  auto out = Json::array();
  for (auto const &[name, value] : values)
  {
    out.push_back(Json::array({name, ToJson(value)}));
  }
  return out;
}

Json OptionalProfile(std::optional<Profile> const &profile)
{
  return profile ? ToJson(*profile) : Json(nullptr);
}

Json BoundsToJson(UtilityBounds const &bounds)
{
  return {{"sup", ToJson(bounds.sup)},
          {"inf", ToJson(bounds.inf)},
          {"sup_realizer", OptionalProfile(bounds.sup_realizer)},
          {"inf_realizer", OptionalProfile(bounds.inf_realizer)}};
}

std::optional<Profile> OptionalProfileFromJson(Json const &json, char const *key,
                                              MarketConfig const &config)
{
  if (!json.contains(key) || json.at(key).is_null())
  {
    return std::nullopt;
  }
  return ProfileFromJson(json.at(key), config);
}

UtilityBounds BoundsFromJson(Json const &json, MarketConfig const &config)
{
  return {RationalFromJson(Field(json, "sup")), RationalFromJson(Field(json, "inf")),
          OptionalProfileFromJson(json, "sup_realizer", config),
          OptionalProfileFromJson(json, "inf_realizer", config)};
}

std::pair<std::string, std::string> SplitOnce(std::string_view text, char separator)
{
  auto const at = text.find(separator);
  if (at == std::string_view::npos)
  {
    return {std::string(text), {}};
  }
  return {std::string(text.substr(0, at)), std::string(text.substr(at + 1))};
}

}  // namespace

Json ToJson(Rational const &value)
{
  return value.ToString();
}

Rational RationalFromJson(Json const &json)
{
  if (json.is_string())
  {
    return ParseRational(json.get<std::string>());
  }
  if (json.is_number_integer())
  {
    return Rational(json.get<std::int64_t>());
  }
  throw UsageError("rational must be a string such as \"3/2\" or an integer");
}

Json ToJson(Profile const &profile)
{
  auto out = Json::array();
  for (auto const &v : profile.values())
  {
    out.push_back(ToJson(v));
  }
  return out;
}

Profile ProfileFromJson(Json const &json, MarketConfig const &config)
{
  if (!json.is_array())
  {
    throw UsageError("profile must be an array of rationals");
  }
  Values values;
  for (auto const &v : json)
  {
    values.push_back(RationalFromJson(v));
  }
  return Profile(config, std::move(values));
}

Json ToJson(Bundle const &bundle)
{
  return Json::array({bundle.object ? 1 : 0, ToJson(bundle.transfer)});
}

Json ToJson(Allocation const &allocation)
{
  auto out = Json::array();
  for (auto const &b : allocation.bundles)
  {
    out.push_back(ToJson(b));
  }
  return out;
}

Json ToJson(Witness const &witness)
{
  auto agents = Json::array();
  for (auto const i : witness.agents)
  {
    agents.push_back(i + 1);
  }
  return {{"profile", ToJson(witness.profile)},
          {"agents", agents},
          {"misreport", witness.misreport ? ToJson(*witness.misreport) : Json(nullptr)},
          {"values", ValuesToJson(witness.values)}};
}

Witness WitnessFromJson(Json const &json, MarketConfig const &config)
{
  Witness w{ProfileFromJson(Field(json, "profile"), config), {}, std::nullopt, {}};
  for (auto const &agent : Field(json, "agents"))
  {
    w.agents.push_back(AgentFromJson(agent, config));
  }
  if (json.contains("misreport") && !json.at("misreport").is_null())
  {
    w.misreport = RationalFromJson(json.at("misreport"));
  }
  for (auto const &pair : Field(json, "values"))
  {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string())
    {
      throw UsageError("witness values must be [name, rational] pairs");
    }
    w.values.emplace_back(pair[0].get<std::string>(), RationalFromJson(pair[1]));
  }
  return w;
}

Json ToJson(ObviousManipulationWitness const &w)
{
  return {{"agent", w.agent + 1},
          {"true_value", ToJson(w.true_value)},
          {"misreport", ToJson(w.misreport)},
          {"direction", ToString(w.direction)},
          {"truthful_bound", ToJson(w.truthful_bound)},
          {"misreport_bound", ToJson(w.misreport_bound)},
          {"truthful_realizer", OptionalProfile(w.truthful_realizer)},
          {"misreport_realizer", OptionalProfile(w.misreport_realizer)},
          {"grid_relative", w.grid_relative}};
}

ObviousManipulationWitness ManipulationFromJson(Json const &json, MarketConfig const &config)
{
  auto const &grid_relative = Field(json, "grid_relative");
  if (!grid_relative.is_boolean())
  {
    throw UsageError("grid_relative must be a boolean");
  }
  return {AgentFromJson(Field(json, "agent"), config),
          RationalFromJson(Field(json, "true_value")),
          RationalFromJson(Field(json, "misreport")),
          ParseDirection(Text(json, "direction")),
          RationalFromJson(Field(json, "truthful_bound")),
          RationalFromJson(Field(json, "misreport_bound")),
          OptionalProfileFromJson(json, "truthful_realizer", config),
          OptionalProfileFromJson(json, "misreport_realizer", config),
          grid_relative.get<bool>()};
}

Json ToJson(AxiomReport const &report)
{
  Json out = {{"axiom", ToString(report.axiom)},
              {"verdict", ToString(report.verdict)},
              {"profiles_checked", report.profiles_checked},
              {"grid_relative", report.grid_relative},
              {"seed", report.seed ? Json(*report.seed) : Json(nullptr)},
              {"witness", report.witness ? ToJson(*report.witness) : Json(nullptr)},
              {"manipulation", report.manipulation ? ToJson(*report.manipulation) : Json(nullptr)},
              {"note", report.note}};
  auto bounds = Json::array();
  for (auto const &row : report.bounds)
  {
    bounds.push_back(
        {{"agent", row.agent + 1}, {"value", ToJson(row.value)}, {"bounds", BoundsToJson(row.bounds)}});
  }
  out["bounds"] = std::move(bounds);
  return out;
}

AxiomReport AxiomReportFromJson(Json const &json, MarketConfig const &config)
{
  AxiomReport report;
  report.axiom   = ParseAxiom(Text(json, "axiom"));
  report.verdict = ParseVerdict(Text(json, "verdict"));
  if (json.contains("profiles_checked"))
  {
    report.profiles_checked = json.at("profiles_checked").get<std::uint64_t>();
  }
  if (json.contains("grid_relative"))
  {
    report.grid_relative = json.at("grid_relative").get<bool>();
  }
  if (json.contains("seed") && !json.at("seed").is_null())
  {
    report.seed = json.at("seed").get<std::uint64_t>();
  }
  if (json.contains("witness") && !json.at("witness").is_null())
  {
    report.witness = WitnessFromJson(json.at("witness"), config);
  }
  if (json.contains("manipulation") && !json.at("manipulation").is_null())
  {
    report.manipulation = ManipulationFromJson(json.at("manipulation"), config);
  }
  if (json.contains("note"))
  {
    report.note = json.at("note").get<std::string>();
  }
  if (json.contains("bounds"))
  {
    for (auto const &row : json.at("bounds"))
    {
      report.bounds.push_back({AgentFromJson(Field(row, "agent"), config),
                               RationalFromJson(Field(row, "value")),
                               BoundsFromJson(Field(row, "bounds"), config)});
    }
  }
  return report;
}

Json ToJson(ValidityReport const &report)
{
  return {{"verdict", ToString(report.verdict)},
          {"condition", report.condition ? Json(*report.condition) : Json(nullptr)},
          {"profile", OptionalProfile(report.profile)},
          {"agent", report.agent ? Json(*report.agent + 1) : Json(nullptr)},
          {"misreport", report.misreport ? ToJson(*report.misreport) : Json(nullptr)},
          {"profiles_checked", report.profiles_checked},
          {"detail", report.detail}};
}

Json ToJson(WelfareComparison const &comparison)
{
  return {{"relation", ToString(comparison.relation)},
          {"first_gain", comparison.first_gain ? ToJson(*comparison.first_gain) : Json(nullptr)},
          {"first_loss", comparison.first_loss ? ToJson(*comparison.first_loss) : Json(nullptr)},
          {"gain_points", comparison.gain_points},
          {"loss_points", comparison.loss_points},
          {"profiles_checked", comparison.profiles_checked}};
}

Json ToJson(SuiteResult const &suite)
{
  auto rows = Json::array();
  for (std::size_t r = 0; r < suite.cells.size(); ++r)
  {
    auto cells = Json::array();
    for (std::size_t c = 0; c < suite.cells[r].size(); ++c)
    {
      auto cell        = ToJson(suite.cells[r][c]);
      cell["expected"] = suite.expected[r][c] ? "PASS" : "FAIL";
      cell["matches"]  = suite.CellMatches(r, c);
      cells.push_back(std::move(cell));
    }
    rows.push_back({{"mechanism", suite.mechanisms[r]}, {"cells", std::move(cells)}});
  }
  auto checks = Json::array();
  for (auto const &check : suite.checks)
  {
    checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  auto axioms = Json::array();
  for (auto const axiom : suite.axioms)
  {
    axioms.push_back(ToString(axiom));
  }
  return {{"schema", 1},        {"suite", suite.name}, {"axioms", std::move(axioms)},
          {"rows", std::move(rows)}, {"checks", std::move(checks)}, {"matches", suite.Matches()}};
}

Mechanism MechanismFromJson(Json const &spec, MarketConfig const &config)
{
  auto const family = Upper(Text(spec, "family"));
  if (family == "VICKREY")
  {
    return Mechanism::Vickrey();
  }
  if (family == "EFFICIENT_VICKREY")
  {
    return Mechanism::EfficientVickrey();
  }
  if (family == "PAY_AS_BID")
  {
    return Mechanism::PayAsBid();
  }
  if (family == "NO_TRADE")
  {
    return Mechanism::NoTrade(spec.contains("fee") ? RationalFromJson(spec.at("fee")) : Rational{});
  }
  if (family == "TAU_VICKREY_NO_TRADE")
  {
    return Mechanism::TauVickreyNoTrade(WsfFromJson(Field(spec, "wsf"), config));
  }
  if (family == "EV_PAB")
  {
    return Mechanism::EvPab(AssignmentFromJson(Field(spec, "assignment"), config));
  }
  throw UsageError("unknown mechanism family '" + family + "'");
}

Json ParseMechanismSpec(std::string_view text)
{
  if (!text.empty() && text.front() == '{')
  {
    auto json = Json::parse(text, nullptr, false);
    if (json.is_discarded())
    {
      throw UsageError("mechanism spec is not valid JSON");
    }
    return json;
  }
  auto const [family, parameter] = SplitOnce(text, ':');
  auto const [key, value]        = SplitOnce(parameter, '=');

  if (family == "vickrey" || family == "efficient_vickrey" || family == "pay_as_bid")
  {
    if (!parameter.empty())
    {
      throw UsageError("'" + family + "' takes no parameters");
    }
    return {{"family", Upper(family)}};
  }
  if (family == "no_trade")
  {
    if (parameter.empty())
    {
      return {{"family", "NO_TRADE"}};
    }
    if (key != "fee")
    {
      throw UsageError("no_trade accepts only fee=<rational>");
    }
    return {{"family", "NO_TRADE"}, {"fee", ParseRational(value).ToString()}};
  }
  if (family == "tau_vnt")
  {
    Json wsf;
    if (key == "empty" || key == "strict" || key == "efficient")
    {
      static constexpr std::pair<std::string_view, std::string_view> kKinds[] = {
          {"empty", "EMPTY"}, {"strict", "STRICT_WINNERS"}, {"efficient", "EFFICIENT_WINNERS"}};
      for (auto const &[short_name, kind] : kKinds)
      {
        if (key == short_name)
        {
          wsf = {{"kind", kind}};
        }
      }
    }
    else if (key == "dictatorial")
    {
      auto const [agent, threshold] = SplitOnce(value, '@');
      if (agent.empty() || threshold.empty() ||
          !std::all_of(agent.begin(), agent.end(), [](unsigned char c) { return std::isdigit(c); }))
      {
        throw UsageError("expected tau_vnt:dictatorial=<agent>@<threshold>");
      }
      wsf = {{"kind", "DICTATORIAL_THRESHOLD"},
             {"agent", std::stoi(agent)},
             {"threshold", ParseRational(threshold).ToString()}};
    }
    else
    {
      throw UsageError("tau_vnt needs empty, strict, efficient or dictatorial=<agent>@<q>");
    }
    return {{"family", "TAU_VICKREY_NO_TRADE"}, {"wsf", wsf}};
  }
  if (family == "ev_pab")
  {
    Json assignment;
    if (key == "always_ev" || key == "ev_iff_price_zero")
    {
      assignment = {{"kind", Upper(key)}};
    }
    else if (key == "threshold")
    {
      assignment = {{"kind", "THRESHOLD"}, {"cutoff", ParseRational(value).ToString()}};
    }
    else
    {
      throw UsageError("ev_pab needs always_ev, ev_iff_price_zero or threshold=<q>");
    }
    return {{"family", "EV_PAB"}, {"assignment", assignment}};
  }
  throw UsageError("unknown mechanism '" + family + "'");
}

Values ParseValues(std::string_view text)
{
  Values out;
  while (true)
  {
    auto const comma = text.find(',');
    auto const item  = text.substr(0, comma);
    out.push_back(ParseRational(item));
    if (comma == std::string_view::npos)
    {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace mechlab
