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

#include "mechlab/audit.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

namespace mechlab {
namespace {

std::vector<Axiom> const kSingleMechanismAxioms = {
    Axiom::kEgalitarianEquivalence, Axiom::kStrategyProofness,  Axiom::kNonObviousManipulability,
    Axiom::kEfficiency,             Axiom::kIndividualRationality, Axiom::kNoSubsidy,
    Axiom::kEnvyFreeness,           Axiom::kAnonymityInWelfare, Axiom::kBestCaseCondition,
};

std::vector<Axiom> const kEfficientNomAxioms = {
    Axiom::kEgalitarianEquivalence, Axiom::kNonObviousManipulability, Axiom::kEfficiency,
    Axiom::kIndividualRationality,  Axiom::kNoSubsidy,                Axiom::kBestCaseCondition,
};

std::uint64_t Count(Json const &document, char const *key, std::uint64_t fallback)
{
  if (!document.contains(key))
  {
    return fallback;
  }
  auto const &value = document.at(key);
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0)
  {
    throw UsageError(std::string("'") + key + "' must be a nonnegative integer");
  }
  return value.get<std::uint64_t>();
}

GridConfig GridFromJson(Json const &json, MarketConfig const &market)
{
  if (!json.is_object())
  {
    throw UsageError("'grid' must be an object");
  }
  if (json.contains("values"))
  {
    Values values;
    for (auto const &v : json.at("values"))
    {
      auto value = RationalFromJson(v);
      if (value.is_negative())
      {
        throw UsageError("grid values must be nonnegative");
      }
      values.push_back(value);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return GridConfig::Explicit(market, std::move(values));
  }
  if (json.contains("max"))
  {
    auto const &max = json.at("max");
    if (!max.is_number_integer())
    {
      throw UsageError("grid 'max' must be an integer");
    }
    auto const denominator = json.contains("denominator") ? json.at("denominator") : Json(1);
    if (!denominator.is_number_integer())
    {
      throw UsageError("grid 'denominator' must be an integer");
    }
    return GridConfig::Range(market, max.get<std::int64_t>(), denominator.get<std::int64_t>());
  }
  throw UsageError("grid needs 'values' or 'max' (with optional 'denominator')");
}

AuditedMechanism MechanismEntry(Json const &spec, MarketConfig const &market)
{
  auto json = spec.is_string() ? ParseMechanismSpec(spec.get<std::string>()) : spec;
  auto f    = MechanismFromJson(json, market);
  return {std::move(json), std::move(f)};
}

bool Shrinkable(Axiom axiom)
{
  return axiom != Axiom::kNonObviousManipulability && axiom != Axiom::kBestCaseCondition &&
         axiom != Axiom::kWelfareCompare;
}

AxiomReport WelfareReport(Mechanism const &f, Mechanism const &baseline, ProfileSpace const &space,
                          Json &extra)
{
  auto const  cmp = CompareWelfare(f, baseline, space);
  AxiomReport report;
  report.axiom            = Axiom::kWelfareCompare;
  report.profiles_checked = cmp.profiles_checked;
  report.note             = "relation to baseline: " + std::string(ToString(cmp.relation));
  if (space.is_sampled())
  {
    report.seed = space.seed();
  }
  if (cmp.first_loss)
  {
    report.verdict = Verdict::kFail;
    report.witness = cmp.first_loss;
  }
  else
  {
    report.verdict = space.is_sampled() ? Verdict::kPassSampled : Verdict::kPassExhaustive;
  }
  extra["comparison"] = ToJson(cmp);
  return report;
}

std::string Describe(Json const &witness)
{
  if (witness.is_null())
  {
    return "";
  }
  std::ostringstream out;
  if (witness.contains("profile"))
  {
    out << "v=(";
    bool first = true;
    for (auto const &v : witness.at("profile"))
    {
      out << (first ? "" : ",") << v.get<std::string>();
      first = false;
    }
    out << ")";
    if (!witness.at("agents").empty())
    {
      out << " agents=" << witness.at("agents").dump();
    }
    if (!witness.at("misreport").is_null())
    {
      out << " misreport=" << witness.at("misreport").get<std::string>();
    }
    for (auto const &pair : witness.at("values"))
    {
      out << " " << pair[0].get<std::string>() << "=" << pair[1].get<std::string>();
    }
  }
  else
  {
    out << "agent " << witness.at("agent").get<int>() << " value "
        << witness.at("true_value").get<std::string>() << " reports "
        << witness.at("misreport").get<std::string>() << ": "
        << witness.at("direction").get<std::string>() << " "
        << witness.at("truthful_bound").get<std::string>() << " -> "
        << witness.at("misreport_bound").get<std::string>();
    if (witness.at("grid_relative").get<bool>())
    {
      out << " (grid-relative)";
    }
  }
  return out.str();
}

std::string Align(std::vector<std::vector<std::string>> const &rows)
{
  std::vector<std::size_t> widths;
  for (auto const &row : rows)
  {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c)
    {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::ostringstream out;
  for (auto const &row : rows)
  {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c)
    {
      line += row[c];
      if (c + 1 < row.size())
      {
        line += std::string(widths[c] - row[c].size() + 2, ' ');
      }
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

AuditConfig ParseAuditConfig(Json const &document, bool require_mechanisms)
{
  if (!document.is_object())
  {
    throw UsageError("config must be a JSON object");
  }
  if (document.contains("schema") && document.at("schema") != 1)
  {
    throw UsageError("unsupported config schema (expected 1)");
  }
  AuditConfig config;
  config.source = document;

  if (!document.contains("market"))
  {
    throw UsageError("config needs 'market' with n and m");
  }
  auto const &market_json = document.at("market");
  if (!market_json.contains("n") || !market_json.contains("m") ||
      !market_json.at("n").is_number_integer() || !market_json.at("m").is_number_integer() ||
      market_json.at("n").get<std::int64_t>() < 0 || market_json.at("m").get<std::int64_t>() < 0)
  {
    throw UsageError("market needs integer n and m");
  }
  MarketConfig const market(market_json.at("n").get<std::size_t>(),
                            market_json.at("m").get<std::size_t>());

  config.grid = GridFromJson(document.contains("grid") ? document.at("grid") : Json(nullptr), market);

  if (document.contains("mechanism"))
  {
    config.mechanisms.push_back(MechanismEntry(document.at("mechanism"), market));
  }
  if (document.contains("mechanisms"))
  {
    for (auto const &spec : document.at("mechanisms"))
    {
      config.mechanisms.push_back(MechanismEntry(spec, market));
    }
  }
  if (require_mechanisms && config.mechanisms.empty())
  {
    throw UsageError("config needs 'mechanism' or 'mechanisms'");
  }
  if (document.contains("baseline"))
  {
    config.baseline = MechanismEntry(document.at("baseline"), market);
  }

  auto const axioms = document.contains("axioms") ? document.at("axioms") : Json("all");
  if (axioms == "all")
  {
    config.axioms = kSingleMechanismAxioms;
    if (config.baseline)
    {
      config.axioms.push_back(Axiom::kWelfareCompare);
    }
  }
  else if (axioms == "efficient_nom")
  {
    config.axioms = kEfficientNomAxioms;
  }
  else if (axioms.is_array())
  {
    for (auto const &name : axioms)
    {
      if (!name.is_string())
      {
        throw UsageError("axiom names must be strings");
      }
      config.axioms.push_back(ParseAxiom(name.get<std::string>()));
    }
  }
  else
  {
    throw UsageError("'axioms' must be a list of names, \"all\" or \"efficient_nom\"");
  }
  if (config.axioms.empty())
  {
    throw UsageError("no axioms requested");
  }
  if (!config.baseline &&
      std::find(config.axioms.begin(), config.axioms.end(), Axiom::kWelfareCompare) !=
          config.axioms.end())
  {
    throw UsageError("WELFARE_COMPARE needs a 'baseline' mechanism");
  }

  auto const mode = document.contains("mode") ? document.at("mode") : Json("exhaustive");
  if (mode == "sampled")
  {
    config.sampled = true;
  }
  else if (mode != "exhaustive")
  {
    throw UsageError("'mode' must be \"exhaustive\" or \"sampled\"");
  }
  config.seed    = Count(document, "seed", 0);
  config.samples = Count(document, "samples", config.samples);
  config.budget  = Count(document, "budget", config.budget);
  if (document.contains("shrink"))
  {
    config.shrink = document.at("shrink").get<bool>();
  }
  if (document.contains("output"))
  {
    auto const &output = document.at("output");
    if (output.contains("json"))
    {
      config.json_path = output.at("json").get<std::string>();
    }
    if (output.contains("text"))
    {
      config.text_path = output.at("text").get<std::string>();
    }
  }
  return config;
}

AuditConfig LoadAuditConfig(std::string const &path, bool require_mechanisms)
{
  std::ifstream in(path);
  if (!in)
  {
    throw UsageError("cannot read config '" + path + "'");
  }
  auto document = Json::parse(in, nullptr, false);
  if (document.is_discarded())
  {
    throw UsageError("config '" + path + "' is not valid JSON");
  }
  return ParseAuditConfig(document, require_mechanisms);
}

ProfileSpace AuditSpace(AuditConfig const &config, unsigned workers)
{
  ProfileSpace::Options options;
  options.budget  = config.budget;
  options.sampled = config.sampled;
  options.samples = config.samples;
  options.seed    = config.seed;
  options.workers = workers;
  return ProfileSpace(config.grid.Space(), options);
}

AuditRun RunAudit(AuditConfig const &config, unsigned workers)
{
  auto const start = std::chrono::steady_clock::now();
  auto const space = AuditSpace(config, workers);

  AuditRun                   run;
  std::map<std::string, int> counts;
  auto                       results = Json::array();
  run.all_pass                       = true;
  for (auto const &[spec, f] : config.mechanisms)
  {
    auto reports = Json::array();
    for (auto const axiom : config.axioms)
    {
      Json        extra = Json::object();
      AxiomReport report;
      if (axiom == Axiom::kWelfareCompare)
      {
        report = WelfareReport(f, config.baseline->mechanism, space, extra);
      }
      else
      {
        report = CheckAxiom(axiom, f, space);
      }
      auto json = ToJson(report);
      json.update(extra);
      if (config.shrink && report.verdict == Verdict::kFail && report.witness && Shrinkable(axiom))
      {
        json["shrunk_witness"] = ToJson(ShrinkWitness(f, axiom, *report.witness, space.grid()));
      }
      run.all_pass = run.all_pass && IsPass(report.verdict);
      ++counts[std::string(ToString(report.verdict))];
      reports.push_back(std::move(json));
    }
    results.push_back({{"mechanism", f.name()}, {"spec", spec}, {"reports", std::move(reports)}});
  }

  Json summary = {{"all_pass", run.all_pass}, {"verdicts", counts}};
  summary["profiles"]        = space.count();
  summary["sampled"]         = space.is_sampled();
  auto const seconds         = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
  run.report                 = {{"schema", 1},
                                {"tool", {{"name", "mechlab"}, {"version", kToolVersion}}},
                                {"config", config.source},
                                {"results", std::move(results)},
                                {"summary", std::move(summary)},
                                {"timing", {{"seconds", seconds.count()}}}};
  run.table = RenderTable(run.report);
  return run;
}

std::string StableDump(Json report)
{
  report.erase("timing");
  return report.dump(2);
}

bool ReplayReport(Json const &report)
{
  auto const config = ParseAuditConfig(report.at("config"));
  auto const grid   = config.grid.Space();
  auto const market = grid.config();
  bool       ok     = true;
  for (std::size_t r = 0; r < report.at("results").size(); ++r)
  {
    auto const &f = config.mechanisms.at(r).mechanism;
    for (auto const &json : report.at("results")[r].at("reports"))
    {
      auto const parsed = AxiomReportFromJson(json, market);
      if (parsed.verdict != Verdict::kFail)
      {
        continue;
      }
      if (parsed.manipulation)
      {
        ok = ok && Replays(f, market, *parsed.manipulation, &grid);
      }
      else if (parsed.axiom == Axiom::kWelfareCompare)
      {
        auto const &w = *parsed.witness;
        auto const  i = w.agents.at(0);
        auto const  u = Utility(f(w.profile)[i], w.profile[i]);
        auto const  b = Utility(config.baseline->mechanism(w.profile)[i], w.profile[i]);
        ok            = ok && u < b && w.Value("utility") == u && w.Value("other_utility") == b;
      }
      else if (parsed.witness)
      {
        ok = ok && Replays(f, parsed.axiom, *parsed.witness, &grid);
        if (json.contains("shrunk_witness"))
        {
          ok = ok && Replays(f, parsed.axiom, WitnessFromJson(json.at("shrunk_witness"), market),
                             &grid);
        }
      }
      else
      {
        ok = false;
      }
    }
  }
  return ok;
}

std::string RenderTable(Json const &report)
{
  std::vector<std::vector<std::string>> rows = {
      {"mechanism", "axiom", "verdict", "checked", "witness"}};
  for (auto const &result : report.at("results"))
  {
    for (auto const &r : result.at("reports"))
    {
      auto witness = !r.at("witness").is_null() ? r.at("witness") : r.at("manipulation");
      if (r.contains("shrunk_witness"))
      {
        witness = r.at("shrunk_witness");
      }
      rows.push_back({result.at("mechanism").get<std::string>(), r.at("axiom").get<std::string>(),
                      r.at("verdict").get<std::string>(),
                      std::to_string(r.at("profiles_checked").get<std::uint64_t>()),
                      Describe(witness)});
    }
  }
  auto out = Align(rows);
  out += report.at("summary").at("all_pass").get<bool>() ? "all verdicts pass\n"
                                                         : "some verdicts do not pass\n";
  return out;
}

std::string RenderSuite(SuiteResult const &suite)
{
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string>              header = {"mechanism"};
  for (auto const axiom : suite.axioms)
  {
    header.emplace_back(ToString(axiom));
  }
  rows.push_back(std::move(header));
  for (std::size_t r = 0; r < suite.cells.size(); ++r)
  {
    std::vector<std::string> row = {suite.mechanisms[r]};
    for (std::size_t c = 0; c < suite.cells[r].size(); ++c)
    {
      auto cell = std::string(ToString(suite.cells[r][c].verdict));
      if (!suite.CellMatches(r, c))
      {
        cell += " (expected " + std::string(suite.expected[r][c] ? "PASS" : "FAIL") + ")";
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  auto out = "suite " + suite.name + "\n" + Align(rows);
  for (auto const &check : suite.checks)
  {
    out += (check.passed ? "  ok    " : "  FAIL  ") + check.name;
    if (!check.detail.empty())
    {
      out += " [" + check.detail + "]";
    }
    out += '\n';
  }
  out += suite.Matches() ? "expected pattern matched\n" : "expected pattern NOT matched\n";
  return out;
}

}  // namespace mechlab
