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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace mechlab;

constexpr int kExitUsage = 2;

void WriteFile(std::string const &path, std::string const &content)
{
  std::ofstream out(path);
  if (!out)
  {
    throw UsageError("cannot write '" + path + "'");
  }
  out << content;
}

int Eval(std::string const &spec, std::string const &profile_text, std::size_t m, bool json)
{
  auto const values = ParseValues(profile_text);
  MarketConfig const config(values.size(), m);
  Profile const      profile(config, values);
  auto const         mechanism_spec = ParseMechanismSpec(spec);
  auto const         f              = MechanismFromJson(mechanism_spec, config);
  auto const         z              = f(profile);
  auto const         utilities      = z.Utilities(profile);
  auto const         reference      = FindReferenceBundle(z, profile);

  if (json)
  {
    auto u = Json::array();
    for (auto const &x : utilities)
    {
      u.push_back(ToJson(x));
    }
    Json out = {{"schema", 1},
                {"mechanism", f.name()},
                {"spec", mechanism_spec},
                {"profile", ToJson(profile)},
                {"m", m},
                {"allocation", ToJson(z)},
                {"utilities", u},
                {"in_tilde_v", InTildeV(profile)},
                {"reference_bundle", reference ? ToJson(*reference) : Json(nullptr)}};
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::string u = "(";
  for (std::size_t i = 0; i < utilities.size(); ++i)
  {
    u += (i == 0 ? "" : ",") + utilities[i].ToString();
  }
  u += ")";
  std::cout << "mechanism:        " << f.name() << '\n'
            << "profile:          " << profile.ToString() << "  (n=" << config.n << ", m=" << m
            << ")\n"
            << "allocation:       " << z.ToString() << '\n'
            << "utilities:        " << u << '\n'
            << "tie class:        " << (InTildeV(profile) ? "yes" : "no") << '\n'
            << "reference bundle: " << (reference ? reference->ToString() : "none") << '\n';
  return 0;
}

int Audit(std::string const &path, bool json, std::string const &out_path, unsigned workers)
{
  auto const config = LoadAuditConfig(path);
  auto const run    = RunAudit(config, workers);
  auto const dump   = run.report.dump(2) + "\n";
  if (config.json_path)
  {
    WriteFile(*config.json_path, dump);
  }
  if (!out_path.empty())
  {
    WriteFile(out_path, dump);
  }
  if (config.text_path)
  {
    WriteFile(*config.text_path, run.table);
  }
  std::cout << (json ? dump : run.table);
  return run.ExitCode();
}

int Suite(std::string const &name, bool json, unsigned workers)
{
  auto const suite = RunSuite(name, workers);
  std::cout << (json ? ToJson(suite).dump(2) + "\n" : RenderSuite(suite));
  return suite.Matches() ? 0 : 1;
}

int Compare(std::string const &a, std::string const &b, std::string const &path, bool json,
            unsigned workers)
{
  auto const config = LoadAuditConfig(path, false);
  auto const market = config.grid.market;
  auto const f      = MechanismFromJson(ParseMechanismSpec(a), market);
  auto const g      = MechanismFromJson(ParseMechanismSpec(b), market);
  auto const space  = AuditSpace(config, workers);
  auto const cmp    = CompareWelfare(f, g, space);
  if (json)
  {
    auto out = ToJson(cmp);
    out["schema"] = 1;
    out["a"]      = f.name();
    out["b"]      = g.name();
    std::cout << out.dump(2) << '\n';
  }
  else
  {
    auto const show = [](char const *label, std::optional<Witness> const &w) {
      if (!w)
      {
        return;
      }
      std::cout << label << w->profile.ToString() << " agent " << w->agents.front() + 1 << ": "
                << w->Value("utility")->ToString() << " vs " << w->Value("other_utility")->ToString()
                << '\n';
    };
    std::cout << f.name() << " vs " << g.name() << ": " << ToString(cmp.relation) << " over "
              << cmp.profiles_checked << " profiles\n";
    show("first strict gain at ", cmp.first_gain);
    show("first strict loss at ", cmp.first_loss);
  }
  return cmp.relation == WelfareRelation::kDominates || cmp.relation == WelfareRelation::kEqual
             ? 0
             : 1;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Exact checks of allocation mechanisms with money on finite valuation grids"};
  app.require_subcommand(1);
  unsigned const workers = WorkersFromEnvironment();

  std::string spec;
  std::string profile;
  std::size_t m    = 1;
  bool        json = false;
  auto       *eval = app.add_subcommand("eval", "Evaluate a mechanism at one profile");
  eval->add_option("--mech", spec, "Mechanism spec (short form or JSON)")->required();
  eval->add_option("--profile", profile, "Comma-separated valuations")->required();
  eval->add_option("--m", m, "Number of objects")->required();
  eval->add_flag("--json", json, "Print JSON");

  std::string config_path;
  std::string out_path;
  auto       *audit = app.add_subcommand("audit", "Run the axiom checks named in a config file");
  audit->add_option("--config", config_path, "Audit config (JSON)")->required();
  audit->add_option("--out", out_path, "Also write the JSON report here");
  audit->add_flag("--json", json, "Print JSON instead of the text table");

  std::string suite_name;
  auto       *suite = app.add_subcommand("suite", "Run a named acceptance suite");
  suite->add_option("name", suite_name, "independence | theorem1 | theorem2 | welfare | examples56")
      ->required();
  suite->add_flag("--json", json, "Print JSON");

  std::string a;
  std::string b;
  auto       *compare = app.add_subcommand("compare", "Pointwise welfare comparison of two mechanisms");
  compare->add_option("--a", a, "First mechanism spec")->required();
  compare->add_option("--b", b, "Second mechanism spec")->required();
  compare->add_option("--config", config_path, "Config with market and grid")->required();
  compare->add_flag("--json", json, "Print JSON");

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::Success const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  try
  {
    if (*eval)
    {
      return Eval(spec, profile, m, json);
    }
    if (*audit)
    {
      return Audit(config_path, json, out_path, workers);
    }
    if (*suite)
    {
      return Suite(suite_name, json, workers);
    }
    return Compare(a, b, config_path, json, workers);
  }
  catch (std::invalid_argument const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (nlohmann::json::exception const &e)
  {
    std::cerr << "error: malformed JSON field: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
