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

#include "mechlab/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mechlab {

inline constexpr char const *kToolVersion = "0.1.0";

struct AuditedMechanism
{
  Json      spec;
  Mechanism mechanism;
};

struct AuditConfig
{
  Json                            source;  // echoed verbatim into the report
  GridConfig                      grid;
  std::vector<AuditedMechanism>   mechanisms;
  std::optional<AuditedMechanism> baseline;  // required by WELFARE_COMPARE
  std::vector<Axiom>              axioms;
  bool                            sampled = false;
  std::uint64_t                   seed    = 0;
  std::uint64_t                   samples = 100'000;
  std::uint64_t                   budget  = kDefaultProfileBudget;
  bool                            shrink  = true;
  std::optional<std::string>      json_path;
  std::optional<std::string>      text_path;
};

/// Validates a config document; throws UsageError with a readable message.
///
/// Axioms are a list of catalog names, or "all" (every catalog axiom, with
/// WELFARE_COMPARE only when a baseline is given), or "efficient_nom" (EE, NOM,
/// EFF, IR, NS, PROP2).
///
/// `require_mechanisms` = false accepts configs that only set the market,
/// grid and mode (used by the compare command).
AuditConfig ParseAuditConfig(Json const &document, bool require_mechanisms = true);
AuditConfig LoadAuditConfig(std::string const &path, bool require_mechanisms = true);

/// The profile space a config describes.
ProfileSpace AuditSpace(AuditConfig const &config, unsigned workers = 1);

struct AuditRun
{
  Json        report;
  std::string table;
  bool        all_pass = false;

  int ExitCode() const
  {
    return all_pass ? 0 : 1;
  }
};

AuditRun RunAudit(AuditConfig const &config, unsigned workers = 1);

/// The report without its "timing" member, for byte comparisons.
std::string StableDump(Json report);

/// Re-runs every FAIL witness of a parsed report against the mechanisms its
/// config echo names. True when all of them reproduce.
bool ReplayReport(Json const &report);

/// Aligned text rendering of a report.
std::string RenderTable(Json const &report);
std::string RenderSuite(SuiteResult const &suite);

}  // namespace mechlab
