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
#include "mechlab/mechanisms.hpp"
#include "mechlab/report.hpp"
#include "mechlab/search.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mechlab {

using Json = nlohmann::json;

// JSON encoding. Rationals are canonical strings ("3", "-1/2") and agents are
// 1-based, matching the text output.

Json     ToJson(Rational const &value);
Rational RationalFromJson(Json const &json);

Json    ToJson(Profile const &profile);
Profile ProfileFromJson(Json const &json, MarketConfig const &config);

Json ToJson(Bundle const &bundle);
Json ToJson(Allocation const &allocation);

Json    ToJson(Witness const &witness);
Witness WitnessFromJson(Json const &json, MarketConfig const &config);

Json                       ToJson(ObviousManipulationWitness const &witness);
ObviousManipulationWitness ManipulationFromJson(Json const &json, MarketConfig const &config);

Json        ToJson(AxiomReport const &report);
AxiomReport AxiomReportFromJson(Json const &json, MarketConfig const &config);

Json ToJson(ValidityReport const &report);
Json ToJson(WelfareComparison const &comparison);
Json ToJson(SuiteResult const &suite);

/// Mechanism specification documents, e.g.
///   {"family": "EV_PAB", "assignment": {"kind": "THRESHOLD", "cutoff": "0"}}
/// Throws UsageError on unknown families, kinds or malformed parameters.
Mechanism MechanismFromJson(Json const &spec, MarketConfig const &config);

/// Short command-line form expanded to a specification document:
///   vickrey | efficient_vickrey | pay_as_bid | no_trade[:fee=<q>]
///   tau_vnt:empty | tau_vnt:strict | tau_vnt:efficient | tau_vnt:dictatorial=<agent>@<q>
///   ev_pab:always_ev | ev_pab:ev_iff_price_zero | ev_pab:threshold=<q>
/// Text starting with '{' is parsed as JSON directly.
Json ParseMechanismSpec(std::string_view text);

/// Comma-separated rationals, e.g. "3,2,2" or "1/2,0,1".
Values ParseValues(std::string_view text);

}  // namespace mechlab
