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

#include "mechlab/report.hpp"

#include <array>

namespace mechlab {
namespace {

constexpr std::array kVerdictNames{
    std::pair{Verdict::kPassExhaustive, std::string_view{"PASS_EXHAUSTIVE"}},
    std::pair{Verdict::kPassAnalytic, std::string_view{"PASS_ANALYTIC"}},
    std::pair{Verdict::kPassSampled, std::string_view{"PASS_SAMPLED"}},
    std::pair{Verdict::kFail, std::string_view{"FAIL"}},
    std::pair{Verdict::kNotCertified, std::string_view{"NOT_CERTIFIED"}},
    std::pair{Verdict::kNotApplicable, std::string_view{"NOT_APPLICABLE"}},
};

constexpr std::array kAxiomNames{
    std::pair{Axiom::kEgalitarianEquivalence, std::string_view{"EE"}},
    std::pair{Axiom::kStrategyProofness, std::string_view{"SP"}},
    std::pair{Axiom::kNonObviousManipulability, std::string_view{"NOM"}},
    std::pair{Axiom::kEfficiency, std::string_view{"EFF"}},
    std::pair{Axiom::kIndividualRationality, std::string_view{"IR"}},
    std::pair{Axiom::kNoSubsidy, std::string_view{"NS"}},
    std::pair{Axiom::kEnvyFreeness, std::string_view{"EF"}},
    std::pair{Axiom::kAnonymityInWelfare, std::string_view{"AIW"}},
    std::pair{Axiom::kBestCaseCondition, std::string_view{"PROP2"}},
    std::pair{Axiom::kWelfareCompare, std::string_view{"WELFARE_COMPARE"}},
};

template <typename Enum, std::size_t N>
std::string_view NameOf(std::array<std::pair<Enum, std::string_view>, N> const &table, Enum e)
{
  for (auto const &[key, name] : table)
  {
    if (key == e)
    {
      return name;
    }
  }
  return "?";
}

template <typename Enum, std::size_t N>
Enum ValueOf(std::array<std::pair<Enum, std::string_view>, N> const &table, std::string_view text,
             char const *what)
{
  for (auto const &[key, name] : table)
  {
    if (name == text)
    {
      return key;
    }
  }
  throw UsageError("unknown " + std::string(what) + " '" + std::string(text) + "'");
}

}  // namespace

std::string_view ToString(Verdict verdict)
{
  return NameOf(kVerdictNames, verdict);
}

Verdict ParseVerdict(std::string_view text)
{
  return ValueOf(kVerdictNames, text, "verdict");
}

std::string_view ToString(Axiom axiom)
{
  return NameOf(kAxiomNames, axiom);
}

Axiom ParseAxiom(std::string_view text)
{
  return ValueOf(kAxiomNames, text, "axiom");
}

std::string_view ToString(Direction direction)
{
  return direction == Direction::kSup ? "SUP" : "INF";
}

Direction ParseDirection(std::string_view text)
{
  if (text == "SUP")
  {
    return Direction::kSup;
  }
  if (text == "INF")
  {
    return Direction::kInf;
  }
  throw UsageError("unknown direction '" + std::string(text) + "'");
}

std::optional<Rational> Witness::Value(std::string_view name) const
{
  for (auto const &[key, value] : values)
  {
    if (key == name)
    {
      return value;
    }
  }
  return std::nullopt;
}

}  // namespace mechlab
