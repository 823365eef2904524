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

#include "mechlab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace mechlab {
namespace {

using boost::multiprecision::cpp_int;

bool IsDigits(std::string_view text)
{
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Optional sign followed by decimal digits.
cpp_int ParseInteger(std::string_view text, std::string_view whole)
{
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-'))
  {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!IsDigits(text))
  {
    throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
  }
  cpp_int const value{std::string(text)};
  return negative ? cpp_int(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
  if (denominator == 0)
  {
    throw std::domain_error("rational with zero denominator");
  }
  // cpp_rational rejects negative denominators, so move the sign up first.
  if (denominator < 0)
  {
    value_ = Value(-cpp_int(numerator), -cpp_int(denominator));
    return;
  }
  value_ = Value(numerator, denominator);
}

Rational Rational::Parse(std::string_view text)
{
  auto const slash = text.find('/');
  if (slash == std::string_view::npos)
  {
    return Rational(Value(ParseInteger(text, text)));
  }
  auto const denominator_text = text.substr(slash + 1);
  if (!IsDigits(denominator_text))
  {
    throw std::invalid_argument("rational denominator must be a positive integer in '" +
                                std::string(text) + "'");
  }
  auto const numerator   = ParseInteger(text.substr(0, slash), text);
  auto const denominator = cpp_int(std::string(denominator_text));
  if (denominator.is_zero())
  {
    throw std::domain_error("rational with zero denominator in '" + std::string(text) + "'");
  }
  return Rational(Value(numerator, denominator));
}

std::string Rational::ToString() const
{
  // cpp_rational prints "p/q" in lowest terms and "p" for integers.
  return value_.str();
}

Rational &Rational::operator/=(Rational const &rhs)
{
  if (rhs.is_zero())
  {
    throw std::domain_error("rational division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, Rational const &value)
{
  return os << value.ToString();
}

}  // namespace mechlab
