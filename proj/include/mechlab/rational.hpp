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

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mechlab {

/// Exact signed rational in canonical form (denominator > 0, lowest terms),
/// unbounded in size. Thin domain wrapper over boost's cpp_rational that adds
/// strict parsing and the canonical text form used in every file format.
class Rational
{
public:
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value)  // NOLINT(google-explicit-constructor)
    : value_(value)
  {}
  /// Throws std::domain_error on a zero denominator.
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "p", "+p", "-p" and "p/q" with decimal integers and q > 0.
  /// Whitespace is not allowed. Throws std::invalid_argument otherwise.
  static Rational Parse(std::string_view text);

  Value const &value() const noexcept
  {
    return value_;
  }

  bool is_zero() const
  {
    return value_.is_zero();
  }
  bool is_negative() const
  {
    return value_.sign() < 0;
  }
  bool is_positive() const
  {
    return value_.sign() > 0;
  }

  /// Canonical "p/q", or "p" when q == 1.
  std::string ToString() const;

  Rational operator-() const
  {
    return Rational(Value(-value_));
  }

  Rational &operator+=(Rational const &rhs)
  {
    value_ += rhs.value_;
    return *this;
  }
  Rational &operator-=(Rational const &rhs)
  {
    value_ -= rhs.value_;
    return *this;
  }
  Rational &operator*=(Rational const &rhs)
  {
    value_ *= rhs.value_;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  Rational &operator/=(Rational const &rhs);

  friend Rational operator+(Rational lhs, Rational const &rhs)
  {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, Rational const &rhs)
  {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, Rational const &rhs)
  {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, Rational const &rhs)
  {
    return lhs /= rhs;
  }

  friend bool operator==(Rational const &lhs, Rational const &rhs)
  {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(Rational const &lhs, Rational const &rhs)
  {
    auto const c = lhs.value_.compare(rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  explicit Rational(Value value)
    : value_(std::move(value))
  {}

  Value value_;
};

std::ostream &operator<<(std::ostream &os, Rational const &value);

}  // namespace mechlab
