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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace mechlab {
namespace {

TEST(RationalTest, ParsesCanonicalForms)
{
  EXPECT_EQ(Rational::Parse("3"), Rational(3));
  EXPECT_EQ(Rational::Parse("+3"), Rational(3));
  EXPECT_EQ(Rational::Parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::Parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::Parse("0/5"), Rational(0));
}

TEST(RationalTest, RejectsMalformedText)
{
  for (char const *bad : {"", "-", "1/", "/2", "1/-2", "1.5", " 1", "1 ", "a", "1/2/3", "--1"})
  {
    EXPECT_THROW(Rational::Parse(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(Rational::Parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, PrintsLowestTerms)
{
  EXPECT_EQ(Rational(6, -4).ToString(), "-3/2");
  EXPECT_EQ(Rational(8, 4).ToString(), "2");
  EXPECT_EQ(Rational(0, 7).ToString(), "0");
  std::ostringstream out;
  out << Rational(1, 3);
  EXPECT_EQ(out.str(), "1/3");
}

TEST(RationalTest, ArithmeticAndOrdering)
{
  Rational const a(1, 2);
  Rational const b(1, 3);
  EXPECT_EQ(a + b, Rational(5, 6));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 6));
  EXPECT_EQ(a / b, Rational(3, 2));
  EXPECT_LT(b, a);
  EXPECT_GT(-b, -a);
  EXPECT_TRUE(Rational(0).is_zero());
  EXPECT_TRUE((-a).is_negative());
  EXPECT_TRUE(a.is_positive());
  EXPECT_THROW(a / Rational(0), std::domain_error);
}

TEST(RationalTest, LargeValuesDoNotOverflow)
{
  Rational x(1);
  for (int k = 0; k < 40; ++k)
  {
    x *= Rational(std::int64_t{1} << 40);
  }
  EXPECT_EQ(Rational::Parse(x.ToString()), x);
  EXPECT_GT(x, Rational(std::numeric_limits<std::int64_t>::max()));
}

// Text round trip over random fractions, checked against cross multiplication.
TEST(RationalTest, RandomRoundTripMatchesCrossMultiplication)
{
  std::mt19937_64                             rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 50);
  for (int k = 0; k < 500; ++k)
  {
    auto const p = num(rng);
    auto const q = den(rng);
    auto const r = num(rng);
    auto const s = den(rng);
    Rational const x(p, q);
    Rational const y(r, s);
    EXPECT_EQ(Rational::Parse(x.ToString()), x);
    EXPECT_EQ(x < y, p * s < r * q);
    EXPECT_EQ(x == y, p * s == r * q);
  }
}

}  // namespace
}  // namespace mechlab
