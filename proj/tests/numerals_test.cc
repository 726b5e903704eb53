// Copyright 2026 The qanoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qanoise/numerals.h"

#include <gtest/gtest.h>

namespace qanoise {
namespace {

TEST(CardinalTest, Words) {
  EXPECT_EQ(CardinalToWords(0), "zero");
  EXPECT_EQ(CardinalToWords(13), "thirteen");
  EXPECT_EQ(CardinalToWords(308), "three hundred eight");
  EXPECT_EQ(CardinalToWords(1866), "one thousand eight hundred sixty-six");
  EXPECT_EQ(CardinalToWords(3000000), "three million");
}

TEST(YearTest, PairedReading) {
  EXPECT_EQ(YearToWords(1866), "eighteen sixty-six");
  EXPECT_EQ(YearToWords(1900), "nineteen hundred");
  EXPECT_EQ(YearToWords(1905), "nineteen oh five");
  EXPECT_EQ(YearToWords(2000), "two thousand");
  EXPECT_EQ(YearToWords(2007), "two thousand seven");
  EXPECT_EQ(YearToWords(2019), "twenty nineteen");
}

TEST(SpellOutDigitsTest, YearRuleAndLimits) {
  EXPECT_EQ(SpellOutDigits("1959"), "nineteen fifty-nine");
  EXPECT_EQ(SpellOutDigits("1959", {false}),
            "one thousand nine hundred fifty-nine");
  EXPECT_EQ(SpellOutDigits("3000"), "three thousand");
  EXPECT_EQ(SpellOutDigits("007"), "zero zero seven");
  EXPECT_EQ(SpellOutDigits("1234567890123456"), std::nullopt);
}

}  // namespace
}  // namespace qanoise
