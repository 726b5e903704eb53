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

#include <array>

namespace qanoise {
namespace {

constexpr std::array<const char*, 20> kOnes = {
    "zero",    "one",     "two",       "three",    "four",
    "five",    "six",     "seven",     "eight",    "nine",
    "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
    "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"};

constexpr std::array<const char*, 10> kTens = {
    "", "", "twenty", "thirty", "forty", "fifty",
    "sixty", "seventy", "eighty", "ninety"};

constexpr std::array<const char*, 5> kScales = {"", "thousand", "million",
                                                "billion", "trillion"};

std::string BelowHundred(unsigned n) {
  if (n < 20) return kOnes[n];
  std::string out = kTens[n / 10];
  if (n % 10) out += std::string("-") + kOnes[n % 10];
  return out;
}

std::string BelowThousand(unsigned n) {
  std::string out;
  if (n >= 100) {
    out = std::string(kOnes[n / 100]) + " hundred";
    n %= 100;
    if (n == 0) return out;
    out += ' ';
  }
  return out + BelowHundred(n);
}

}  // namespace

std::string CardinalToWords(std::uint64_t value) {
  if (value == 0) return "zero";
  std::string out;
  std::uint64_t divisor = 1'000'000'000'000ULL;
  for (int scale = 4; scale >= 0; --scale, divisor /= 1000) {
    const unsigned group = static_cast<unsigned>(value / divisor % 1000);
    if (group == 0) continue;
    if (!out.empty()) out += ' ';
    out += BelowThousand(group);
    if (scale > 0) out += std::string(" ") + kScales[scale];
  }
  return out;
}

std::string YearToWords(std::uint32_t year) {
  const unsigned high = year / 100;
  const unsigned low = year % 100;
  if (year % 1000 == 0) return CardinalToWords(year);
  if (high == 20 && low < 10) return CardinalToWords(year);
  std::string out = BelowHundred(high);
  if (low == 0) return out + " hundred";
  if (low < 10) return out + " oh " + kOnes[low];
  return out + " " + BelowHundred(low);
}

std::optional<std::string> SpellOutDigits(std::string_view digits,
                                          const NumeralOptions& options) {
  if (digits.empty() || digits.size() > 15) return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  if (digits.size() > 1 && digits.front() == '0') {
    std::string out;
    for (char c : digits) {
      if (!out.empty()) out += ' ';
      out += kOnes[c - '0'];
    }
    return out;
  }
  std::uint64_t value = 0;
  for (char c : digits) value = value * 10 + static_cast<unsigned>(c - '0');
  if (options.year_rule && digits.size() == 4 && value >= 1100 &&
      value <= 2099) {
    return YearToWords(static_cast<std::uint32_t>(value));
  }
  return CardinalToWords(value);
}

}  // namespace qanoise
