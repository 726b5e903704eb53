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


#ifndef QANOISE_NUMERALS_H_
#define QANOISE_NUMERALS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qanoise {

// English cardinal, e.g. 1866 -> "one thousand eight hundred sixty-six".
// Valid for values below 10^15.
std::string CardinalToWords(std::uint64_t value);

// Reads a year as paired two-digit numbers:
//   1866 -> "eighteen sixty-six", 1900 -> "nineteen hundred",
//   1905 -> "nineteen oh five", 2000 -> "two thousand",
//   2007 -> "two thousand seven", 2019 -> "twenty nineteen".
std::string YearToWords(std::uint32_t year);

struct NumeralOptions {
  bool year_rule = true;  // 4-digit tokens in [1100, 2099] read as years
};

// Spells out one digit run. Runs longer than 15 digits yield nullopt. Runs
// with a leading zero are read digit by digit ("007" -> "zero zero seven").
std::optional<std::string> SpellOutDigits(std::string_view digits,
                                          const NumeralOptions& options = {});

}  // namespace qanoise

#endif  // QANOISE_NUMERALS_H_
