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


#ifndef QANOISE_TESTS_ORACLES_H_
#define QANOISE_TESTS_ORACLES_H_

// Reference implementations written straight from the definitions. They
// favor obviousness over speed and share no code with the library.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qanoise::testing {

// Levenshtein distance by memoized recursion over suffixes; with
// `transpose`, adjacent swaps cost 1 (optimal string alignment).
template <typename Seq>
std::size_t OracleDistance(const Seq& a, const Seq& b, bool transpose = false) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> d =
      [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    const auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t best = d(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, d(i + 1, j) + 1);
    best = std::min(best, d(i, j + 1) + 1);
    if (transpose && i + 1 < a.size() && j + 1 < b.size() && a[i] == b[j + 1] &&
        a[i + 1] == b[j] && a[i] != b[j]) {
      best = std::min(best, d(i + 2, j + 2) + 1);
    }
    memo[key] = best;
    return best;
  };
  return d(0, 0);
}

inline std::string OracleLower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline std::vector<std::string> OracleWords(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

// Random lowercase/uppercase ASCII strings with spaces, length <= max_len.
inline std::string RandomText(std::mt19937_64& rng, std::size_t max_len) {
  static const std::string kAlphabet = "abcAB   ";
  std::string s(rng() % (max_len + 1), ' ');
  for (char& c : s) c = kAlphabet[rng() % kAlphabet.size()];
  return s;
}

}  // namespace qanoise::testing

#endif  // QANOISE_TESTS_ORACLES_H_
