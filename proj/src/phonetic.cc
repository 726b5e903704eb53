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


#include "qanoise/phonetic.h"

#include <algorithm>
#include <cstdlib>

#include "qanoise/errors.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

bool IsVowelLetter(char32_t c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsVowelAt(const std::u32string& w, std::size_t i) {
  return IsVowelLetter(w[i]) || (w[i] == 'y' && i > 0);
}

std::string Upper(char32_t c) {
  std::string s;
  AppendUtf8(ToUpper(c), s);
  return s;
}

std::vector<std::string> BuiltinEncode(std::u32string w) {
  // Doubled letters.
  w.erase(std::unique(w.begin(), w.end()), w.end());

  // Silent final e.
  if (w.size() > 2 && w.back() == 'e' && !IsVowelAt(w, w.size() - 2)) {
    bool earlier_vowel = false;
    for (std::size_t i = 0; i + 2 < w.size(); ++i) {
      earlier_vowel = earlier_vowel || IsVowelAt(w, i);
    }
    if (earlier_vowel) w.pop_back();
  }

  std::vector<std::string> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = w[i];
    const char32_t next = i + 1 < n ? w[i + 1] : 0;
    if (IsVowelAt(w, i)) {
      bool front_only = true;
      std::size_t j = i;
      while (j < n && IsVowelAt(w, j)) {
        front_only = front_only && (w[j] == 'e' || w[j] == 'i' || w[j] == 'y');
        ++j;
      }
      out.emplace_back(front_only ? "E" : "A");
      i = j;
      continue;
    }
    std::size_t consumed = 1;
    switch (c) {
      case 'p':
        if (next == 'h') {
          out.emplace_back("F");
          consumed = 2;
        } else {
          out.emplace_back("P");
        }
        break;
      case 's':
        if (next == 'h') {
          out.emplace_back("SH");
          consumed = 2;
        } else {
          out.emplace_back("S");
        }
        break;
      case 'z':
        out.emplace_back("S");
        break;
      case 'c':
        if (next == 'h') {
          out.emplace_back("CH");
          consumed = 2;
        } else if (next == 'k') {
          out.emplace_back("K");
          consumed = 2;
        } else if (next == 'e' || next == 'i' || next == 'y') {
          out.emplace_back("S");
        } else {
          out.emplace_back("K");
        }
        break;
      case 't':
        if (next == 'h') {
          out.emplace_back("TH");
          consumed = 2;
        } else {
          out.emplace_back("T");
        }
        break;
      case 'q':
        out.emplace_back("K");
        if (next == 'u') {
          out.emplace_back("W");
          consumed = 2;
        }
        break;
      case 'k':
        if (i == 0 && next == 'n') {
          out.emplace_back("N");
          consumed = 2;
        } else {
          out.emplace_back("K");
        }
        break;
      case 'w':
        if (i == 0 && next == 'r') {
          out.emplace_back("R");
          consumed = 2;
        } else {
          out.emplace_back("W");
          if (next == 'h') consumed = 2;
        }
        break;
      case 'g':
        if (next == 'h') {
          if (i == 0) out.emplace_back("G");
          consumed = 2;
        } else {
          out.emplace_back("G");
        }
        break;
      case 'x':
        out.emplace_back("K");
        out.emplace_back("S");
        break;
      case 'h': {
        const bool after_vowel = i > 0 && IsVowelAt(w, i - 1);
        const bool before_vowel = i + 1 < n && IsVowelAt(w, i + 1);
        if (!(after_vowel && !before_vowel)) out.emplace_back("H");
        break;
      }
      default:
        out.push_back(Upper(c));
    }
    i += consumed;
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

G2pTable G2pTable::Parse(std::string_view text) {
  G2pTable table;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("g2p table line " + std::to_string(line_no) +
                       ": expected word<TAB>phonemes");
    }
    std::vector<std::string> phonemes;
    for (const std::string& p : SplitString(line.substr(tab + 1), ' ')) {
      if (!p.empty()) phonemes.push_back(p);
    }
    if (phonemes.empty()) {
      throw ParseError("g2p table line " + std::to_string(line_no) +
                       ": empty pronunciation");
    }
    table.Add(line.substr(0, tab), std::move(phonemes));
  }
  return table;
}

G2pTable G2pTable::FromFile(const std::string& path) {
  return Parse(ReadFile(path));
}

void G2pTable::Add(std::string_view word, std::vector<std::string> phonemes) {
  entries_.try_emplace(CaseFold(word), std::move(phonemes));
}

const std::vector<std::string>* G2pTable::Find(std::string_view word) const {
  const auto it = entries_.find(CaseFold(word));
  return it == entries_.end() ? nullptr : &it->second;
}

PhoneticForm PhoneticEncode(std::string_view word, const G2pTable* table) {
  std::u32string letters;
  for (char32_t cp : DecodeUtf8(word)) {
    if (IsLetter(cp)) letters.push_back(ToLower(cp));
  }
  if (letters.empty()) {
    throw ValidationError("cannot encode '" + std::string(word) +
                          "': no letters");
  }
  if (table != nullptr) {
    if (const auto* phonemes = table->Find(word)) {
      return {*phonemes, PhoneticForm::Source::kG2pTable};
    }
  }
  return {BuiltinEncode(std::move(letters)),
          PhoneticForm::Source::kBuiltinEncoder};
}

PhonemeWeights PhonemeWeights::Parse(std::string_view text) {
  PhonemeWeights weights;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    if (cells.size() != 3) {
      throw ParseError("phoneme weights line " + std::to_string(line_no) +
                       ": expected ph1<TAB>ph2<TAB>cost");
    }
    char* end = nullptr;
    const double cost = std::strtod(cells[2].c_str(), &end);
    if (end == cells[2].c_str() || cost < 0.0) {
      throw ParseError("phoneme weights line " + std::to_string(line_no) +
                       ": bad cost '" + cells[2] + "'");
    }
    if (cells[0] == "*" && cells[1] == "*") {
      weights.set_indel(cost);
    } else {
      weights.Set(cells[0], cells[1], cost);
    }
  }
  return weights;
}

PhonemeWeights PhonemeWeights::FromFile(const std::string& path) {
  return Parse(ReadFile(path));
}

void PhonemeWeights::Set(const std::string& a, const std::string& b,
                         double cost) {
  costs_[{a, b}] = cost;
  costs_[{b, a}] = cost;
}

double PhonemeWeights::Substitution(const std::string& a,
                                    const std::string& b) const {
  if (a == b) return 0.0;
  const auto it = costs_.find({a, b});
  return it == costs_.end() ? 1.0 : it->second;
}

double NormalizedPhonemeDistance(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b,
                                 const PhonemeWeights& weights) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0 && m == 0) return 0.0;
  std::vector<double> prev(m + 1);
  std::vector<double> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = weights.indel() * j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = weights.indel() * i;
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = std::min({prev[j - 1] + weights.Substitution(a[i - 1], b[j - 1]),
                         prev[j] + weights.indel(),
                         cur[j - 1] + weights.indel()});
    }
    std::swap(prev, cur);
  }
  return prev[m] / static_cast<double>(std::max(n, m));
}

}  // namespace qanoise
