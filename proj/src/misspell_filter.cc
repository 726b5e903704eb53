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


#include "qanoise/misspell_filter.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qanoise/edit_distance.h"
#include "qanoise/errors.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

std::u32string Without(std::u32string_view text, bool (*drop)(char32_t)) {
  std::u32string out;
  for (char32_t cp : text) {
    if (!drop(cp)) out.push_back(cp);
  }
  return out;
}

bool IsApostropheChar(char32_t cp) {
  return cp == '\'' || cp == 0x2019 || cp == 0x2018 || cp == '`';
}

bool KeysAdjacent(char32_t a, char32_t b, const KeyboardLayout& layout,
                  KeyAdjacency adjacency) {
  if (a >= 0x80 || b >= 0x80) return false;
  const char ca = static_cast<char>(a);
  const char cb = static_cast<char>(b);
  return adjacency == KeyAdjacency::kPhysical ? layout.PhysicallyAdjacent(ca, cb)
                                              : layout.RowAdjacent(ca, cb);
}

}  // namespace

std::string_view ErrorCategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kApostrophe: return "Apostrophe";
    case ErrorCategory::kWhitespace: return "Whitespace";
    case ErrorCategory::kDeletion: return "Deletion";
    case ErrorCategory::kSubstitution: return "Substitution";
    case ErrorCategory::kAdjSwap: return "AdjSwap";
    case ErrorCategory::kInsertion: return "Insertion";
    case ErrorCategory::kKeySwap: return "KeySwap";
    case ErrorCategory::kMultiple: return "Multiple";
  }
  return "Multiple";
}

ErrorCategory ParseErrorCategory(std::string_view name) {
  for (ErrorCategory c :
       {ErrorCategory::kApostrophe, ErrorCategory::kWhitespace,
        ErrorCategory::kDeletion, ErrorCategory::kSubstitution,
        ErrorCategory::kAdjSwap, ErrorCategory::kInsertion,
        ErrorCategory::kKeySwap, ErrorCategory::kMultiple}) {
    if (CaseFold(ErrorCategoryName(c)) == CaseFold(name)) return c;
  }
  throw ConfigError("unknown error category '" + std::string(name) + "'");
}

ErrorCategory ClassifyPair(std::string_view correct, std::string_view typed,
                           const KeyboardLayout& layout,
                           KeyAdjacency adjacency) {
  if (correct == typed) {
    throw ValidationError("cannot classify identical spellings '" +
                          std::string(correct) + "'");
  }
  const std::u32string a = DecodeUtf8(correct);
  const std::u32string b = DecodeUtf8(typed);
  if (Without(a, IsApostropheChar) == Without(b, IsApostropheChar)) {
    return ErrorCategory::kApostrophe;
  }
  if (Without(a, IsSpace) == Without(b, IsSpace)) {
    return ErrorCategory::kWhitespace;
  }
  const EditAlignment<char32_t> alignment =
      Align(std::u32string_view(a), std::u32string_view(b),
            /*allow_transpose=*/true);
  if (alignment.cost != 1) return ErrorCategory::kMultiple;
  for (const auto& op : alignment.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
        continue;
      case EditKind::kDelete:
        return ErrorCategory::kDeletion;
      case EditKind::kInsert:
        return ErrorCategory::kInsertion;
      case EditKind::kTranspose:
        return ErrorCategory::kAdjSwap;
      case EditKind::kSubstitute:
        return KeysAdjacent(a[op.source], op.symbol, layout, adjacency)
                   ? ErrorCategory::kKeySwap
                   : ErrorCategory::kSubstitution;
    }
  }
  return ErrorCategory::kMultiple;
}

FilterVerdict JudgePair(const MisspellingPair& pair, const FilterConfig& config,
                        const KeyboardLayout& layout, const G2pTable* g2p) {
  FilterVerdict v;
  v.pair = pair;
  if (pair.word == pair.misspelling) return v;
  v.category = ClassifyPair(pair.word, pair.misspelling, layout,
                            config.adjacency);
  v.category_ok = config.retained_categories.contains(v.category);
  try {
    const PhoneticForm word = PhoneticEncode(pair.word, g2p);
    const PhoneticForm typed = PhoneticEncode(pair.misspelling, g2p);
    v.pron_distance = NormalizedPhonemeDistance(word.phonemes, typed.phonemes,
                                                config.phoneme_weights);
    v.pronunciation_ok = v.pron_distance >= config.pron_threshold;
  } catch (const ValidationError&) {
    v.pronunciation_ok = false;  // nothing to pronounce
  }
  v.retained = v.category_ok && v.pronunciation_ok;
  return v;
}

FilterResult FilterLexicon(const std::vector<MisspellingPair>& raw,
                           const FilterConfig& config,
                           const KeyboardLayout& layout, const G2pTable* g2p) {
  if (config.pron_threshold < 0.0 || config.pron_threshold > 1.0) {
    throw ConfigError("pronunciation threshold must lie in [0, 1]");
  }
  FilterResult result;
  result.audit.reserve(raw.size());
  for (const MisspellingPair& pair : raw) {
    FilterVerdict v = JudgePair(pair, config, layout, g2p);
    if (v.retained) result.lexicon.Add(pair.word, pair.misspelling);
    result.audit.push_back(std::move(v));
  }
  return result;
}

std::string FormatAudit(const std::vector<FilterVerdict>& audit) {
  std::string out = "word\tmisspelling\tcategory\tpron_distance\tverdict\n";
  char buf[32];
  for (const FilterVerdict& v : audit) {
    std::snprintf(buf, sizeof(buf), "%.4f", v.pron_distance);
    out += EscapeTsv(v.pair.word) + "\t" + EscapeTsv(v.pair.misspelling) +
           "\t" + std::string(ErrorCategoryName(v.category)) + "\t" + buf +
           "\t" + (v.retained ? "retain" : "discard") + "\n";
  }
  return out;
}

std::vector<MisspellingPair> ParseWikipediaList(std::string_view text) {
  std::vector<MisspellingPair> pairs;
  for (const std::string& line : SplitLines(text)) {
    const std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    const std::string misspelling(Trim(std::string_view(line).substr(0, arrow)));
    if (misspelling.empty()) continue;
    for (const std::string& correct : SplitString(line.substr(arrow + 2), ',')) {
      const std::string word(Trim(correct));
      if (!word.empty()) pairs.push_back({word, misspelling});
    }
  }
  return pairs;
}

std::vector<MisspellingPair> ParsePairTsv(std::string_view text) {
  std::vector<MisspellingPair> pairs;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    if (cells.size() != 2) {
      throw ParseError("misspelling pairs line " + std::to_string(line_no) +
                       ": expected word<TAB>misspelling");
    }
    pairs.push_back({std::string(Trim(cells[0])), std::string(Trim(cells[1]))});
  }
  return pairs;
}

std::vector<MisspellingPair> ParseRawMisspellings(std::string_view text) {
  std::vector<MisspellingPair> pairs;
  for (const std::string& line : SplitLines(text)) {
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<MisspellingPair> parsed =
        line.find("->") != std::string::npos ? ParseWikipediaList(line)
                                             : ParsePairTsv(line);
    pairs.insert(pairs.end(), parsed.begin(), parsed.end());
  }
  return pairs;
}

std::vector<LabeledPair> ParseLabeledSample(std::string_view text) {
  std::vector<LabeledPair> sample;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    if (cells.size() != 3) {
      throw ParseError("labeled sample line " + std::to_string(line_no) +
                       ": expected word<TAB>misspelling<TAB>label");
    }
    const std::string label = CaseFold(Trim(cells[2]));
    LabeledPair item;
    item.pair = {std::string(Trim(cells[0])), std::string(Trim(cells[1]))};
    if (label == "interface") {
      item.label = HumanLabel::kInterface;
    } else if (label == "non-interface") {
      item.label = HumanLabel::kNonInterface;
    } else {
      throw ParseError("labeled sample line " + std::to_string(line_no) +
                       ": label must be interface or non-interface");
    }
    sample.push_back(std::move(item));
  }
  return sample;
}

double Agreement(const std::vector<bool>& retained,
                 const std::vector<LabeledPair>& sample) {
  if (sample.empty()) throw ValidationError("agreement of an empty sample");
  if (retained.size() != sample.size()) {
    throw ValidationError("verdict count does not match the sample size");
  }
  std::size_t agree = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    agree += retained[i] == (sample[i].label == HumanLabel::kInterface);
  }
  return 100.0 * static_cast<double>(agree) /
         static_cast<double>(sample.size());
}

Calibration CalibrateThreshold(const std::vector<LabeledPair>& sample,
                               FilterConfig config,
                               const KeyboardLayout& layout,
                               const G2pTable* g2p, double step) {
  if (step <= 0.0) throw ConfigError("calibration step must be positive");
  Calibration calibration;
  // Category and distance do not depend on the threshold.
  std::vector<FilterVerdict> base;
  base.reserve(sample.size());
  for (const LabeledPair& item : sample) {
    base.push_back(JudgePair(item.pair, config, layout, g2p));
  }
  const auto steps = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
  for (std::size_t k = 0; k <= steps; ++k) {
    const double threshold = std::min(1.0, static_cast<double>(k) * step);
    std::vector<bool> retained(sample.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      retained[i] = base[i].category_ok && base[i].pair.word != base[i].pair.misspelling &&
                    base[i].pron_distance >= threshold;
    }
    const CalibrationPoint point{threshold, Agreement(retained, sample)};
    calibration.sweep.push_back(point);
    if (k == 0 || point.agreement > calibration.best.agreement) {
      calibration.best = point;
    }
  }
  return calibration;
}

}  // namespace qanoise
