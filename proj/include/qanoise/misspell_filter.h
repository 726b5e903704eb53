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


#ifndef QANOISE_MISSPELL_FILTER_H_
#define QANOISE_MISSPELL_FILTER_H_

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qanoise/keyboard.h"
#include "qanoise/noisegen.h"
#include "qanoise/phonetic.h"

namespace qanoise {

enum class ErrorCategory {
  kApostrophe,
  kWhitespace,
  kDeletion,
  kSubstitution,
  kAdjSwap,
  kInsertion,
  kKeySwap,
  kMultiple,
};

std::string_view ErrorCategoryName(ErrorCategory category);
ErrorCategory ParseErrorCategory(std::string_view name);

enum class KeyAdjacency { kPhysical, kRowWise };

// Assigns a (correct, typed) pair to exactly one category, checking in
// order: apostrophe-only difference, whitespace-only difference, then the
// single edit of a minimal alignment with transposition. A single
// substitution counts as KeySwap when the two keys are adjacent under
// `adjacency`. Any multi-edit pair is kMultiple. Throws ValidationError for
// equal strings.
ErrorCategory ClassifyPair(std::string_view correct, std::string_view typed,
                           const KeyboardLayout& layout = KeyboardLayout::Qwerty(),
                           KeyAdjacency adjacency = KeyAdjacency::kPhysical);

struct FilterConfig {
  std::set<ErrorCategory> retained_categories = {
      ErrorCategory::kDeletion, ErrorCategory::kInsertion,
      ErrorCategory::kAdjSwap, ErrorCategory::kKeySwap};
  PhonemeWeights phoneme_weights;
  // Pairs whose normalized pronunciation distance is below this are
  // treated as pronunciation-preserving and dropped.
  double pron_threshold = 0.25;
  KeyAdjacency adjacency = KeyAdjacency::kPhysical;
};

struct MisspellingPair {
  std::string word;
  std::string misspelling;
};

struct FilterVerdict {
  MisspellingPair pair;
  ErrorCategory category = ErrorCategory::kMultiple;
  double pron_distance = 0.0;
  bool category_ok = false;
  bool pronunciation_ok = false;
  bool retained = false;
};

struct FilterResult {
  MisspellingLexicon lexicon;
  std::vector<FilterVerdict> audit;  // one row per input pair, input order
};

// Two-step filter: keep a pair iff its category is retained and its
// pronunciation distance is at least the threshold. Equal pairs and pairs
// without letters are audited as dropped.
FilterVerdict JudgePair(const MisspellingPair& pair, const FilterConfig& config,
                        const KeyboardLayout& layout, const G2pTable* g2p);
FilterResult FilterLexicon(const std::vector<MisspellingPair>& raw,
                           const FilterConfig& config,
                           const KeyboardLayout& layout = KeyboardLayout::Qwerty(),
                           const G2pTable* g2p = nullptr);

// Audit TSV: word, misspelling, category, pron_distance, verdict.
std::string FormatAudit(const std::vector<FilterVerdict>& audit);

// Wikipedia "For machines" list: `misspelling->correct1, correct2` lines.
std::vector<MisspellingPair> ParseWikipediaList(std::string_view text);
// `word<TAB>misspelling` lines.
std::vector<MisspellingPair> ParsePairTsv(std::string_view text);
// Detects the format per line: lines containing "->" are Wikipedia-style.
std::vector<MisspellingPair> ParseRawMisspellings(std::string_view text);

enum class HumanLabel { kInterface, kNonInterface };

struct LabeledPair {
  MisspellingPair pair;
  HumanLabel label = HumanLabel::kInterface;
};

// `word<TAB>misspelling<TAB>interface|non-interface` lines.
std::vector<LabeledPair> ParseLabeledSample(std::string_view text);

// Percentage of pairs where retained == (label is interface). `retained`
// is parallel to `sample`. Throws ValidationError for an empty sample.
double Agreement(const std::vector<bool>& retained,
                 const std::vector<LabeledPair>& sample);

struct CalibrationPoint {
  double threshold = 0.0;
  double agreement = 0.0;
};

struct Calibration {
  std::vector<CalibrationPoint> sweep;
  CalibrationPoint best;  // lowest threshold among the maxima
};

// Sweeps pron_threshold over [0, 1] in `step` increments.
Calibration CalibrateThreshold(const std::vector<LabeledPair>& sample,
                               FilterConfig config,
                               const KeyboardLayout& layout,
                               const G2pTable* g2p, double step = 0.01);

}  // namespace qanoise

#endif  // QANOISE_MISSPELL_FILTER_H_
