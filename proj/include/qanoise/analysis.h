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


#ifndef QANOISE_ANALYSIS_H_
#define QANOISE_ANALYSIS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qanoise/dataset.h"
#include "qanoise/metrics.h"

namespace qanoise {

// ---- Challenge-set statistics -------------------------------------------------

struct QuestionNoiseRow {
  std::string qid;
  std::size_t clean_words = 0;
  std::size_t corrupted_words = 0;
  std::size_t char_distance = 0;  // raw, case-sensitive code points
};

struct NoiseStatsReport {
  std::size_t questions = 0;
  std::size_t clean_words = 0;
  std::size_t corrupted_words = 0;
  double word_corruption_rate = 0.0;  // percentages
  double pct_diff_ge1 = 0.0;
  double pct_diff_ge2 = 0.0;
  NoiseScore score;
  std::vector<QuestionNoiseRow> rows;  // qid order
};

// Counts clean word and number tokens left unmatched by a word-level
// alignment against the noisy tokens (substituted or deleted). Inserted
// noisy tokens do not count. Throws ValidationError for an empty set.
NoiseStatsReport ComputeNoiseStats(const ChallengeSet& set,
                                   const ErrorRateOptions& cer = kCerDefaults,
                                   const ErrorRateOptions& wer = kWerDefaults);

// Word and number tokens of `text`, unchanged.
std::vector<std::string> WordTokens(std::string_view text);

// ---- Stratification ----------------------------------------------------------------

struct StratumPredicate {
  enum class Kind { kContainsToken, kContainsNumeral, kFlag };
  Kind kind = Kind::kContainsNumeral;
  std::string token;               // kContainsToken; may span several tokens
  std::set<std::string> flagged;   // kFlag

  std::string Name() const;
  // True when `text` (or, for kFlag, `qid`) satisfies the predicate.
  bool Test(std::string_view qid, std::string_view text) const;
};

// `contains_token:<t>`, `contains_numeral`, or `flag:<path>` where the file
// lists one qid per line (first TSV column; '#' comments).
StratumPredicate ParsePredicate(std::string_view spec);

struct StratumReport {
  std::string predicate;
  bool value = true;
  std::size_t n = 0;
  std::optional<QaScore> qa;        // absent for an empty stratum
  std::optional<NoiseScore> noise;  // only with a challenge set
  std::vector<std::string> qids;
};

// Splits the gold questions by the predicate: the predicate-true stratum
// first, then its complement. The predicate reads the noisy question when a
// challenge set is given, the gold question otherwise.
std::vector<StratumReport> Stratify(const Dataset& gold,
                                    const std::map<std::string, std::string>& predictions,
                                    const StratumPredicate& predicate,
                                    const ChallengeSet* challenge = nullptr);

// ---- Degradation tables ---------------------------------------------------------------

inline constexpr std::string_view kBaseInterface = "clean";

struct DegradationRow {
  std::string system;
  std::string interface;
  std::optional<QaScore> score;
  std::optional<double> delta_em;  // noisy minus base
  std::optional<double> delta_f1;
  bool missing = false;
};

struct DegradationReport {
  std::vector<DegradationRow> rows;  // system order, base row first
  // Systems ordered by F1 (descending, ties by name) per interface, using
  // only systems scored everywhere.
  std::map<std::string, std::vector<std::string>> rankings;
  bool rank_consistent = true;
  std::vector<std::string> missing_cells;  // "system/interface"
};

// `scores` maps system -> interface -> score; the "clean" interface is the
// base. Every system is expected under every interface seen anywhere.
DegradationReport DegradationTable(
    const std::map<std::string, std::map<std::string, QaScore>>& scores);

std::string FormatDegradationTsv(const DegradationReport& report);
// Aligned plain-text table followed by the rankings.
std::string FormatDegradationText(const DegradationReport& report);

}  // namespace qanoise

#endif  // QANOISE_ANALYSIS_H_
