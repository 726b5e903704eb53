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


#ifndef QANOISE_METRICS_H_
#define QANOISE_METRICS_H_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qanoise/dataset.h"

namespace qanoise {

// ---- QA evaluation -----------------------------------------------------------

struct QuestionScore {
  std::string qid;
  bool exact_match = false;
  double f1 = 0.0;  // in [0, 1]
  bool missing = false;
};

struct QaScore {
  double em = 0.0;  // percentages
  double f1 = 0.0;
  std::size_t n = 0;
  std::size_t missing = 0;  // gold questions without a prediction
  std::size_t extra = 0;    // predictions for unknown qids (ignored)
};

struct QaReport {
  QaScore score;
  std::vector<QuestionScore> questions;  // gold order
};

bool ExactMatch(std::string_view prediction, std::string_view gold);
// Token-multiset F1 after answer normalization. Two answers that both
// normalize to nothing score 1.
double TokenF1(std::string_view prediction, std::string_view gold);

// Max EM/F1 over the gold answers of each question; missing predictions
// score zero. Throws ValidationError for an empty gold set.
QaReport EvaluateQa(const std::map<std::string, std::string>& predictions,
                    const Dataset& gold);
// Aggregate over a subset of questions (already scored).
QaScore Aggregate(const std::vector<QuestionScore>& questions);

// ---- Error rates ---------------------------------------------------------------

struct ErrorRateOptions {
  bool casefold = true;
  bool strip_punctuation = false;
};

inline constexpr ErrorRateOptions kCerDefaults{true, false};
inline constexpr ErrorRateOptions kWerDefaults{true, true};

// Sufficient statistics; corpus rates are total edits / total ref length.
struct ErrorCounts {
  std::size_t edits = 0;
  std::size_t ref_length = 0;

  ErrorCounts& operator+=(const ErrorCounts& other) {
    edits += other.edits;
    ref_length += other.ref_length;
    return *this;
  }
  double Rate() const;  // percentage; throws on an empty reference
};

ErrorCounts CharErrors(std::string_view hyp, std::string_view ref,
                       const ErrorRateOptions& options = kCerDefaults);
ErrorCounts WordErrors(std::string_view hyp, std::string_view ref,
                       const ErrorRateOptions& options = kWerDefaults);
std::vector<std::string> WerWords(std::string_view text,
                                  const ErrorRateOptions& options);

// Percentages. Throw ValidationError when the normalized reference is empty.
double Cer(std::string_view hyp, std::string_view ref,
           const ErrorRateOptions& options = kCerDefaults);
double Wer(std::string_view hyp, std::string_view ref,
           const ErrorRateOptions& options = kWerDefaults);

// ---- BLEU ------------------------------------------------------------------------

// mteval-v13a tokenization as used by sacreBLEU's default "13a" tokenizer.
std::string TokenizeMteval13a(std::string_view line);

struct BleuStats {
  std::array<std::size_t, 4> correct{};
  std::array<std::size_t, 4> total{};
  std::size_t sys_len = 0;
  std::size_t ref_len = 0;

  BleuStats& operator+=(const BleuStats& other);
};

struct BleuOptions {
  bool lowercase = true;
  // Stop at the highest n-gram order that has any hypothesis n-grams, so a
  // corpus of short segments is not forced to zero.
  bool effective_order = true;
};

struct BleuScore {
  double score = 0.0;  // 0..100
  std::array<double, 4> precisions{};
  double brevity_penalty = 1.0;
  std::size_t sys_len = 0;
  std::size_t ref_len = 0;
};

BleuStats SegmentBleuStats(std::string_view hyp, std::string_view ref,
                           const BleuOptions& options = {});
// BLEU-4 with exponential smoothing of zero-count orders and the standard
// brevity penalty.
BleuScore ScoreFromStats(const BleuStats& stats, const BleuOptions& options = {});
// Throws ValidationError for mismatched or empty inputs.
BleuScore CorpusBleu(const std::vector<std::string>& hyps,
                     const std::vector<std::string>& refs,
                     const BleuOptions& options = {});

struct NoiseScore {
  double cer = 0.0;
  double wer = 0.0;
  double bleu = 100.0;
};

// Corpus CER/WER/BLEU of noisy hypotheses against clean references.
NoiseScore ComputeNoiseScore(const std::vector<std::string>& hyps,
                             const std::vector<std::string>& refs,
                             const ErrorRateOptions& cer_options = kCerDefaults,
                             const ErrorRateOptions& wer_options = kWerDefaults);

}  // namespace qanoise

#endif  // QANOISE_METRICS_H_
