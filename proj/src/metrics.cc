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


#include "qanoise/metrics.h"

#include <algorithm>
#include <cmath>
#include <regex>
#include <unordered_map>

#include "qanoise/edit_distance.h"
#include "qanoise/errors.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

std::string PrepareForRate(std::string_view text,
                           const ErrorRateOptions& options) {
  std::string s = options.casefold ? CaseFold(text) : std::string(text);
  if (options.strip_punctuation) {
    const std::vector<Token> tokens = Tokenize(s);
    std::vector<bool> remove(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      remove[i] = tokens[i].kind == TokenKind::kPunctuation;
    }
    s = RemoveTokens(s, tokens, remove);
  }
  return s;
}

std::vector<std::string> SplitOnSpaces(std::string_view text) {
  std::vector<std::string> out;
  for (std::string& w : SplitString(CollapseWhitespace(text), ' ')) {
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

// Counts of n-grams of every order 1..4, keyed by the space-joined n-gram.
using NgramCounts = std::array<std::unordered_map<std::string, std::size_t>, 4>;

NgramCounts CountNgrams(const std::vector<std::string>& words) {
  NgramCounts counts;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string gram;
    for (std::size_t n = 0; n < 4 && i + n < words.size(); ++n) {
      if (n) gram += ' ';
      gram += words[i + n];
      ++counts[n][gram];
    }
  }
  return counts;
}

double MyLog(double x) { return x == 0.0 ? -9999999999.0 : std::log(x); }

}  // namespace

bool ExactMatch(std::string_view prediction, std::string_view gold) {
  return NormalizeAnswer(prediction) == NormalizeAnswer(gold);
}

double TokenF1(std::string_view prediction, std::string_view gold) {
  const std::vector<std::string> pred = NormalizeAnswer(prediction);
  const std::vector<std::string> ref = NormalizeAnswer(gold);
  if (pred.empty() || ref.empty()) return pred == ref ? 1.0 : 0.0;
  std::unordered_map<std::string, long> counts;
  for (const std::string& w : ref) ++counts[w];
  std::size_t overlap = 0;
  for (const std::string& w : pred) {
    auto it = counts.find(w);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / pred.size();
  const double recall = static_cast<double>(overlap) / ref.size();
  return 2.0 * precision * recall / (precision + recall);
}

QaScore Aggregate(const std::vector<QuestionScore>& questions) {
  QaScore score;
  score.n = questions.size();
  if (questions.empty()) return score;
  double em = 0.0;
  double f1 = 0.0;
  for (const QuestionScore& q : questions) {
    em += q.exact_match ? 1.0 : 0.0;
    f1 += q.f1;
    score.missing += q.missing;
  }
  score.em = 100.0 * em / static_cast<double>(questions.size());
  score.f1 = 100.0 * f1 / static_cast<double>(questions.size());
  return score;
}

QaReport EvaluateQa(const std::map<std::string, std::string>& predictions,
                    const Dataset& gold) {
  if (gold.questions().empty()) {
    throw ValidationError("cannot evaluate against an empty gold set");
  }
  QaReport report;
  report.questions.reserve(gold.questions().size());
  for (const QuestionRecord& q : gold.questions()) {
    QuestionScore s;
    s.qid = q.qid;
    const auto it = predictions.find(q.qid);
    if (it == predictions.end()) {
      s.missing = true;
    } else {
      for (const Answer& a : q.answers) {
        s.exact_match = s.exact_match || ExactMatch(it->second, a.text);
        s.f1 = std::max(s.f1, TokenF1(it->second, a.text));
      }
    }
    report.questions.push_back(std::move(s));
  }
  report.score = Aggregate(report.questions);
  for (const auto& [qid, answer] : predictions) {
    report.score.extra += gold.FindQuestion(qid) == nullptr;
  }
  return report;
}

double ErrorCounts::Rate() const {
  if (ref_length == 0) throw ValidationError("error rate of an empty reference");
  return 100.0 * static_cast<double>(edits) / static_cast<double>(ref_length);
}

ErrorCounts CharErrors(std::string_view hyp, std::string_view ref,
                       const ErrorRateOptions& options) {
  const std::u32string h = DecodeUtf8(PrepareForRate(hyp, options));
  const std::u32string r = DecodeUtf8(PrepareForRate(ref, options));
  return {Align(std::u32string_view(h), std::u32string_view(r)).cost,
          r.size()};
}

std::vector<std::string> WerWords(std::string_view text,
                                  const ErrorRateOptions& options) {
  return SplitOnSpaces(PrepareForRate(text, options));
}

ErrorCounts WordErrors(std::string_view hyp, std::string_view ref,
                       const ErrorRateOptions& options) {
  const std::vector<std::string> h = WerWords(hyp, options);
  const std::vector<std::string> r = WerWords(ref, options);
  return {Align(h, r).cost, r.size()};
}

double Cer(std::string_view hyp, std::string_view ref,
           const ErrorRateOptions& options) {
  return CharErrors(hyp, ref, options).Rate();
}

double Wer(std::string_view hyp, std::string_view ref,
           const ErrorRateOptions& options) {
  return WordErrors(hyp, ref, options).Rate();
}

std::string TokenizeMteval13a(std::string_view input) {
  std::string line(input);
  const auto replace_all = [&line](std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = line.find(from, pos)) != std::string::npos) {
      line.replace(pos, from.size(), to);
      pos += to.size();
    }
  };
  replace_all("<skipped>", "");
  replace_all("-\n", "");
  replace_all("\n", " ");
  if (line.find('&') != std::string::npos) {
    replace_all("&quot;", "\"");
    replace_all("&amp;", "&");
    replace_all("&lt;", "<");
    replace_all("&gt;", ">");
  }

  // Punctuation and symbols outside [.,'-] and alphanumerics become tokens.
  std::string spaced;
  spaced.reserve(line.size() * 2 + 2);
  spaced += ' ';
  for (char c : line) {
    const unsigned char u = static_cast<unsigned char>(c);
    const bool isolate = (u >= '{' && u <= '~') || (u >= '[' && u <= '`') ||
                         (u >= ' ' && u <= '&') || (u >= '(' && u <= '+') ||
                         (u >= ':' && u <= '@') || u == '/';
    if (isolate) {
      spaced += ' ';
      spaced += c;
      spaced += ' ';
    } else {
      spaced += c;
    }
  }
  spaced += ' ';

  // Periods and commas split unless they sit inside a number; a dash after
  // a digit splits.
  static const std::regex kPeriodCommaAfter("([^0-9])([\\.,])");
  static const std::regex kPeriodCommaBefore("([\\.,])([^0-9])");
  static const std::regex kDashAfterDigit("([0-9])(-)");
  spaced = std::regex_replace(spaced, kPeriodCommaAfter, "$1 $2 ");
  spaced = std::regex_replace(spaced, kPeriodCommaBefore, " $1 $2");
  spaced = std::regex_replace(spaced, kDashAfterDigit, "$1 $2 ");
  return CollapseWhitespace(spaced);
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
  for (std::size_t n = 0; n < 4; ++n) {
    correct[n] += other.correct[n];
    total[n] += other.total[n];
  }
  sys_len += other.sys_len;
  ref_len += other.ref_len;
  return *this;
}

BleuStats SegmentBleuStats(std::string_view hyp, std::string_view ref,
                           const BleuOptions& options) {
  const auto prepare = [&](std::string_view s) {
    std::string text(s);
    if (options.lowercase) text = CaseFold(text);
    return SplitOnSpaces(TokenizeMteval13a(text));
  };
  const std::vector<std::string> h = prepare(hyp);
  const std::vector<std::string> r = prepare(ref);
  BleuStats stats;
  stats.sys_len = h.size();
  stats.ref_len = r.size();
  const NgramCounts hyp_counts = CountNgrams(h);
  const NgramCounts ref_counts = CountNgrams(r);
  for (std::size_t n = 0; n < 4; ++n) {
    stats.total[n] = h.size() > n ? h.size() - n : 0;
    for (const auto& [gram, count] : hyp_counts[n]) {
      const auto it = ref_counts[n].find(gram);
      if (it != ref_counts[n].end()) {
        stats.correct[n] += std::min(count, it->second);
      }
    }
  }
  return stats;
}

BleuScore ScoreFromStats(const BleuStats& stats, const BleuOptions& options) {
  BleuScore out;
  out.sys_len = stats.sys_len;
  out.ref_len = stats.ref_len;
  if (stats.sys_len < stats.ref_len) {
    out.brevity_penalty =
        stats.sys_len > 0
            ? std::exp(1.0 - static_cast<double>(stats.ref_len) /
                                 static_cast<double>(stats.sys_len))
            : 0.0;
  }
  if (std::all_of(stats.correct.begin(), stats.correct.end(),
                  [](std::size_t c) { return c == 0; })) {
    return out;
  }
  double smooth = 1.0;
  std::size_t order = 4;
  for (std::size_t n = 0; n < 4; ++n) {
    if (stats.total[n] == 0) break;
    if (options.effective_order) order = n + 1;
    if (stats.correct[n] == 0) {
      smooth *= 2.0;
      out.precisions[n] = 100.0 / (smooth * static_cast<double>(stats.total[n]));
    } else {
      out.precisions[n] = 100.0 * static_cast<double>(stats.correct[n]) /
                          static_cast<double>(stats.total[n]);
    }
  }
  double log_sum = 0.0;
  for (std::size_t n = 0; n < order; ++n) log_sum += MyLog(out.precisions[n]);
  out.score = out.brevity_penalty *
              std::exp(log_sum / static_cast<double>(order));
  return out;
}

BleuScore CorpusBleu(const std::vector<std::string>& hyps,
                     const std::vector<std::string>& refs,
                     const BleuOptions& options) {
  if (hyps.size() != refs.size()) {
    throw ValidationError("BLEU needs as many hypotheses as references (" +
                          std::to_string(hyps.size()) + " vs " +
                          std::to_string(refs.size()) + ")");
  }
  if (hyps.empty()) throw ValidationError("BLEU of an empty corpus");
  BleuStats total;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    total += SegmentBleuStats(hyps[i], refs[i], options);
  }
  return ScoreFromStats(total, options);
}

NoiseScore ComputeNoiseScore(const std::vector<std::string>& hyps,
                             const std::vector<std::string>& refs,
                             const ErrorRateOptions& cer_options,
                             const ErrorRateOptions& wer_options) {
  if (hyps.size() != refs.size() || hyps.empty()) {
    throw ValidationError("noise score needs equal, non-empty hyp/ref lists");
  }
  ErrorCounts chars;
  ErrorCounts words;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    chars += CharErrors(hyps[i], refs[i], cer_options);
    words += WordErrors(hyps[i], refs[i], wer_options);
  }
  NoiseScore score;
  score.cer = chars.Rate();
  score.wer = words.Rate();
  score.bleu = CorpusBleu(hyps, refs).score;
  return score;
}

}  // namespace qanoise
