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


#include "qanoise/analysis.h"

#include <algorithm>
#include <cstdio>

#include "qanoise/edit_distance.h"
#include "qanoise/errors.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

bool IsNumberWord(std::string_view folded) {
  static const std::set<std::string, std::less<>> kWords = {
      "zero",     "one",      "two",      "three",     "four",     "five",
      "six",      "seven",    "eight",    "nine",      "ten",      "eleven",
      "twelve",   "thirteen", "fourteen", "fifteen",   "sixteen",  "seventeen",
      "eighteen", "nineteen", "twenty",   "thirty",    "forty",    "fifty",
      "sixty",    "seventy",  "eighty",   "ninety",    "hundred",  "thousand",
      "million",  "billion",  "trillion"};
  return kWords.contains(folded);
}

std::string Percent(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

double Pct(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0
                    : 100.0 * static_cast<double>(part) /
                          static_cast<double>(whole);
}

}  // namespace

std::vector<std::string> WordTokens(std::string_view text) {
  std::vector<std::string> words;
  for (Token& t : Tokenize(text)) {
    if (t.kind == TokenKind::kWord || t.kind == TokenKind::kNumber) {
      words.push_back(std::move(t.surface));
    }
  }
  return words;
}

NoiseStatsReport ComputeNoiseStats(const ChallengeSet& set,
                                   const ErrorRateOptions& cer,
                                   const ErrorRateOptions& wer) {
  if (set.pairs.empty()) {
    throw ValidationError("noise statistics of an empty challenge set");
  }
  NoiseStatsReport report;
  std::vector<std::string> hyps;
  std::vector<std::string> refs;
  std::size_t ge1 = 0;
  std::size_t ge2 = 0;
  for (const auto& [qid, pair] : set.pairs) {
    QuestionNoiseRow row;
    row.qid = qid;
    const std::vector<std::string> clean = WordTokens(pair.clean);
    const std::vector<std::string> noisy = WordTokens(pair.noisy);
    row.clean_words = clean.size();
    for (const auto& op : Align(clean, noisy).ops) {
      row.corrupted_words +=
          op.kind == EditKind::kSubstitute || op.kind == EditKind::kDelete;
    }
    row.char_distance = CharEditDistance(pair.clean, pair.noisy, false);
    ge1 += row.char_distance >= 1;
    ge2 += row.char_distance >= 2;
    report.clean_words += row.clean_words;
    report.corrupted_words += row.corrupted_words;
    report.rows.push_back(std::move(row));
    hyps.push_back(pair.noisy);
    refs.push_back(pair.clean);
  }
  report.questions = set.pairs.size();
  report.word_corruption_rate = Pct(report.corrupted_words, report.clean_words);
  report.pct_diff_ge1 = Pct(ge1, report.questions);
  report.pct_diff_ge2 = Pct(ge2, report.questions);
  report.score = ComputeNoiseScore(hyps, refs, cer, wer);
  return report;
}

std::string StratumPredicate::Name() const {
  switch (kind) {
    case Kind::kContainsToken: return "contains_token:" + token;
    case Kind::kContainsNumeral: return "contains_numeral";
    case Kind::kFlag: return "flag";
  }
  return "flag";
}

bool StratumPredicate::Test(std::string_view qid, std::string_view text) const {
  switch (kind) {
    case Kind::kFlag:
      return flagged.contains(std::string(qid));
    case Kind::kContainsNumeral:
      for (const Token& t : Tokenize(text)) {
        if (t.kind == TokenKind::kNumber) return true;
        if (t.kind == TokenKind::kWord && IsNumberWord(CaseFold(t.surface))) {
          return true;
        }
      }
      return false;
    case Kind::kContainsToken: {
      std::vector<std::string> needle;
      for (Token& t : Tokenize(token)) needle.push_back(std::move(t.surface));
      std::vector<std::string> hay;
      for (Token& t : Tokenize(text)) hay.push_back(std::move(t.surface));
      if (needle.empty()) return false;
      return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
             hay.end();
    }
  }
  return false;
}

StratumPredicate ParsePredicate(std::string_view spec) {
  StratumPredicate p;
  if (spec == "contains_numeral") {
    p.kind = StratumPredicate::Kind::kContainsNumeral;
  } else if (spec.starts_with("contains_token:") &&
             spec.size() > std::string_view("contains_token:").size()) {
    p.kind = StratumPredicate::Kind::kContainsToken;
    p.token = std::string(spec.substr(15));
  } else if (spec.starts_with("flag:") && spec.size() > 5) {
    p.kind = StratumPredicate::Kind::kFlag;
    for (const std::string& line : SplitLines(ReadFile(std::string(spec.substr(5))))) {
      if (Trim(line).empty() || line.front() == '#') continue;
      p.flagged.insert(std::string(Trim(SplitString(line, '\t').front())));
    }
  } else {
    throw ConfigError("unknown predicate '" + std::string(spec) +
                      "' (expected contains_token:<t>, contains_numeral or "
                      "flag:<file>)");
  }
  return p;
}

std::vector<StratumReport> Stratify(
    const Dataset& gold, const std::map<std::string, std::string>& predictions,
    const StratumPredicate& predicate, const ChallengeSet* challenge) {
  const QaReport qa = EvaluateQa(predictions, gold);
  std::vector<StratumReport> strata(2);
  std::vector<QuestionScore> scored[2];
  std::vector<std::string> hyps[2];
  std::vector<std::string> refs[2];
  for (std::size_t i = 0; i < gold.questions().size(); ++i) {
    const QuestionRecord& q = gold.questions()[i];
    const ChallengePair* pair = nullptr;
    if (challenge) {
      const auto it = challenge->pairs.find(q.qid);
      if (it != challenge->pairs.end()) pair = &it->second;
    }
    const std::string& text = pair ? pair->noisy : q.question;
    const int side = predicate.Test(q.qid, text) ? 0 : 1;
    strata[side].qids.push_back(q.qid);
    scored[side].push_back(qa.questions[i]);
    if (pair) {
      hyps[side].push_back(pair->noisy);
      refs[side].push_back(pair->clean);
    }
  }
  for (int side = 0; side < 2; ++side) {
    StratumReport& s = strata[side];
    s.predicate = predicate.Name();
    s.value = side == 0;
    s.n = s.qids.size();
    if (s.n == 0) continue;
    s.qa = Aggregate(scored[side]);
    if (!hyps[side].empty()) s.noise = ComputeNoiseScore(hyps[side], refs[side]);
  }
  return strata;
}

DegradationReport DegradationTable(
    const std::map<std::string, std::map<std::string, QaScore>>& scores) {
  DegradationReport report;
  std::set<std::string> interfaces;
  for (const auto& [system, cells] : scores) {
    for (const auto& [iface, score] : cells) interfaces.insert(iface);
  }
  interfaces.insert(std::string(kBaseInterface));
  // Base first, then the noisy interfaces by name.
  std::vector<std::string> order = {std::string(kBaseInterface)};
  for (const std::string& iface : interfaces) {
    if (iface != kBaseInterface) order.push_back(iface);
  }

  std::vector<std::string> complete;
  for (const auto& [system, cells] : scores) {
    const auto base = cells.find(std::string(kBaseInterface));
    bool all = true;
    for (const std::string& iface : order) {
      DegradationRow row;
      row.system = system;
      row.interface = iface;
      const auto it = cells.find(iface);
      if (it == cells.end()) {
        row.missing = true;
        all = false;
        report.missing_cells.push_back(system + "/" + iface);
      } else {
        row.score = it->second;
        if (base != cells.end()) {
          row.delta_em = it->second.em - base->second.em;
          row.delta_f1 = it->second.f1 - base->second.f1;
        }
      }
      report.rows.push_back(std::move(row));
    }
    if (all) complete.push_back(system);
  }

  for (const std::string& iface : order) {
    std::vector<std::string> ranking = complete;
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&](const std::string& a, const std::string& b) {
                       const double fa = scores.at(a).at(iface).f1;
                       const double fb = scores.at(b).at(iface).f1;
                       if (fa != fb) return fa > fb;
                       return a < b;
                     });
    report.rankings[iface] = std::move(ranking);
  }
  const auto& reference = report.rankings.at(std::string(kBaseInterface));
  for (const auto& [iface, ranking] : report.rankings) {
    report.rank_consistent = report.rank_consistent && ranking == reference;
  }
  return report;
}

std::string FormatDegradationTsv(const DegradationReport& report) {
  std::string out = "system\tinterface\tem\tf1\tdelta_em\tdelta_f1\tflag\n";
  for (const DegradationRow& r : report.rows) {
    out += EscapeTsv(r.system) + "\t" + EscapeTsv(r.interface) + "\t";
    out += (r.score ? Percent(r.score->em) : "") + "\t";
    out += (r.score ? Percent(r.score->f1) : "") + "\t";
    out += (r.delta_em ? Percent(*r.delta_em) : "") + "\t";
    out += (r.delta_f1 ? Percent(*r.delta_f1) : "") + "\t";
    out += r.missing ? "missing" : "";
    out += "\n";
  }
  return out;
}

std::string FormatDegradationText(const DegradationReport& report) {
  std::vector<std::vector<std::string>> cells = {
      {"system", "interface", "EM", "F1", "dEM", "dF1", ""}};
  for (const DegradationRow& r : report.rows) {
    cells.push_back({r.system, r.interface, r.score ? Percent(r.score->em) : "",
                     r.score ? Percent(r.score->f1) : "",
                     r.delta_em ? Percent(*r.delta_em) : "",
                     r.delta_f1 ? Percent(*r.delta_f1) : "",
                     r.missing ? "(missing)" : ""});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], CodePointCount(row[c]));
    }
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::size_t pad = width[c] - CodePointCount(row[c]);
      // Text columns align left, numbers right.
      if (c >= 2 && c <= 5) line += std::string(pad, ' ') + row[c];
      else line += row[c] + std::string(pad, ' ');
      if (c + 1 < row.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  out += "\nranking by F1:\n";
  for (const auto& [iface, ranking] : report.rankings) {
    out += "  " + iface + ":";
    for (const std::string& s : ranking) out += " " + s;
    out += "\n";
  }
  out += std::string("rank consistent: ") +
         (report.rank_consistent ? "yes" : "no") + "\n";
  return out;
}

}  // namespace qanoise
