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


// Acceptance suite: one PASS/FAIL/WAIVED line per criterion. Exits non-zero
// when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.h"
#include "qanoise/adapters.h"
#include "qanoise/analysis.h"
#include "qanoise/augment.h"
#include "qanoise/dataset.h"
#include "qanoise/metrics.h"
#include "qanoise/misspell_filter.h"
#include "qanoise/noisegen.h"
#include "qanoise/repair.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

namespace fs = std::filesystem;

enum class Verdict { kPass, kFail, kWaived };

struct Outcome {
  Verdict verdict = Verdict::kPass;
  std::string detail;
};

class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ = failed_ || !ok;
  }
  bool failed() const { return failed_; }
  std::string Failures() const {
    std::string out;
    for (const std::string& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

 private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

std::string DataPath(const std::string& name) {
  return std::string(QANOISE_TEST_DATA_DIR) + "/" + name;
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::vector<std::string> Lines(const std::string& path) {
  auto lines = SplitLines(ReadFile(path));
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

// 1. CER/WER against the recursive oracle; BLEU against the frozen
// reference value.
Outcome MetricOracle() {
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const std::string hyp = testing::RandomText(rng, 12);
    std::string ref = testing::RandomText(rng, 12);
    if (testing::OracleWords(ref).empty()) ref = "a" + ref;
    const std::string h = testing::OracleLower(hyp);
    const std::string r = testing::OracleLower(ref);
    const ErrorCounts ce = CharErrors(hyp, ref);
    const ErrorCounts we = WordErrors(hyp, ref);
    check.Expect(ce.edits == testing::OracleDistance(h, r) &&
                     ce.ref_length == r.size(),
                 "CER mismatch on '" + hyp + "' vs '" + ref + "'");
    check.Expect(we.edits == testing::OracleDistance(testing::OracleWords(h),
                                                     testing::OracleWords(r)) &&
                     we.ref_length == testing::OracleWords(r).size(),
                 "WER mismatch on '" + hyp + "' vs '" + ref + "'");
  }
  const auto hyps = Lines(DataPath("bleu_hyp.txt"));
  const auto refs = Lines(DataPath("bleu_ref.txt"));
  const double expected = std::stod(ReadFile(DataPath("bleu_expected.txt")));
  const double bleu = CorpusBleu(hyps, refs).score;
  check.Expect(hyps.size() == 50 && refs.size() == 50, "BLEU fixture size");
  check.Expect(std::abs(bleu - expected) <= 0.1,
               Fmt("BLEU %.4f vs reference %.4f", bleu, expected));
  const double elapsed = Seconds(start);
  check.Expect(elapsed < 10.0, Fmt("runtime %.2fs", elapsed));
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass,
          Fmt("1000 CER/WER pairs exact; BLEU %.2f vs reference %.2f; %.2fs", bleu,
              expected, elapsed)};
}

// 2. QA evaluation on the hand-computed fixture.
Outcome QaSemantics() {
  Checker check;
  std::vector<ContextParagraph> contexts;
  std::vector<QuestionRecord> questions;
  std::map<std::string, std::string> predictions;
  std::vector<std::pair<bool, double>> expected;
  for (const std::string& line : Lines(DataPath("qa_cases.tsv"))) {
    if (line.empty() || line.front() == '#') continue;
    const auto cells = SplitString(line, '\t');
    const std::size_t i = questions.size();
    ContextParagraph c{"c" + std::to_string(i), "", "t"};
    QuestionRecord q{"q" + std::to_string(100 + i), "?", {}, c.context_id};
    for (std::size_t k = 3; k < cells.size(); ++k) {
      if (!c.text.empty()) c.text += " | ";
      q.answers.push_back({cells[k], CodePointCount(c.text)});
      c.text += cells[k];
    }
    predictions[q.qid] = cells[0];
    const std::size_t slash = cells[2].find('/');
    const double f1 = slash == std::string::npos
                          ? std::stod(cells[2])
                          : std::stod(cells[2].substr(0, slash)) /
                                std::stod(cells[2].substr(slash + 1));
    expected.emplace_back(cells[1] == "1", f1);
    contexts.push_back(std::move(c));
    questions.push_back(std::move(q));
  }
  check.Expect(expected.size() == 20, "fixture has 20 cases");
  const QaReport report =
      EvaluateQa(predictions, Dataset(std::move(contexts), std::move(questions)));
  for (std::size_t i = 0; i < expected.size(); ++i) {
    check.Expect(report.questions[i].exact_match == expected[i].first &&
                     std::abs(report.questions[i].f1 - expected[i].second) < 1e-12,
                 "case " + std::to_string(i + 1) + " (" + predictions.at(report.questions[i].qid) + ")");
  }
  const double six = 100 * TokenF1("six touchdowns", "six");
  check.Expect(std::abs(six - 66.67) < 0.005, Fmt("six touchdowns F1 %.4f", six));
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass, Fmt("20 cases exact; EM %.2f F1 %.2f; \"six touchdowns\" vs \"six\" F1 %.2f",
                              report.score.em, report.score.f1, six)};
}

// 3. Key-swap corruption rate, row-wise neighbors and determinism.
Outcome KeySwapGenerator() {
  const auto start = std::chrono::steady_clock::now();
  Checker check;
  std::mt19937_64 rng(99);
  std::vector<std::string> sentences;
  std::size_t words = 0;
  while (words < 10000) {
    std::string s;
    for (int k = 0; k < 20; ++k, ++words) {
      std::string w(1 + rng() % 9, 'a');
      for (char& c : w) c = static_cast<char>('a' + rng() % 26);
      if (rng() % 5 == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
      s += (s.empty() ? "" : " ") + w;
    }
    sentences.push_back(s + "?");
  }
  const KeyboardLayout& qwerty = KeyboardLayout::Qwerty();
  std::size_t changed = 0;
  std::size_t substitutions = 0;
  std::size_t row_neighbors = 0;
  std::string first_run;
  std::string second_run;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::uint64_t seed = RecordSeed(7, std::to_string(i));
    const std::string noisy = KeySwapNoise(sentences[i], {0.25, true}, qwerty, seed);
    first_run += noisy + "\n";
    second_run += KeySwapNoise(sentences[i], {0.25, true}, qwerty, seed) + "\n";
    const auto a = Tokenize(sentences[i]);
    const auto b = Tokenize(noisy);
    check.Expect(a.size() == b.size(), "token count changed");
    for (std::size_t t = 0; t < a.size() && t < b.size(); ++t) {
      if (a[t].kind != TokenKind::kWord) continue;
      if (a[t].surface == b[t].surface) continue;
      ++changed;
      const std::string& x = a[t].surface;
      const std::string& y = b[t].surface;
      check.Expect(x.size() == y.size(), "length changed: " + x + " -> " + y);
      for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
        if (x[k] == y[k]) continue;
        ++substitutions;
        row_neighbors += qwerty.RowAdjacent(x[k], y[k]);
      }
    }
  }
  const double rate = 100.0 * static_cast<double>(changed) / static_cast<double>(words);
  check.Expect(std::abs(rate - 25.0) <= 1.5, Fmt("corruption rate %.2f%%", rate));
  check.Expect(substitutions == changed && row_neighbors == substitutions,
               "substitutions that are not single row-wise neighbor swaps");
  check.Expect(first_run == second_run, "two runs with one seed differ");
  const double elapsed = Seconds(start);
  check.Expect(elapsed < 5.0, Fmt("runtime %.2fs", elapsed));
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass,
          Fmt("rate %.2f%% over %.0f words; 100%% row-wise neighbors; deterministic; %.2fs",
              rate, static_cast<double>(words), elapsed)};
}

// 4. Misspelling classification and filtering examples; the filtered
// Wikipedia list when a copy is supplied.
Outcome FilterReplay() {
  Checker check;
  check.Expect(ClassifyPair("of", "if") == ErrorCategory::kKeySwap, "of/if KeySwap");
  check.Expect(ClassifyPair("type", "tpye") == ErrorCategory::kAdjSwap, "type/tpye AdjSwap");
  check.Expect(ClassifyPair("school", "schol") == ErrorCategory::kDeletion,
               "school/schol Deletion");
  const FilterResult r = FilterLexicon(
      {{"and", "adn"}, {"article", "artical"}, {"receive", "recieve"}}, {});
  check.Expect(r.audit[0].retained, "and/adn retained");
  check.Expect(!r.audit[1].retained, "article/artical discarded");
  check.Expect(!r.audit[2].retained, "receive/recieve discarded");
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  std::string detail = "canonical pairs classified and filtered";
  const char* list = std::getenv("QANOISE_WIKIPEDIA_LIST");
  if (list == nullptr || !fs::exists(list)) {
    return {Verdict::kPass,
            detail + "; list-size comparison WAIVED (set QANOISE_WIKIPEDIA_LIST to "
                     "a saved copy of the Wikipedia list)"};
  }
  const FilterResult full = FilterLexicon(ParseRawMisspellings(ReadFile(list)), {});
  const double pairs = static_cast<double>(full.lexicon.pair_count());
  const double words = static_cast<double>(full.lexicon.word_count());
  const bool within = std::abs(pairs - 1742) <= 174.2 && std::abs(words - 1489) <= 148.9;
  return {within ? Verdict::kPass : Verdict::kFail,
          detail + Fmt("; filtered list: %.0f misspellings for %.0f words "
                       "(target 1742/1489 +-10%%)",
                       pairs, words)};
}

// 5. Repair properties on random instances plus the Lsma case.
Outcome RepairProperties() {
  Checker check;
  std::mt19937_64 rng(5);
  const std::string letters = "abcdelmnorst";
  const auto word = [&] {
    std::string w(2 + rng() % 6, 'a');
    for (char& c : w) c = letters[rng() % letters.size()];
    return w;
  };
  const auto sentence = [&](std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (s.empty() ? "" : " ") + word();
    return s;
  };
  std::size_t edits_seen = 0;
  for (int i = 0; i < 500; ++i) {
    const std::string question = sentence(3 + rng() % 8);
    const std::string context = sentence(5 + rng() % 20);
    std::set<std::string> vocab;
    for (const Token& t : Tokenize(context)) vocab.insert(CaseFold(t.surface));
    std::size_t previous = 0;
    for (double threshold : {0.0, 0.2, 0.35, 0.5, 0.75, 1.0}) {
      RepairOptions options;
      options.threshold = threshold;
      const RepairResult once = ContextRepair(question, context, options);
      check.Expect(ContextRepair(once.text, context, options).text == once.text,
                   "not idempotent: " + question);
      for (const RepairEdit& e : once.edits) {
        check.Expect(vocab.contains(CaseFold(e.replacement)),
                     "replacement outside context: " + e.replacement);
      }
      check.Expect(once.edits.size() >= previous, "edit count fell as threshold rose");
      previous = once.edits.size();
      edits_seen += once.edits.size();
    }
  }
  const RepairResult lama = ContextRepair(
      "Wjat has a Lsma determined yo do?",
      "The Dalai Lama has determined to visit the monastery in 1959.", {});
  check.Expect(lama.edits.size() == 1 && lama.edits[0].replacement == "Lama" &&
                   lama.edits[0].distance == 0.25,
               "Lsma -> Lama at 0.25");
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass,
          Fmt("500 instances x 6 thresholds idempotent, sound, monotone (%.0f edits); "
              "Lsma -> Lama at %.2f",
              static_cast<double>(edits_seen), lama.edits[0].distance)};
}

// 6. Scripted replay of the published MT and ASR examples through the noise
// pipeline.
Outcome PublishedExampleReplay() {
  Checker check;
  const Dataset base = LoadSquad(DataPath("toy_squad.json"));
  const auto mt = LoadEngine(DataPath("table1_mt.json"));
  const auto tts = LoadEngine(DataPath("identity_tts.json"));
  const auto asr = LoadEngine(DataPath("table4_asr.json"));
  AuditLog audit;
  PolicyResources resources;
  resources.mt = mt.get();
  resources.tts = tts.get();
  resources.asr = asr.get();
  resources.audit = &audit;
  resources.retry.sleep = [](std::chrono::milliseconds) {};
  const NoiseRun mt_run =
      NoiseQuestions(base, {ParseNoisePolicy("back_translate:pivot=de")}, resources, 2);
  const NoiseRun asr_run = NoiseQuestions(base, {ParseNoisePolicy("tts_asr")}, resources, 2);
  const auto get = [](const NoiseRun& run, const std::string& qid) {
    const auto it = run.noisy.find(qid);
    return it == run.noisy.end() ? std::string("<missing>") : it->second;
  };
  const std::vector<std::pair<std::string, std::string>> expected = {
      {get(mt_run, "lama1"), "What has a Lama decided to do?"},
      {get(asr_run, "lama1"), "what has a llama determined to do"},
      {get(asr_run, "sb1"), "how many Santa's defense players selected for the Pro Bowl"},
  };
  for (const auto& [got, want] : expected) {
    check.Expect(got == want, "got '" + got + "', want '" + want + "'");
  }
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass, "3 published strings reproduced exactly (MT back-translation, "
                          "2 ASR transcripts)"};
}

// 7. Natural-set statistics and interface noise scores, only with the
// released challenge sets.
Outcome ReleasedDataStatistics() {
  const char* dir = std::getenv("QANOISE_RELEASED_DATA");
  if (dir == nullptr || !fs::exists(fs::path(dir) / "base.json")) {
    return {Verdict::kWaived,
            "released challenge sets not available offline (set "
            "QANOISE_RELEASED_DATA to a directory with base.json and "
            "<synthetic|natural>_<asr|keyboard|translation>.tsv)"};
  }
  Checker check;
  const Dataset base = LoadSquad((fs::path(dir) / "base.json").string());
  struct Cell {
    std::string file;
    double cer, wer, bleu;
  };
  const std::vector<Cell> table = {
      {"synthetic_asr.tsv", 3.96, 16.61, 77.12},
      {"synthetic_keyboard.tsv", 4.11, 23.93, 52.66},
      {"synthetic_translation.tsv", 20.51, 29.36, 58.42},
      {"natural_asr.tsv", 12.96, 30.67, 57.22},
      {"natural_keyboard.tsv", 1.78, 7.42, 85.78},
      {"natural_translation.tsv", 31.89, 43.34, 47.07},
  };
  std::string detail;
  int compared = 0;
  for (const Cell& cell : table) {
    const fs::path path = fs::path(dir) / cell.file;
    if (!fs::exists(path)) continue;
    const ChallengeSet set = LoadChallengeSet(base, path.string());
    const NoiseStatsReport stats = ComputeNoiseStats(set);
    const NoiseScore& s = stats.score;
    ++compared;
    check.Expect(std::abs(s.cer - cell.cer) <= 1.0 && std::abs(s.wer - cell.wer) <= 1.0 &&
                     std::abs(s.bleu - cell.bleu) <= 1.0,
                 cell.file + Fmt(": CER %.2f WER %.2f BLEU %.2f", s.cer, s.wer, s.bleu));
    if (cell.file == "natural_keyboard.tsv") {
      check.Expect(std::abs(stats.pct_diff_ge1 - 51.6) <= 0.5 &&
                       std::abs(stats.pct_diff_ge2 - 25.7) <= 0.5,
                   Fmt("diff>=1 %.2f%% diff>=2 %.2f%%", stats.pct_diff_ge1,
                       stats.pct_diff_ge2));
    }
  }
  check.Expect(compared > 0, "no challenge set files found");
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass, Fmt("%.0f challenge sets within tolerance", compared)};
}

// 8. noise -> stats -> repair -> eval through the CLI binary, repeated and
// with different --jobs values.
Outcome EndToEndDeterminism() {
  Checker check;
  const fs::path root = fs::temp_directory_path() / "qanoise_acceptance_e2e";
  fs::remove_all(root);
  const std::string cli = QANOISE_CLI_PATH;
  const std::string base = DataPath("toy_squad.json");
  const auto run_chain = [&](const std::string& name, int jobs) {
    const fs::path dir = root / name;
    fs::create_directories(dir);
    const std::string d = dir.string();
    const std::string common = cli + " --seed 7 --jobs " + std::to_string(jobs) + " ";
    const std::vector<std::string> commands = {
        common + "noise --base " + base + " --policy key_swap --prob 0.25 --out " + d +
            "/noisy.tsv",
        common + "stats --base " + base + " --challenge " + d + "/noisy.tsv --out " + d +
            "/stats.tsv --rows " + d + "/rows.tsv",
        common + "repair --base " + base + " --challenge " + d +
            "/noisy.tsv --restore-qmark --out " + d + "/repaired.tsv --edits " + d +
            "/edits.tsv",
        common + "eval --gold " + base + " --challenge " + d + "/repaired.tsv --out " + d +
            "/eval.tsv",
    };
    for (const std::string& command : commands) {
      const int rc = std::system((command + " > " + d + "/log.txt 2>&1").c_str());
      check.Expect(rc == 0, "command failed: " + command);
    }
    return dir;
  };
  const fs::path a = run_chain("run_a", 1);
  const fs::path b = run_chain("run_b", 1);
  const fs::path c = run_chain("run_c", 4);
  std::size_t compared = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const std::string file = entry.path().filename().string();
    if (file == "log.txt") continue;
    const std::string ref = ReadFile(entry.path().string());
    check.Expect(fs::exists(b / file) && ReadFile((b / file).string()) == ref,
                 file + " differs between runs");
    check.Expect(fs::exists(c / file) && ReadFile((c / file).string()) == ref,
                 file + " differs between --jobs 1 and 4");
    ++compared;
  }
  check.Expect(compared >= 7, "expected outputs missing");
  if (check.failed()) return {Verdict::kFail, check.Failures()};
  return {Verdict::kPass,
          Fmt("%.0f output files byte-identical across 2 runs and --jobs 1/4",
              static_cast<double>(compared))};
}

}  // namespace
}  // namespace qanoise

int main() {
  using qanoise::Outcome;
  using qanoise::Verdict;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 metric oracle equivalence", qanoise::MetricOracle},
      {"2 QA-eval semantics", qanoise::QaSemantics},
      {"3 key-swap generator", qanoise::KeySwapGenerator},
      {"4 misspelling classification and filter replay", qanoise::FilterReplay},
      {"5 repair properties", qanoise::RepairProperties},
      {"6 published-example pipeline replay", qanoise::PublishedExampleReplay},
      {"7 released-data statistics", qanoise::ReleasedDataStatistics},
      {"8 end-to-end determinism", qanoise::EndToEndDeterminism},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const char* label = outcome.verdict == Verdict::kPass   ? "PASS  "
                        : outcome.verdict == Verdict::kFail ? "FAIL  "
                                                            : "WAIVED";
    failures += outcome.verdict == Verdict::kFail;
    std::printf("%s criterion %s: %s\n", label, name.c_str(), outcome.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
