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


#include "qanoise/cli.h"

#include <cstdio>
#include <filesystem>
#include <memory>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "qanoise/adapters.h"
#include "qanoise/analysis.h"
#include "qanoise/augment.h"
#include "qanoise/dataset.h"
#include "qanoise/errors.h"
#include "qanoise/keyboard.h"
#include "qanoise/metrics.h"
#include "qanoise/misspell_filter.h"
#include "qanoise/phonetic.h"
#include "qanoise/repair.h"
#include "qanoise/tagger.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

std::string Fixed(double value, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

// Options that never influence output bytes stay out of the config hash.
const std::set<std::string>& UnhashedOptions() {
  static const std::set<std::string> kNames = {
      "--out", "--edits", "--audit", "--jobs", "--config", "--help",
      "--rows", "--per-question", "--warnings"};
  return kNames;
}

// Options naming input files; their contents, not their paths, are hashed.
const std::set<std::string>& FileOptions() {
  static const std::set<std::string> kNames = {
      "--base",       "--gold",        "--pred",       "--challenge",
      "--lexicon",    "--layout",      "--pos",        "--ne",
      "--context-pos", "--context-ne", "--word-classes", "--mt-config",
      "--tts-config", "--asr-config",  "--spellcheck-config", "--input",
      "--g2p",        "--weights",     "--sample",     "--hyp",
      "--ref",        "--runs",        "--scores"};
  return kNames;
}

// Hash over the subcommand, the effective option values and the contents
// of every input file.
std::string ConfigHash(const CLI::App& sub) {
  std::string canonical = sub.get_name();
  for (const CLI::Option* opt : sub.get_options()) {
    const std::string name = opt->get_name();
    if (name.empty() || UnhashedOptions().contains(name)) continue;
    std::vector<std::string> values = opt->results();
    if (opt->count() == 0) values = {opt->get_default_str()};
    canonical += "\n" + name;
    for (const std::string& v : values) {
      if (FileOptions().contains(name) && !v.empty()) {
        canonical += "\x1f" + HexDigest(Fnv1a64(ReadFile(v)));
      } else {
        canonical += "\x1f" + v;
      }
    }
  }
  return HexDigest(Fnv1a64(canonical));
}

struct RunInfo {
  std::string command;
  std::string config_hash;
  std::uint64_t seed = 0;
  int jobs = 1;

  std::vector<std::string> Header() const {
    return {"tool=qanoise " + std::string(kToolVersion), "command=" + command,
            "config_hash=" + config_hash, "seed=" + std::to_string(seed)};
  }
  std::string HeaderText() const {
    std::string out;
    for (const std::string& h : Header()) out += "# " + h + "\n";
    return out;
  }
  nlohmann::ordered_json Json() const {
    nlohmann::ordered_json j;
    j["tool"] = "qanoise " + std::string(kToolVersion);
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    return j;
  }
};

void WriteReport(const std::string& path, const RunInfo& run,
                 const std::string& body) {
  WriteFile(path, run.HeaderText() + body);
}

void ReportWarnings(const std::vector<RecordWarning>& warnings,
                    std::ostream& err) {
  for (const RecordWarning& w : warnings) {
    err << "warning: " << w.qid << ": " << w.message << "\n";
  }
}

void SaveChallengeSet(const ChallengeSet& set, const std::string& path,
                      const RunInfo& run) {
  WriteFile(path, FormatChallengeSidecar(set, run.Header()));
  nlohmann::ordered_json meta = ProvenanceToJson(set.provenance);
  meta["run"] = run.Json();
  WriteFile(path + ".meta.json", meta.dump(2) + "\n");
}

// ---- Shared option groups ---------------------------------------------------------

struct NoiseResourceArgs {
  std::string lexicon;
  std::string layout;
  std::string pos;
  std::string ne;
  std::string word_classes;
  std::string mt_config;
  std::string tts_config;
  std::string asr_config;
  std::string audit;
  int retries = 3;
  int backoff_ms = 200;

  void Register(CLI::App* sub) {
    sub->add_option("--lexicon", lexicon,
                    "Misspelling lexicon TSV (word<TAB>misspelling)")
        ->check(CLI::ExistingFile);
    sub->add_option("--layout", layout, "Keyboard layout file (default QWERTY)")
        ->check(CLI::ExistingFile);
    sub->add_option("--pos", pos, "POS annotation sidecar keyed by qid")
        ->check(CLI::ExistingFile);
    sub->add_option("--ne", ne, "NE annotation sidecar keyed by qid")
        ->check(CLI::ExistingFile);
    sub->add_option("--word-classes", word_classes,
                    "Word-class lexicon replacing the built-in lists")
        ->check(CLI::ExistingFile);
    sub->add_option("--mt-config", mt_config, "MT adapter config (JSON)")
        ->check(CLI::ExistingFile);
    sub->add_option("--tts-config", tts_config, "TTS adapter config (JSON)")
        ->check(CLI::ExistingFile);
    sub->add_option("--asr-config", asr_config, "ASR adapter config (JSON)")
        ->check(CLI::ExistingFile);
    sub->add_option("--audit", audit, "Write the adapter call log here");
    sub->add_option("--retries", retries, "Attempts per adapter call")
        ->check(CLI::Range(1, 20));
    sub->add_option("--backoff-ms", backoff_ms,
                    "Initial retry backoff in milliseconds")
        ->check(CLI::Range(0, 600000));
  }
};

struct LoadedResources {
  std::optional<KeyboardLayout> layout;
  std::optional<MisspellingLexicon> lexicon;
  std::optional<WordClassLexicon> word_classes;
  std::optional<AnnotationSidecar> pos;
  std::optional<AnnotationSidecar> ne;
  std::unique_ptr<Engine> mt;
  std::unique_ptr<Engine> tts;
  std::unique_ptr<Engine> asr;
  AuditLog audit;
  PolicyResources view;

  explicit LoadedResources(const NoiseResourceArgs& args) {
    if (!args.layout.empty()) layout = KeyboardLayout::FromFile(args.layout);
    if (!args.lexicon.empty()) lexicon = MisspellingLexicon::FromFile(args.lexicon);
    if (!args.word_classes.empty()) {
      word_classes = WordClassLexicon::FromFile(args.word_classes);
    }
    if (!args.pos.empty()) pos = AnnotationSidecar::FromFile(args.pos);
    if (!args.ne.empty()) ne = AnnotationSidecar::FromFile(args.ne);
    if (!args.mt_config.empty()) mt = LoadEngine(args.mt_config);
    if (!args.tts_config.empty()) tts = LoadEngine(args.tts_config);
    if (!args.asr_config.empty()) asr = LoadEngine(args.asr_config);
    view.layout = layout ? &*layout : nullptr;
    view.lexicon = lexicon ? &*lexicon : nullptr;
    view.word_classes = word_classes ? &*word_classes : nullptr;
    view.pos = pos ? &*pos : nullptr;
    view.ne = ne ? &*ne : nullptr;
    view.mt = mt.get();
    view.tts = tts.get();
    view.asr = asr.get();
    view.audit = &audit;
    view.retry.max_attempts = args.retries;
    view.retry.initial_backoff = std::chrono::milliseconds(args.backoff_ms);
  }
};

// Fills in run-level defaults for policies that do not set them.
std::vector<NoisePolicy> ResolvePolicies(const std::vector<std::string>& specs,
                                         double prob, const std::string& pivot,
                                         std::uint64_t seed) {
  CheckLanguageTag(pivot);
  std::vector<NoisePolicy> policies;
  for (const std::string& spec : specs) {
    NoisePolicy policy = ParseNoisePolicy(spec);
    if (policy.kind == NoiseKind::kKeySwap && !policy.params.contains("p")) {
      policy.params["p"] = Fixed(prob, 6);
    }
    if (policy.kind == NoiseKind::kBackTranslate &&
        !policy.params.contains("pivot")) {
      policy.params["pivot"] = pivot;
    }
    if (!policy.seed && IsStochastic(policy.kind)) policy.seed = seed;
    policies.push_back(std::move(policy));
  }
  return policies;
}

void FinishAudit(const LoadedResources& resources, const std::string& path,
                 const RunInfo& run) {
  if (!path.empty()) WriteReport(path, run, resources.audit.Format());
}

// ---- Subcommands ----------------------------------------------------------------------

struct NoiseArgs {
  std::string base;
  std::vector<std::string> policies;
  std::string out;
  double prob = 0.25;
  std::string pivot = "de";
  std::string interface;
  NoiseResourceArgs resources;
};

int CmdNoise(const NoiseArgs& args, const RunInfo& run, std::ostream& out,
             std::ostream& err) {
  const std::vector<NoisePolicy> policies =
      ResolvePolicies(args.policies, args.prob, args.pivot, run.seed);
  LoadedResources resources(args.resources);
  for (const NoisePolicy& p : policies) CheckPolicy(p, resources.view);
  const Dataset base = LoadSquad(args.base);
  NoiseRun noise = NoiseQuestions(base, policies, resources.view, run.jobs);

  Provenance provenance;
  std::set<std::string_view> interfaces;
  for (const NoisePolicy& p : policies) interfaces.insert(InterfaceOf(p.kind));
  provenance.interface_kind =
      !args.interface.empty() ? args.interface
      : interfaces.size() == 1 ? std::string(*interfaces.begin())
                               : "mixed";
  for (const NoisePolicy& p : policies) {
    if (!provenance.generator.empty()) provenance.generator += "+";
    provenance.generator += p.name;
  }
  provenance.parameters["policies"] = nlohmann::ordered_json::array();
  for (const NoisePolicy& p : policies) {
    provenance.parameters["policies"].push_back(NoisePolicyToJson(p));
  }
  provenance.seed = run.seed;
  const ChallengeSet set = PairChallenge(base, noise.noisy, provenance);
  SaveChallengeSet(set, args.out, run);
  FinishAudit(resources, args.resources.audit, run);
  ReportWarnings(noise.warnings, err);
  std::size_t changed = 0;
  for (const auto& [qid, pair] : set.pairs) changed += pair.clean != pair.noisy;
  out << "noised " << set.pairs.size() << " of " << base.questions().size()
      << " questions (" << changed << " changed, "
      << base.questions().size() - set.pairs.size() << " skipped) -> "
      << args.out << "\n";
  return 0;
}

struct EvalArgs {
  std::string gold;
  std::string pred;
  std::string challenge;
  std::string runs;
  std::string scores;
  std::string out;
  std::string per_question;
  bool keep_case = false;
  bool cer_strip_punct = false;
  bool wer_keep_punct = false;
};

std::string MetricRows(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string body = "metric\tvalue\n";
  for (const auto& [k, v] : rows) body += k + "\t" + v + "\n";
  return body;
}

ErrorRateOptions CerOptions(const EvalArgs& a) {
  return {!a.keep_case, a.cer_strip_punct};
}
ErrorRateOptions WerOptions(const EvalArgs& a) {
  return {!a.keep_case, !a.wer_keep_punct};
}

std::map<std::string, std::map<std::string, QaScore>> ReadRuns(
    const std::string& path, const Dataset& gold) {
  std::map<std::string, std::map<std::string, QaScore>> scores;
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(ReadFile(path))) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    if (cells.size() != 3) {
      throw ParseError(path + " line " + std::to_string(line_no) +
                       ": expected system<TAB>interface<TAB>predictions");
    }
    std::filesystem::path pred(cells[2]);
    if (pred.is_relative()) pred = dir / pred;
    scores[cells[0]][cells[1]] =
        EvaluateQa(LoadPredictions(pred.string()), gold).score;
  }
  return scores;
}

std::map<std::string, std::map<std::string, QaScore>> ReadScores(
    const std::string& path) {
  std::map<std::string, std::map<std::string, QaScore>> scores;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(ReadFile(path))) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    QaScore s;
    try {
      if (cells.size() != 4) throw std::invalid_argument("cells");
      s.em = std::stod(cells[2]);
      s.f1 = std::stod(cells[3]);
    } catch (const std::logic_error&) {
      throw ParseError(path + " line " + std::to_string(line_no) +
                       ": expected system<TAB>interface<TAB>em<TAB>f1");
    }
    scores[cells[0]][cells[1]] = s;
  }
  return scores;
}

int CmdEval(const EvalArgs& args, const RunInfo& run, std::ostream& out,
            std::ostream& err) {
  const int modes = !args.pred.empty() + !args.challenge.empty() +
                    !args.runs.empty() + !args.scores.empty();
  if (modes != 1) {
    throw ConfigError("eval needs exactly one of --pred, --challenge, --runs, --scores");
  }
  std::string body;
  if (!args.scores.empty() || !args.runs.empty()) {
    std::map<std::string, std::map<std::string, QaScore>> scores;
    if (!args.scores.empty()) {
      scores = ReadScores(args.scores);
    } else {
      if (args.gold.empty()) throw ConfigError("eval --runs needs --gold");
      scores = ReadRuns(args.runs, LoadSquad(args.gold));
    }
    const DegradationReport report = DegradationTable(scores);
    for (const std::string& cell : report.missing_cells) {
      err << "warning: missing score for " << cell << "\n";
    }
    out << FormatDegradationText(report);
    body = FormatDegradationTsv(report);
  } else {
    if (args.gold.empty()) throw ConfigError("eval needs --gold");
    const Dataset gold = LoadSquad(args.gold);
    if (!args.pred.empty()) {
      const auto predictions = LoadPredictions(args.pred);
      const QaReport report = EvaluateQa(predictions, gold);
      const QaScore& s = report.score;
      if (s.missing > 0) {
        err << "warning: " << s.missing << " of " << s.n
            << " questions have no prediction\n";
      }
      if (s.extra > 0) {
        err << "warning: " << s.extra << " predictions have unknown qids\n";
      }
      body = MetricRows({{"em", Fixed(s.em)},
                         {"f1", Fixed(s.f1)},
                         {"n", std::to_string(s.n)},
                         {"missing", std::to_string(s.missing)},
                         {"extra", std::to_string(s.extra)}});
      out << "EM " << Fixed(s.em) << "  F1 " << Fixed(s.f1) << "  (n=" << s.n
          << ", missing=" << s.missing << ")\n";
      if (!args.per_question.empty()) {
        std::string rows = "qid\tem\tf1\tmissing\n";
        for (const QuestionScore& q : report.questions) {
          rows += EscapeTsv(q.qid) + "\t" + (q.exact_match ? "1" : "0") + "\t" +
                  Fixed(q.f1, 4) + "\t" + (q.missing ? "1" : "0") + "\n";
        }
        WriteReport(args.per_question, run, rows);
      }
    } else {
      const ChallengeSet set = LoadChallengeSet(gold, args.challenge);
      if (set.pairs.empty()) throw ValidationError("challenge set is empty");
      std::vector<std::string> hyps;
      std::vector<std::string> refs;
      for (const auto& [qid, pair] : set.pairs) {
        hyps.push_back(pair.noisy);
        refs.push_back(pair.clean);
      }
      const NoiseScore s =
          ComputeNoiseScore(hyps, refs, CerOptions(args), WerOptions(args));
      body = MetricRows({{"cer", Fixed(s.cer)},
                         {"wer", Fixed(s.wer)},
                         {"bleu", Fixed(s.bleu)},
                         {"n", std::to_string(set.pairs.size())}});
      out << "CER " << Fixed(s.cer) << "  WER " << Fixed(s.wer) << "  BLEU "
          << Fixed(s.bleu) << "  (n=" << set.pairs.size() << ")\n";
    }
  }
  if (!args.out.empty()) WriteReport(args.out, run, body);
  return 0;
}

struct TextMetricsArgs {
  std::string hyp;
  std::string ref;
  std::string out;
  bool keep_case = false;
  bool cer_strip_punct = false;
  bool wer_keep_punct = false;
};

std::vector<std::string> NonCommentLines(const std::string& path) {
  std::vector<std::string> lines = SplitLines(ReadFile(path));
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

int CmdTextMetrics(const TextMetricsArgs& args, const RunInfo& run,
                   std::ostream& out) {
  const std::vector<std::string> hyps = NonCommentLines(args.hyp);
  const std::vector<std::string> refs = NonCommentLines(args.ref);
  const NoiseScore s =
      ComputeNoiseScore(hyps, refs, {!args.keep_case, args.cer_strip_punct},
                        {!args.keep_case, !args.wer_keep_punct});
  out << "CER " << Fixed(s.cer) << "  WER " << Fixed(s.wer) << "  BLEU "
      << Fixed(s.bleu) << "  (n=" << hyps.size() << ")\n";
  if (!args.out.empty()) {
    WriteReport(args.out, run,
                MetricRows({{"cer", Fixed(s.cer)},
                            {"wer", Fixed(s.wer)},
                            {"bleu", Fixed(s.bleu)},
                            {"n", std::to_string(hyps.size())}}));
  }
  return 0;
}

struct RepairArgs {
  std::string base;
  std::string challenge;
  std::string out;
  std::string edits;
  std::string mode = "content_word";
  double threshold = 0.5;
  std::string norm = "max";
  bool restore_qmark = false;
  std::string spellcheck_config;
  std::string pos;
  std::string ne;
  std::string context_pos;
  std::string context_ne;
  std::string word_classes;
  std::string audit;
};

int CmdRepair(const RepairArgs& args, const RunInfo& run, std::ostream& out,
              std::ostream& err) {
  const Dataset base = LoadSquad(args.base);
  ChallengeSet input;
  if (args.challenge.empty()) {
    std::map<std::string, std::string> same;
    for (const QuestionRecord& q : base.questions()) same[q.qid] = q.question;
    input = PairChallenge(base, same, {"clean", "identity", {}, std::nullopt});
  } else {
    input = LoadChallengeSet(base, args.challenge);
  }
  const bool context_repair = args.mode != "none";
  RepairOptions options;
  if (context_repair) options.mode = ParseRepairMode(args.mode);
  options.threshold = args.threshold;
  options.norm = ParseDistanceNorm(args.norm);
  if (options.threshold < 0.0 || options.threshold > 1.0) {
    throw ConfigError("--threshold must lie in [0, 1]");
  }

  std::optional<WordClassLexicon> classes;
  if (!args.word_classes.empty()) classes = WordClassLexicon::FromFile(args.word_classes);
  const auto load = [](const std::string& p) {
    return p.empty() ? std::optional<AnnotationSidecar>()
                     : std::optional<AnnotationSidecar>(AnnotationSidecar::FromFile(p));
  };
  const auto pos = load(args.pos);
  const auto ne = load(args.ne);
  const auto ctx_pos = load(args.context_pos);
  const auto ctx_ne = load(args.context_ne);
  std::unique_ptr<Engine> checker;
  if (!args.spellcheck_config.empty()) checker = LoadEngine(args.spellcheck_config);
  AuditLog audit;

  std::vector<const std::pair<const std::string, ChallengePair>*> items;
  for (const auto& item : input.pairs) items.push_back(&item);
  std::vector<std::string> repaired(items.size());
  std::vector<std::vector<RepairEdit>> edits(items.size());
  std::vector<std::string> warnings(items.size());
  ParallelFor(items.size(), run.jobs, [&](std::size_t i) {
    const std::string& qid = items[i]->first;
    std::string text = items[i]->second.noisy;
    if (checker) {
      CallContext calls;
      calls.qid = qid;
      calls.audit = &audit;
      SpellcheckOutcome checked = SpellcheckRepair(text, *checker, calls);
      if (checked.failed) warnings[i] = checked.warning;
      text = std::move(checked.text);
    }
    if (context_repair) {
      const QuestionRecord& record = *base.FindQuestion(qid);
      const ContextParagraph& context = base.ContextOf(record);
      TaggingContext q_tags;
      TaggingContext c_tags;
      if (classes) q_tags.lexicon = c_tags.lexicon = &*classes;
      const std::size_t q_tokens = Tokenize(text).size();
      const auto usable = [](const std::optional<AnnotationSidecar>& s,
                             const std::string& id, std::size_t n)
          -> const std::vector<TokenAnnotation>* {
        if (!s) return nullptr;
        const auto* a = s->Find(id);
        if (a == nullptr) return nullptr;
        for (const TokenAnnotation& t : *a) {
          if (t.token_index >= n) return nullptr;
        }
        return a;
      };
      q_tags.pos = usable(pos, qid, q_tokens);
      q_tags.ne = usable(ne, qid, q_tokens);
      const std::size_t c_tokens = Tokenize(context.text).size();
      c_tags.pos = usable(ctx_pos, context.context_id, c_tokens);
      c_tags.ne = usable(ctx_ne, context.context_id, c_tokens);
      RepairResult result =
          ContextRepair(text, context.text, options, q_tags, c_tags);
      for (RepairEdit& e : result.edits) e.qid = qid;
      edits[i] = std::move(result.edits);
      text = std::move(result.text);
    }
    if (args.restore_qmark) text = RestoreFinalQuestionMark(text).text;
    repaired[i] = std::move(text);
  });

  std::map<std::string, std::string> noisy;
  std::vector<RepairEdit> all_edits;
  for (std::size_t i = 0; i < items.size(); ++i) {
    noisy[items[i]->first] = repaired[i];
    all_edits.insert(all_edits.end(), edits[i].begin(), edits[i].end());
    if (!warnings[i].empty()) err << "warning: " << warnings[i] << "\n";
  }
  Provenance provenance = input.provenance;
  provenance.generator =
      (provenance.generator.empty() ? std::string("base") : provenance.generator) +
      "+repair";
  provenance.parameters["repair"] = {
      {"mode", args.mode},
      {"threshold", args.threshold},
      {"norm", args.norm},
      {"restore_qmark", args.restore_qmark},
      {"spellcheck", !args.spellcheck_config.empty()}};
  const ChallengeSet set = PairChallenge(base, noisy, std::move(provenance));
  SaveChallengeSet(set, args.out, run);
  if (!args.edits.empty()) WriteReport(args.edits, run, FormatRepairEdits(all_edits));
  if (!args.audit.empty()) WriteReport(args.audit, run, audit.Format());
  out << "repaired " << set.pairs.size() << " questions, " << all_edits.size()
      << " edits -> " << args.out << "\n";
  return 0;
}

struct AugmentArgs {
  std::string base;
  std::vector<std::string> policies;
  std::string out;
  double prob = 0.25;
  std::string pivot = "de";
  NoiseResourceArgs resources;
};

int CmdAugment(const AugmentArgs& args, const RunInfo& run, std::ostream& out,
               std::ostream& err) {
  const std::vector<NoisePolicy> policies =
      ResolvePolicies(args.policies, args.prob, args.pivot, run.seed);
  LoadedResources resources(args.resources);
  const Dataset base = LoadSquad(args.base);
  const AugmentResult result =
      EmitAugmented(base, policies, resources.view, run.jobs);
  nlohmann::ordered_json meta = run.Json();
  meta["policies"] = nlohmann::ordered_json::array();
  for (const NoisePolicy& p : policies) meta["policies"].push_back(NoisePolicyToJson(p));
  WriteFile(args.out, SerializeSquad(result.dataset, meta));
  FinishAudit(resources, args.resources.audit, run);
  ReportWarnings(result.warnings, err);
  out << "augmented " << base.questions().size() << " questions to "
      << result.dataset.questions().size() << " -> " << args.out << "\n";
  return 0;
}

struct FilterArgs {
  std::string input;
  std::string out;
  std::string audit;
  std::string g2p;
  std::string weights;
  std::string layout;
  double threshold = 0.25;
  std::string adjacency = "physical";
  std::vector<std::string> categories = {"Deletion", "Insertion", "AdjSwap",
                                         "KeySwap"};
};

FilterConfig MakeFilterConfig(const std::string& weights,
                              const std::string& adjacency,
                              const std::vector<std::string>& categories,
                              double threshold) {
  FilterConfig config;
  if (!weights.empty()) config.phoneme_weights = PhonemeWeights::FromFile(weights);
  if (adjacency == "physical") {
    config.adjacency = KeyAdjacency::kPhysical;
  } else if (adjacency == "row") {
    config.adjacency = KeyAdjacency::kRowWise;
  } else {
    throw ConfigError("--adjacency must be physical or row");
  }
  config.retained_categories.clear();
  for (const std::string& c : categories) {
    config.retained_categories.insert(ParseErrorCategory(c));
  }
  config.pron_threshold = threshold;
  return config;
}

int CmdFilter(const FilterArgs& args, const RunInfo& run, std::ostream& out) {
  const FilterConfig config =
      MakeFilterConfig(args.weights, args.adjacency, args.categories, args.threshold);
  std::optional<G2pTable> g2p;
  if (!args.g2p.empty()) g2p = G2pTable::FromFile(args.g2p);
  const KeyboardLayout layout = args.layout.empty()
                                    ? KeyboardLayout::Qwerty()
                                    : KeyboardLayout::FromFile(args.layout);
  const std::vector<MisspellingPair> raw =
      ParseRawMisspellings(ReadFile(args.input));
  const FilterResult result =
      FilterLexicon(raw, config, layout, g2p ? &*g2p : nullptr);
  WriteReport(args.out, run, result.lexicon.Format());
  if (!args.audit.empty()) WriteReport(args.audit, run, FormatAudit(result.audit));
  std::size_t retained = 0;
  for (const FilterVerdict& v : result.audit) retained += v.retained;
  out << "retained " << retained << " of " << raw.size() << " pairs: "
      << result.lexicon.pair_count() << " misspellings for "
      << result.lexicon.word_count() << " words -> " << args.out << "\n";
  return 0;
}

struct StatsArgs {
  std::string base;
  std::string challenge;
  std::string out;
  std::string rows;
  bool keep_case = false;
  bool cer_strip_punct = false;
  bool wer_keep_punct = false;
};

int CmdStats(const StatsArgs& args, const RunInfo& run, std::ostream& out) {
  const Dataset base = LoadSquad(args.base);
  const ChallengeSet set = LoadChallengeSet(base, args.challenge);
  const NoiseStatsReport r =
      ComputeNoiseStats(set, {!args.keep_case, args.cer_strip_punct},
                        {!args.keep_case, !args.wer_keep_punct});
  const std::string body = MetricRows({
      {"questions", std::to_string(r.questions)},
      {"clean_words", std::to_string(r.clean_words)},
      {"corrupted_words", std::to_string(r.corrupted_words)},
      {"word_corruption_rate", Fixed(r.word_corruption_rate)},
      {"pct_diff_ge1", Fixed(r.pct_diff_ge1)},
      {"pct_diff_ge2", Fixed(r.pct_diff_ge2)},
      {"cer", Fixed(r.score.cer)},
      {"wer", Fixed(r.score.wer)},
      {"bleu", Fixed(r.score.bleu)},
  });
  if (!args.out.empty()) WriteReport(args.out, run, body);
  if (!args.rows.empty()) {
    std::string rows = "qid\tclean_words\tcorrupted_words\tchar_distance\n";
    for (const QuestionNoiseRow& row : r.rows) {
      rows += EscapeTsv(row.qid) + "\t" + std::to_string(row.clean_words) + "\t" +
              std::to_string(row.corrupted_words) + "\t" +
              std::to_string(row.char_distance) + "\n";
    }
    WriteReport(args.rows, run, rows);
  }
  out << "questions " << r.questions << "  word corruption "
      << Fixed(r.word_corruption_rate) << "%  diff>=1 " << Fixed(r.pct_diff_ge1)
      << "%  diff>=2 " << Fixed(r.pct_diff_ge2) << "%  CER "
      << Fixed(r.score.cer) << "  WER " << Fixed(r.score.wer) << "  BLEU "
      << Fixed(r.score.bleu) << "\n";
  return 0;
}

struct StratifyArgs {
  std::string gold;
  std::string pred;
  std::string predicate;
  std::string challenge;
  std::string out;
};

int CmdStratify(const StratifyArgs& args, const RunInfo& run, std::ostream& out) {
  const Dataset gold = LoadSquad(args.gold);
  const auto predictions = LoadPredictions(args.pred);
  const StratumPredicate predicate = ParsePredicate(args.predicate);
  std::optional<ChallengeSet> challenge;
  if (!args.challenge.empty()) challenge = LoadChallengeSet(gold, args.challenge);
  const std::vector<StratumReport> strata = Stratify(
      gold, predictions, predicate, challenge ? &*challenge : nullptr);
  std::string body = "predicate\tvalue\tn\tem\tf1\tcer\twer\tbleu\n";
  for (const StratumReport& s : strata) {
    body += EscapeTsv(s.predicate) + "\t" + (s.value ? "true" : "false") + "\t" +
            std::to_string(s.n) + "\t" + (s.qa ? Fixed(s.qa->em) : "") + "\t" +
            (s.qa ? Fixed(s.qa->f1) : "") + "\t" +
            (s.noise ? Fixed(s.noise->cer) : "") + "\t" +
            (s.noise ? Fixed(s.noise->wer) : "") + "\t" +
            (s.noise ? Fixed(s.noise->bleu) : "") + "\n";
    out << s.predicate << "=" << (s.value ? "true" : "false") << "  n=" << s.n;
    if (s.qa) out << "  EM " << Fixed(s.qa->em) << "  F1 " << Fixed(s.qa->f1);
    out << "\n";
  }
  if (!args.out.empty()) WriteReport(args.out, run, body);
  return 0;
}

struct CalibrateArgs {
  std::string sample;
  std::string g2p;
  std::string weights;
  std::string layout;
  std::string adjacency = "physical";
  std::vector<std::string> categories = {"Deletion", "Insertion", "AdjSwap",
                                         "KeySwap"};
  double step = 0.01;
  std::string out;
};

int CmdCalibrate(const CalibrateArgs& args, const RunInfo& run, std::ostream& out) {
  const FilterConfig config =
      MakeFilterConfig(args.weights, args.adjacency, args.categories, 0.0);
  std::optional<G2pTable> g2p;
  if (!args.g2p.empty()) g2p = G2pTable::FromFile(args.g2p);
  const KeyboardLayout layout = args.layout.empty()
                                    ? KeyboardLayout::Qwerty()
                                    : KeyboardLayout::FromFile(args.layout);
  const std::vector<LabeledPair> sample = ParseLabeledSample(ReadFile(args.sample));
  const Calibration c =
      CalibrateThreshold(sample, config, layout, g2p ? &*g2p : nullptr, args.step);
  std::string body = "threshold\tagreement\n";
  for (const CalibrationPoint& p : c.sweep) {
    body += Fixed(p.threshold, 4) + "\t" + Fixed(p.agreement) + "\n";
  }
  if (!args.out.empty()) WriteReport(args.out, run, body);
  out << "best threshold " << Fixed(c.best.threshold, 4) << " with agreement "
      << Fixed(c.best.agreement) << "% over " << sample.size() << " pairs\n";
  return 0;
}

void AddMetricFlags(CLI::App* sub, bool& keep_case, bool& cer_strip,
                    bool& wer_keep) {
  sub->add_flag("--keep-case", keep_case, "Do not casefold before CER/WER");
  sub->add_flag("--cer-strip-punct", cer_strip,
                "Remove punctuation before CER");
  sub->add_flag("--wer-keep-punct", wer_keep,
                "Keep punctuation tokens for WER");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"qanoise: interface-noise challenge sets and QA robustness "
               "evaluation"};
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  int jobs = 1;
  app.add_option("--seed", seed, "Global random seed")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  NoiseArgs noise;
  CLI::App* noise_cmd = app.add_subcommand("noise", "Build a challenge set");
  noise_cmd->add_option("--base", noise.base, "Base dataset (SQuAD JSON)")
      ->required()->check(CLI::ExistingFile);
  noise_cmd->add_option("--policy", noise.policies,
                        "Noise policy [name=]kind[:k=v,...]; repeatable, applied in order")
      ->required();
  noise_cmd->add_option("--out", noise.out, "Output sidecar TSV")->required();
  noise_cmd->add_option("--prob", noise.prob, "Default key_swap probability")
      ->check(CLI::Range(0.0, 1.0));
  noise_cmd->add_option("--pivot", noise.pivot, "Default back-translation pivot");
  noise_cmd->add_option("--interface", noise.interface,
                        "Interface label for the provenance record");
  noise.resources.Register(noise_cmd);

  EvalArgs eval;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "QA EM/F1 of predictions, noise score of a challenge set, or a "
              "degradation table");
  eval_cmd->add_option("--gold", eval.gold, "Gold dataset (SQuAD JSON)")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--pred", eval.pred, "Predictions JSON (qid -> answer)")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--challenge", eval.challenge, "Challenge sidecar")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--runs", eval.runs,
                       "TSV system<TAB>interface<TAB>predictions")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--scores", eval.scores,
                       "TSV system<TAB>interface<TAB>em<TAB>f1")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--out", eval.out, "Report TSV");
  eval_cmd->add_option("--per-question", eval.per_question,
                       "Per-question EM/F1 TSV");
  AddMetricFlags(eval_cmd, eval.keep_case, eval.cer_strip_punct,
                 eval.wer_keep_punct);

  TextMetricsArgs text;
  CLI::App* text_cmd = app.add_subcommand(
      "textmetrics", "Corpus CER/WER/BLEU of line-aligned text files");
  text_cmd->add_option("--hyp", text.hyp, "Hypotheses, one per line")
      ->required()->check(CLI::ExistingFile);
  text_cmd->add_option("--ref", text.ref, "References, one per line")
      ->required()->check(CLI::ExistingFile);
  text_cmd->add_option("--out", text.out, "Report TSV");
  AddMetricFlags(text_cmd, text.keep_case, text.cer_strip_punct,
                 text.wer_keep_punct);

  RepairArgs repair;
  CLI::App* repair_cmd = app.add_subcommand("repair", "Repair noisy questions");
  repair_cmd->add_option("--base", repair.base, "Base dataset (SQuAD JSON)")
      ->required()->check(CLI::ExistingFile);
  repair_cmd->add_option("--challenge", repair.challenge,
                         "Challenge sidecar (default: the base questions)")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--out", repair.out, "Repaired sidecar TSV")->required();
  repair_cmd->add_option("--edits", repair.edits, "Edits log TSV");
  repair_cmd->add_option("--mode", repair.mode,
                         "content_word, named_entity or none");
  repair_cmd->add_option("--threshold", repair.threshold,
                         "Maximum normalized character distance")
      ->check(CLI::Range(0.0, 1.0));
  repair_cmd->add_option("--norm", repair.norm,
                         "Distance denominator: max or reference");
  repair_cmd->add_flag("--restore-qmark", repair.restore_qmark,
                       "Append a final question mark when missing");
  repair_cmd->add_option("--spellcheck-config", repair.spellcheck_config,
                         "Spellcheck adapter config, applied first")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--pos", repair.pos, "Question POS sidecar (by qid)")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--ne", repair.ne, "Question NE sidecar (by qid)")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--context-pos", repair.context_pos,
                         "Context POS sidecar (by context id)")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--context-ne", repair.context_ne,
                         "Context NE sidecar (by context id)")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--word-classes", repair.word_classes,
                         "Word-class lexicon replacing the built-in lists")
      ->check(CLI::ExistingFile);
  repair_cmd->add_option("--audit", repair.audit, "Adapter call log");

  AugmentArgs augment;
  CLI::App* augment_cmd =
      app.add_subcommand("augment", "Emit a noise-augmented training set");
  augment_cmd->add_option("--base", augment.base, "Training set (SQuAD JSON)")
      ->required()->check(CLI::ExistingFile);
  augment_cmd->add_option("--policy", augment.policies,
                          "Noise policy [name=]kind[:k=v,...]; one copy each");
  augment_cmd->add_option("--out", augment.out, "Output SQuAD JSON")->required();
  augment_cmd->add_option("--prob", augment.prob, "Default key_swap probability")
      ->check(CLI::Range(0.0, 1.0));
  augment_cmd->add_option("--pivot", augment.pivot,
                          "Default back-translation pivot");
  augment.resources.Register(augment_cmd);

  FilterArgs filter;
  CLI::App* filter_cmd = app.add_subcommand(
      "filter-misspellings", "Keep interface-like misspellings");
  filter_cmd->add_option("--input", filter.input,
                         "Raw list: 'wrong->right' lines or word<TAB>misspelling")
      ->required()->check(CLI::ExistingFile);
  filter_cmd->add_option("--out", filter.out, "Filtered lexicon TSV")->required();
  filter_cmd->add_option("--audit", filter.audit, "Per-pair verdicts TSV");
  filter_cmd->add_option("--g2p", filter.g2p, "Pronunciation table")
      ->check(CLI::ExistingFile);
  filter_cmd->add_option("--weights", filter.weights, "Phoneme cost table")
      ->check(CLI::ExistingFile);
  filter_cmd->add_option("--layout", filter.layout, "Keyboard layout file")
      ->check(CLI::ExistingFile);
  filter_cmd->add_option("--threshold", filter.threshold,
                         "Minimum pronunciation distance")
      ->check(CLI::Range(0.0, 1.0));
  filter_cmd->add_option("--adjacency", filter.adjacency,
                         "KeySwap adjacency: physical or row");
  filter_cmd->add_option("--categories", filter.categories,
                         "Retained error categories");

  StatsArgs stats;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Challenge-set statistics");
  stats_cmd->add_option("--base", stats.base, "Base dataset (SQuAD JSON)")
      ->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--challenge", stats.challenge, "Challenge sidecar")
      ->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--out", stats.out, "Summary TSV");
  stats_cmd->add_option("--rows", stats.rows, "Per-question TSV");
  AddMetricFlags(stats_cmd, stats.keep_case, stats.cer_strip_punct,
                 stats.wer_keep_punct);

  StratifyArgs stratify;
  CLI::App* stratify_cmd =
      app.add_subcommand("stratify", "QA scores split by a predicate");
  stratify_cmd->add_option("--gold", stratify.gold, "Gold dataset")
      ->required()->check(CLI::ExistingFile);
  stratify_cmd->add_option("--pred", stratify.pred, "Predictions JSON")
      ->required()->check(CLI::ExistingFile);
  stratify_cmd->add_option("--predicate", stratify.predicate,
                           "contains_token:<t>, contains_numeral or flag:<file>")
      ->required();
  stratify_cmd->add_option("--challenge", stratify.challenge,
                           "Evaluate the predicate on these noisy questions")
      ->check(CLI::ExistingFile);
  stratify_cmd->add_option("--out", stratify.out, "Report TSV");

  CalibrateArgs calibrate;
  CLI::App* calibrate_cmd = app.add_subcommand(
      "calibrate-filter", "Sweep the pronunciation threshold on a labeled sample");
  calibrate_cmd->add_option("--sample", calibrate.sample,
                            "word<TAB>misspelling<TAB>interface|non-interface")
      ->required()->check(CLI::ExistingFile);
  calibrate_cmd->add_option("--g2p", calibrate.g2p, "Pronunciation table")
      ->check(CLI::ExistingFile);
  calibrate_cmd->add_option("--weights", calibrate.weights, "Phoneme cost table")
      ->check(CLI::ExistingFile);
  calibrate_cmd->add_option("--layout", calibrate.layout, "Keyboard layout file")
      ->check(CLI::ExistingFile);
  calibrate_cmd->add_option("--adjacency", calibrate.adjacency,
                            "KeySwap adjacency: physical or row");
  calibrate_cmd->add_option("--categories", calibrate.categories,
                            "Retained error categories");
  calibrate_cmd->add_option("--step", calibrate.step, "Sweep step")
      ->check(CLI::Range(0.0001, 1.0));
  calibrate_cmd->add_option("--out", calibrate.out, "Sweep TSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    RunInfo run;
    run.command = sub->get_name();
    run.seed = seed;
    run.jobs = jobs;
    run.config_hash = ConfigHash(*sub);
    // The seed is part of every run's identity.
    run.config_hash =
        HexDigest(MixSeed(Fnv1a64(run.config_hash), seed));
    if (sub == noise_cmd) return CmdNoise(noise, run, out, err);
    if (sub == eval_cmd) return CmdEval(eval, run, out, err);
    if (sub == text_cmd) return CmdTextMetrics(text, run, out);
    if (sub == repair_cmd) return CmdRepair(repair, run, out, err);
    if (sub == augment_cmd) return CmdAugment(augment, run, out, err);
    if (sub == filter_cmd) return CmdFilter(filter, run, out);
    if (sub == stats_cmd) return CmdStats(stats, run, out);
    if (sub == stratify_cmd) return CmdStratify(stratify, run, out);
    if (sub == calibrate_cmd) return CmdCalibrate(calibrate, run, out);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qanoise
