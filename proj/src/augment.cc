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


#include "qanoise/augment.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "qanoise/errors.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

struct KindInfo {
  NoiseKind kind;
  std::string_view name;
  std::string_view interface;
  bool stochastic;
  std::vector<std::string_view> params;
};

const std::vector<KindInfo>& Kinds() {
  static const std::vector<KindInfo> kinds = {
      {NoiseKind::kKeySwap, "key_swap", "keyboard", true, {"p", "single_char"}},
      {NoiseKind::kMisspellLexicon, "misspell_lexicon", "keyboard", true, {"p"}},
      {NoiseKind::kStripPunct, "strip_punct", "text", false, {}},
      {NoiseKind::kStripFinalQmark, "strip_final_qmark", "text", false, {}},
      {NoiseKind::kPerturbFunctionWords, "perturb_function_words", "keyboard",
       true, {"mechanism"}},
      {NoiseKind::kPerturbContentWords, "perturb_content_words", "keyboard",
       true, {"mechanism"}},
      {NoiseKind::kPerturbCommonMisspelled, "perturb_common_misspelled",
       "keyboard", true, {"mechanism"}},
      {NoiseKind::kDropFunctionWords, "drop_function_words", "text", false, {}},
      {NoiseKind::kDropContentWords, "drop_content_words", "text", false, {}},
      {NoiseKind::kNePlaceholder, "ne_placeholder", "text", true, {}},
      {NoiseKind::kSpellOutNumerals, "spell_out_numerals", "text", false,
       {"year_rule"}},
      {NoiseKind::kBackTranslate, "back_translate", "mt", false,
       {"pivot", "src"}},
      {NoiseKind::kTtsAsr, "tts_asr", "asr", false, {}},
  };
  return kinds;
}

const KindInfo& Info(NoiseKind kind) {
  for (const KindInfo& info : Kinds()) {
    if (info.kind == kind) return info;
  }
  throw ConfigError("unknown noise kind");
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes") return true;
  if (value == "0" || value == "false" || value == "no") return false;
  throw ConfigError("parameter " + key + " expects a boolean, got '" + value +
                    "'");
}

double ParseProbability(const std::string& value) {
  double p = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, p);
  if (ec != std::errc() || ptr != end || !(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("probability must be a number in [0, 1], got '" +
                      value + "'");
  }
  return p;
}

// Annotations are index-based, so they only apply while the text still has
// enough tokens for every index.
const std::vector<TokenAnnotation>* UsableAnnotations(
    const AnnotationSidecar* sidecar, std::string_view qid,
    const std::vector<Token>& tokens) {
  if (sidecar == nullptr) return nullptr;
  const auto* annotations = sidecar->Find(qid);
  if (annotations == nullptr) return nullptr;
  for (const TokenAnnotation& a : *annotations) {
    if (a.token_index >= tokens.size()) return nullptr;
  }
  return annotations;
}

PerturbMechanism MechanismOf(const NoisePolicy& policy) {
  const std::string fallback =
      policy.kind == NoiseKind::kPerturbCommonMisspelled ? "misspell"
                                                         : "key_swap";
  return ParseMechanism(policy.Param("mechanism", fallback));
}

}  // namespace

std::string_view NoiseKindName(NoiseKind kind) { return Info(kind).name; }

NoiseKind ParseNoiseKind(std::string_view name) {
  for (const KindInfo& info : Kinds()) {
    if (info.name == name) return info.kind;
  }
  std::string known;
  for (const KindInfo& info : Kinds()) {
    if (!known.empty()) known += ", ";
    known += info.name;
  }
  throw ConfigError("unknown noise policy kind '" + std::string(name) +
                    "' (known: " + known + ")");
}

bool IsStochastic(NoiseKind kind) { return Info(kind).stochastic; }

std::string_view InterfaceOf(NoiseKind kind) { return Info(kind).interface; }

double NoisePolicy::Probability(double fallback) const {
  const auto it = params.find("p");
  return it == params.end() ? fallback : ParseProbability(it->second);
}

std::string NoisePolicy::Param(const std::string& key,
                               const std::string& fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

NoisePolicy ParseNoisePolicy(std::string_view spec) {
  NoisePolicy policy;
  std::string_view rest = Trim(spec);
  const std::size_t colon = rest.find(':');
  std::string_view head = rest.substr(0, colon);
  const std::size_t eq = head.find('=');
  if (eq != std::string_view::npos) {
    policy.name = std::string(Trim(head.substr(0, eq)));
    head = Trim(head.substr(eq + 1));
    if (policy.name.empty()) throw ConfigError("empty policy name in '" + std::string(spec) + "'");
  }
  policy.kind = ParseNoiseKind(Trim(head));
  if (policy.name.empty()) policy.name = std::string(NoiseKindName(policy.kind));
  if (policy.name.find_first_of("#\t\n ") != std::string::npos) {
    throw ConfigError("policy name '" + policy.name +
                      "' may not contain '#' or whitespace");
  }
  if (colon != std::string_view::npos) {
    const KindInfo& info = Info(policy.kind);
    for (const std::string& item : SplitString(rest.substr(colon + 1), ',')) {
      if (Trim(item).empty()) continue;
      const std::size_t sep = item.find('=');
      if (sep == std::string::npos) {
        throw ConfigError("policy parameter '" + item + "' needs key=value");
      }
      const std::string key(Trim(std::string_view(item).substr(0, sep)));
      const std::string value(Trim(std::string_view(item).substr(sep + 1)));
      if (key == "seed") {
        std::uint64_t seed = 0;
        const auto [ptr, ec] =
            std::from_chars(value.data(), value.data() + value.size(), seed);
        if (ec != std::errc() || ptr != value.data() + value.size()) {
          throw ConfigError("seed must be an unsigned integer, got '" + value + "'");
        }
        policy.seed = seed;
        continue;
      }
      if (std::find(info.params.begin(), info.params.end(), key) ==
          info.params.end()) {
        throw ConfigError("policy " + std::string(info.name) +
                          " has no parameter '" + key + "'");
      }
      policy.params[key] = value;
    }
  }
  // Validate eagerly so bad configs fail before any work starts.
  policy.Probability(0.0);
  if (policy.params.contains("single_char")) {
    ParseBool("single_char", policy.params.at("single_char"));
  }
  if (policy.params.contains("year_rule")) {
    ParseBool("year_rule", policy.params.at("year_rule"));
  }
  if (policy.params.contains("mechanism")) MechanismOf(policy);
  if (policy.params.contains("pivot")) CheckLanguageTag(policy.params.at("pivot"));
  if (policy.params.contains("src")) CheckLanguageTag(policy.params.at("src"));
  return policy;
}

std::string FormatNoisePolicy(const NoisePolicy& policy) {
  std::string out = policy.name + "=" + std::string(NoiseKindName(policy.kind));
  char sep = ':';
  for (const auto& [k, v] : policy.params) {
    out += sep + k + "=" + v;
    sep = ',';
  }
  if (policy.seed) out += sep + std::string("seed=") + std::to_string(*policy.seed);
  return out;
}

nlohmann::ordered_json NoisePolicyToJson(const NoisePolicy& policy) {
  nlohmann::ordered_json json;
  json["name"] = policy.name;
  json["kind"] = NoiseKindName(policy.kind);
  json["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : policy.params) json["params"][k] = v;
  if (policy.seed) json["seed"] = *policy.seed;
  return json;
}

void CheckPolicy(const NoisePolicy& policy, const PolicyResources& resources) {
  if (IsStochastic(policy.kind) && !policy.seed) {
    throw ConfigError("policy " + policy.name + " is stochastic and needs a seed");
  }
  const bool needs_lexicon =
      policy.kind == NoiseKind::kMisspellLexicon ||
      policy.kind == NoiseKind::kPerturbCommonMisspelled ||
      ((policy.kind == NoiseKind::kPerturbFunctionWords ||
        policy.kind == NoiseKind::kPerturbContentWords) &&
       MechanismOf(policy) == PerturbMechanism::kMisspell);
  if (needs_lexicon && resources.lexicon == nullptr) {
    throw ConfigError("policy " + policy.name + " needs a misspelling lexicon");
  }
  if (policy.kind == NoiseKind::kBackTranslate && resources.mt == nullptr) {
    throw ConfigError("policy " + policy.name + " needs an MT adapter config");
  }
  if (policy.kind == NoiseKind::kTtsAsr &&
      (resources.tts == nullptr || resources.asr == nullptr)) {
    throw ConfigError("policy " + policy.name +
                      " needs TTS and ASR adapter configs");
  }
}

namespace {

PolicyOutcome Plain(std::string text) {
  PolicyOutcome out;
  out.text = std::move(text);
  return out;
}

PolicyOutcome ApplyOne(const NoisePolicy& policy, std::string_view qid,
                       std::string_view text, const PolicyResources& resources,
                       CallContext& calls) {
  CheckPolicy(policy, resources);
  const KeyboardLayout& layout =
      resources.layout ? *resources.layout : KeyboardLayout::Qwerty();
  const std::uint64_t seed =
      policy.seed ? MixSeed(RecordSeed(*policy.seed, qid), Fnv1a64(policy.name))
                  : 0;
  const std::vector<Token> tokens = Tokenize(text);
  TaggingContext tagging;
  if (resources.word_classes) tagging.lexicon = resources.word_classes;
  tagging.pos = UsableAnnotations(resources.pos, qid, tokens);
  tagging.ne = UsableAnnotations(resources.ne, qid, tokens);

  switch (policy.kind) {
    case NoiseKind::kKeySwap: {
      KeySwapOptions options;
      options.probability = policy.Probability(0.25);
      options.allow_single_char =
          ParseBool("single_char", policy.Param("single_char", "true"));
      return Plain(KeySwapNoise(text, options, layout, seed));
    }
    case NoiseKind::kMisspellLexicon:
      return Plain(InjectMisspellings(text, *resources.lexicon,
                                      policy.Probability(1.0), seed));
    case NoiseKind::kStripPunct:
      return Plain(StripPunctuation(text));
    case NoiseKind::kStripFinalQmark:
      return Plain(StripFinalQuestionMark(text));
    case NoiseKind::kPerturbFunctionWords:
    case NoiseKind::kPerturbContentWords:
    case NoiseKind::kPerturbCommonMisspelled: {
      const TargetClass target =
          policy.kind == NoiseKind::kPerturbFunctionWords ? TargetClass::kFunction
          : policy.kind == NoiseKind::kPerturbContentWords
              ? TargetClass::kContent
              : TargetClass::kCommonMisspelled;
      return Plain(TargetedPerturb(text, target, MechanismOf(policy), tagging,
                                   layout, resources.lexicon, seed));
    }
    case NoiseKind::kDropFunctionWords:
      return Plain(DropWords(text, TargetClass::kFunction, tagging));
    case NoiseKind::kDropContentWords:
      return Plain(DropWords(text, TargetClass::kContent, tagging));
    case NoiseKind::kNePlaceholder: {
      NoiseOutcome out = NePlaceholder(text, tagging, seed);
      return {std::move(out.text), out.flagged, std::move(out.note)};
    }
    case NoiseKind::kSpellOutNumerals: {
      NoiseOutcome out = SpellOutNumerals(
          text, ParseBool("year_rule", policy.Param("year_rule", "true")));
      return {std::move(out.text), out.flagged, std::move(out.note)};
    }
    case NoiseKind::kBackTranslate:
      return Plain(BackTranslate(text, policy.Param("pivot", "de"),
                                 *resources.mt, calls, policy.Param("src", "en")));
    case NoiseKind::kTtsAsr:
      return Plain(
          TtsThenAsr(text, *resources.tts, *resources.asr, calls).transcript);
  }
  throw ConfigError("unhandled noise kind");
}

CallContext MakeCalls(std::string_view qid, std::string record,
                      const PolicyResources& resources) {
  CallContext calls;
  calls.qid = std::string(qid);
  calls.record = std::move(record);
  calls.audit = resources.audit;
  calls.retry = resources.retry;
  return calls;
}

}  // namespace

PolicyOutcome ApplyPolicy(const NoisePolicy& policy, std::string_view qid,
                          std::string_view text,
                          const PolicyResources& resources) {
  CallContext calls = MakeCalls(qid, {}, resources);
  return ApplyOne(policy, qid, text, resources, calls);
}

PolicyOutcome ApplyPolicies(const std::vector<NoisePolicy>& policies,
                            std::string_view qid, std::string_view text,
                            const PolicyResources& resources) {
  CallContext calls = MakeCalls(qid, {}, resources);
  PolicyOutcome out = Plain(std::string(text));
  for (const NoisePolicy& policy : policies) {
    PolicyOutcome step = ApplyOne(policy, qid, out.text, resources, calls);
    out.text = std::move(step.text);
    if (step.flagged) {
      out.flagged = true;
      if (!out.note.empty()) out.note += "; ";
      out.note += policy.name + ": " + step.note;
    }
  }
  return out;
}

NoiseRun NoiseQuestions(const Dataset& base,
                        const std::vector<NoisePolicy>& policies,
                        const PolicyResources& resources, int jobs) {
  for (const NoisePolicy& policy : policies) CheckPolicy(policy, resources);
  const auto& questions = base.questions();
  std::vector<std::optional<PolicyOutcome>> results(questions.size());
  std::vector<std::string> errors(questions.size());
  ParallelFor(questions.size(), jobs, [&](std::size_t i) {
    try {
      results[i] =
          ApplyPolicies(policies, questions[i].qid, questions[i].question,
                        resources);
    } catch (const AdapterError& e) {
      errors[i] = e.what();
    }
  });
  NoiseRun run;
  std::map<std::string, std::string> warnings;
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const std::string& qid = questions[i].qid;
    if (results[i]) {
      run.noisy[qid] = std::move(results[i]->text);
      if (results[i]->flagged) warnings[qid] = results[i]->note;
    } else {
      warnings[qid] = "skipped: " + errors[i];
    }
  }
  for (auto& [qid, message] : warnings) {
    run.warnings.push_back({qid, std::move(message)});
  }
  return run;
}

AugmentResult EmitAugmented(const Dataset& base,
                            const std::vector<NoisePolicy>& policies,
                            const PolicyResources& resources, int jobs) {
  std::set<std::string> names;
  for (const NoisePolicy& policy : policies) {
    CheckPolicy(policy, resources);
    if (!names.insert(policy.name).second) {
      throw ConfigError("duplicate policy name '" + policy.name +
                        "'; name policies with name=kind");
    }
  }
  const auto& questions = base.questions();
  const std::size_t k = policies.size();
  std::vector<std::optional<PolicyOutcome>> copies(questions.size() * k);
  std::vector<std::string> errors(copies.size());
  ParallelFor(copies.size(), jobs, [&](std::size_t n) {
    const QuestionRecord& q = questions[n / k];
    const NoisePolicy& policy = policies[n % k];
    CallContext calls = MakeCalls(q.qid, q.qid + "#" + policy.name, resources);
    try {
      copies[n] = ApplyOne(policy, q.qid, q.question, resources, calls);
    } catch (const AdapterError& e) {
      errors[n] = e.what();
    }
  });

  AugmentResult result;
  std::vector<QuestionRecord> records;
  records.reserve(questions.size() * (k + 1));
  for (std::size_t i = 0; i < questions.size(); ++i) {
    records.push_back(questions[i]);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t n = i * k + j;
      const std::string qid = questions[i].qid + "#" + policies[j].name;
      if (!copies[n]) {
        result.warnings.push_back({qid, "skipped: " + errors[n]});
        continue;
      }
      if (copies[n]->flagged) result.warnings.push_back({qid, copies[n]->note});
      QuestionRecord copy = questions[i];
      copy.qid = qid;
      copy.question = std::move(copies[n]->text);
      records.push_back(std::move(copy));
    }
  }
  result.dataset = Dataset(base.contexts(), std::move(records));
  return result;
}

}  // namespace qanoise
