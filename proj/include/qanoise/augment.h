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


#ifndef QANOISE_AUGMENT_H_
#define QANOISE_AUGMENT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qanoise/adapters.h"
#include "qanoise/dataset.h"
#include "qanoise/keyboard.h"
#include "qanoise/noisegen.h"
#include "qanoise/tagger.h"

namespace qanoise {

enum class NoiseKind {
  kKeySwap,
  kMisspellLexicon,
  kStripPunct,
  kStripFinalQmark,
  kPerturbFunctionWords,
  kPerturbContentWords,
  kPerturbCommonMisspelled,
  kDropFunctionWords,
  kDropContentWords,
  kNePlaceholder,
  kSpellOutNumerals,
  kBackTranslate,  // needs an MT engine
  kTtsAsr,         // needs TTS and ASR engines
};

std::string_view NoiseKindName(NoiseKind kind);
NoiseKind ParseNoiseKind(std::string_view name);
bool IsStochastic(NoiseKind kind);
// Interface label recorded in challenge-set provenance.
std::string_view InterfaceOf(NoiseKind kind);

// One noise transformation. `name` defaults to the kind name and becomes
// the augmented qid suffix.
struct NoisePolicy {
  std::string name;
  NoiseKind kind = NoiseKind::kKeySwap;
  std::map<std::string, std::string> params;
  std::optional<std::uint64_t> seed;

  double Probability(double fallback) const;
  std::string Param(const std::string& key, const std::string& fallback) const;
};

// Parses `[name=]kind[:key=value,...]`, e.g. "typo=key_swap:p=0.1,seed=3".
// Unknown kinds, unknown parameters and probabilities outside [0, 1] raise
// ConfigError. A `seed` parameter fills NoisePolicy::seed.
NoisePolicy ParseNoisePolicy(std::string_view spec);
std::string FormatNoisePolicy(const NoisePolicy& policy);
nlohmann::ordered_json NoisePolicyToJson(const NoisePolicy& policy);

// Everything a policy may draw on. Pointers are optional; a policy whose
// resource is missing raises ConfigError.
struct PolicyResources {
  const KeyboardLayout* layout = nullptr;  // defaults to QWERTY
  const MisspellingLexicon* lexicon = nullptr;
  const WordClassLexicon* word_classes = nullptr;  // defaults to built-in
  const AnnotationSidecar* pos = nullptr;  // keyed by qid
  const AnnotationSidecar* ne = nullptr;
  Engine* mt = nullptr;
  Engine* tts = nullptr;
  Engine* asr = nullptr;
  AuditLog* audit = nullptr;
  RetryPolicy retry;
};

// Throws ConfigError when the policy lacks a seed it needs or a resource.
void CheckPolicy(const NoisePolicy& policy, const PolicyResources& resources);

struct PolicyOutcome {
  std::string text;
  bool flagged = false;
  std::string note;
};

// Applies one policy to one question. The random stream is derived from
// (policy seed, qid), so the result does not depend on batch order. Adapter
// failures propagate as AdapterError.
PolicyOutcome ApplyPolicy(const NoisePolicy& policy, std::string_view qid,
                          std::string_view text,
                          const PolicyResources& resources);

// Applies policies in sequence.
PolicyOutcome ApplyPolicies(const std::vector<NoisePolicy>& policies,
                            std::string_view qid, std::string_view text,
                            const PolicyResources& resources);

struct RecordWarning {
  std::string qid;
  std::string message;
};

struct NoiseRun {
  std::map<std::string, std::string> noisy;  // by qid; failed records absent
  std::vector<RecordWarning> warnings;       // qid order
};

// Runs the policy chain over every question with up to `jobs` threads.
// Adapter failures skip the record and are logged as warnings.
NoiseRun NoiseQuestions(const Dataset& base,
                        const std::vector<NoisePolicy>& policies,
                        const PolicyResources& resources, int jobs);

struct AugmentResult {
  Dataset dataset;
  std::vector<RecordWarning> warnings;
};

// Every original record followed by one copy per policy with qid
// "<qid>#<policy name>"; contexts and answers are unchanged. Policy names
// must be unique.
AugmentResult EmitAugmented(const Dataset& base,
                            const std::vector<NoisePolicy>& policies,
                            const PolicyResources& resources, int jobs);

}  // namespace qanoise

#endif  // QANOISE_AUGMENT_H_
