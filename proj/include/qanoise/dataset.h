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


#ifndef QANOISE_DATASET_H_
#define QANOISE_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace qanoise {

struct Answer {
  std::string text;
  std::size_t answer_start = 0;  // code point offset into the context

  bool operator==(const Answer&) const = default;
};

struct QuestionRecord {
  std::string qid;
  std::string question;
  std::vector<Answer> answers;
  std::string context_id;

  bool operator==(const QuestionRecord&) const = default;
};

struct ContextParagraph {
  std::string context_id;
  std::string text;
  std::string article_title;

  bool operator==(const ContextParagraph&) const = default;
};

// An immutable SQuAD-style dataset. Construction validates every record
// invariant: unique ids, known contexts, non-empty answers and answer spans
// that match the context text.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<ContextParagraph> contexts,
          std::vector<QuestionRecord> questions);

  const std::vector<ContextParagraph>& contexts() const { return contexts_; }
  const std::vector<QuestionRecord>& questions() const { return questions_; }

  const QuestionRecord* FindQuestion(std::string_view qid) const;
  const ContextParagraph* FindContext(std::string_view context_id) const;
  const ContextParagraph& ContextOf(const QuestionRecord& record) const;

 private:
  std::vector<ContextParagraph> contexts_;
  std::vector<QuestionRecord> questions_;
  std::unordered_map<std::string, std::size_t> question_index_;
  std::unordered_map<std::string, std::size_t> context_index_;
};

// SQuAD v1.1 layout. Context ids are assigned as "a<article>p<paragraph>".
// Throws ParseError naming the JSON path of a malformed element and
// ValidationError listing qids whose answers do not match their context.
Dataset ParseSquad(std::string_view json_text);
Dataset LoadSquad(const std::string& path);

// Emits SQuAD v1.1 JSON. Questions are grouped under their context in
// dataset order; consecutive contexts with the same title share an article.
// `metadata`, when not null, is stored under the top-level "qanoise" key.
std::string SerializeSquad(const Dataset& dataset,
                           const nlohmann::ordered_json& metadata = nullptr);

// Prediction file: a flat JSON object qid -> answer string.
std::map<std::string, std::string> ParsePredictions(std::string_view json_text);
std::map<std::string, std::string> LoadPredictions(const std::string& path);

// ---- Challenge sets --------------------------------------------------------

struct ChallengePair {
  std::string clean;
  std::string noisy;

  bool operator==(const ChallengePair&) const = default;
};

struct Provenance {
  std::string interface_kind;  // keyboard, asr, mt, ...
  std::string generator;       // generator name, or "natural"
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
};

struct ChallengeSet {
  std::map<std::string, ChallengePair> pairs;  // keyed and ordered by qid
  Provenance provenance;
};

// Pairs noisy texts with the base questions. Throws ValidationError listing
// every qid that is not in `base`.
ChallengeSet PairChallenge(const Dataset& base,
                           const std::map<std::string, std::string>& noisy,
                           Provenance provenance);

// Sidecar: UTF-8 TSV `qid<TAB>noisy question`, values escaped, lines
// starting with '#' are header comments. Provenance lives next to it in
// `<path>.meta.json`.
std::map<std::string, std::string> ParseChallengeSidecar(std::string_view text);
std::string FormatChallengeSidecar(const ChallengeSet& set,
                                   const std::vector<std::string>& header);
nlohmann::ordered_json ProvenanceToJson(const Provenance& provenance);
Provenance ProvenanceFromJson(const nlohmann::json& json);

// Reads the sidecar and, when present, its metadata file.
ChallengeSet LoadChallengeSet(const Dataset& base, const std::string& path);

// ---- Annotation sidecars ---------------------------------------------------

struct TokenAnnotation {
  std::size_t token_index = 0;
  std::string label;  // POS tag or NE label
};

// TSV `id<TAB>token_index<TAB>label`, keyed by qid or context id. Token
// indices refer to Tokenize() over the annotated text.
class AnnotationSidecar {
 public:
  static AnnotationSidecar Parse(std::string_view text);
  static AnnotationSidecar FromFile(const std::string& path);

  void Add(const std::string& id, TokenAnnotation annotation);
  const std::vector<TokenAnnotation>* Find(std::string_view id) const;

  // Throws ValidationError when an annotation for `id` points past the
  // token count of `text`.
  void Validate(std::string_view id, std::string_view text) const;

 private:
  std::map<std::string, std::vector<TokenAnnotation>, std::less<>> entries_;
};

}  // namespace qanoise

#endif  // QANOISE_DATASET_H_
