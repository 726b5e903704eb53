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


#include "qanoise/repair.h"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "qanoise/edit_distance.h"
#include "qanoise/errors.h"
#include "qanoise/tagger.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

// Marks the tokens that belong to the repair class.
std::vector<bool> SelectClass(const std::vector<Token>& tokens,
                              RepairMode mode, const TaggingContext& tagging) {
  std::vector<bool> in_class(tokens.size(), false);
  if (mode == RepairMode::kContentWord) {
    const std::vector<WordClass> classes =
        TagWordClasses(tokens, *tagging.lexicon, tagging.pos);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      in_class[i] = classes[i] == WordClass::kContent;
    }
  } else {
    for (const EntitySpan& span :
         DetectEntities(tokens, *tagging.lexicon, tagging.ne)) {
      for (std::size_t i = span.first; i < span.last; ++i) {
        in_class[i] = tokens[i].kind == TokenKind::kWord;
      }
    }
  }
  return in_class;
}

struct ContextCandidate {
  std::string folded;
  std::size_t length = 0;  // code points
};

}  // namespace

std::string_view RepairModeName(RepairMode mode) {
  return mode == RepairMode::kNamedEntity ? "named_entity" : "content_word";
}

RepairMode ParseRepairMode(std::string_view name) {
  if (name == "named_entity" || name == "ne") return RepairMode::kNamedEntity;
  if (name == "content_word" || name == "content") {
    return RepairMode::kContentWord;
  }
  throw ConfigError("unknown repair mode '" + std::string(name) +
                    "' (expected named_entity or content_word)");
}

DistanceNorm ParseDistanceNorm(std::string_view name) {
  if (name == "max") return DistanceNorm::kMaxLength;
  if (name == "reference") return DistanceNorm::kReference;
  throw ConfigError("unknown distance normalization '" + std::string(name) +
                    "' (expected max or reference)");
}

double TokenDistance(std::string_view question_token,
                     std::string_view context_token, DistanceNorm norm) {
  const std::u32string q = DecodeUtf8(CaseFold(question_token));
  const std::u32string c = DecodeUtf8(CaseFold(context_token));
  const std::size_t denom =
      norm == DistanceNorm::kMaxLength ? std::max(q.size(), c.size()) : c.size();
  if (denom == 0) return q.size() == c.size() ? 0.0 : 1.0;
  const std::size_t edits =
      Align(std::u32string_view(q), std::u32string_view(c)).cost;
  return static_cast<double>(edits) / static_cast<double>(denom);
}

RepairResult ContextRepair(std::string_view question, std::string_view context,
                           const RepairOptions& options,
                           const TaggingContext& question_tagging,
                           const TaggingContext& context_tagging) {
  if (Trim(context).empty()) {
    throw ValidationError("context repair needs a non-empty context");
  }
  if (options.threshold < 0.0 || options.threshold > 1.0) {
    throw ConfigError("repair threshold must lie in [0, 1]");
  }
  const std::vector<Token> ctx_tokens = Tokenize(context);
  std::unordered_set<std::string> vocabulary;
  for (const Token& t : ctx_tokens) {
    if (t.kind == TokenKind::kWord) vocabulary.insert(CaseFold(t.surface));
  }

  // Same-class context tokens, first occurrence only, in context order.
  const std::vector<bool> ctx_class =
      SelectClass(ctx_tokens, options.mode, context_tagging);
  std::vector<ContextCandidate> candidates;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < ctx_tokens.size(); ++i) {
    if (!ctx_class[i]) continue;
    std::string folded = CaseFold(ctx_tokens[i].surface);
    if (!seen.insert(folded).second) continue;
    const std::size_t length = CodePointCount(folded);
    candidates.push_back({std::move(folded), length});
  }

  const std::vector<Token> tokens = Tokenize(question);
  const std::vector<bool> q_class =
      SelectClass(tokens, options.mode, question_tagging);
  std::vector<std::string> replaced(tokens.size());
  std::vector<const std::string*> replacements(tokens.size(), nullptr);
  RepairResult result;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!q_class[i]) continue;
    if (vocabulary.contains(CaseFold(tokens[i].surface))) continue;
    const ContextCandidate* best = nullptr;
    double best_distance = 0.0;
    for (const ContextCandidate& c : candidates) {
      const double d = TokenDistance(tokens[i].surface, c.folded, options.norm);
      if (best == nullptr || d < best_distance ||
          (d == best_distance && c.length > best->length)) {
        best = &c;
        best_distance = d;
      }
    }
    if (best == nullptr || best_distance > options.threshold) continue;
    replaced[i] = ApplyCasePattern(best->folded,
                                   DetectCasePattern(tokens[i].surface));
    replacements[i] = &replaced[i];
    result.edits.push_back({"", i, tokens[i].surface, replaced[i],
                            best_distance, options.mode});
  }
  result.text = ReplaceTokens(question, tokens, replacements);
  return result;
}

NoiseOutcome RestoreFinalQuestionMark(std::string_view question) {
  std::size_t end = question.size();
  while (end > 0 && (question[end - 1] == ' ' || question[end - 1] == '\t' ||
                     question[end - 1] == '\n' || question[end - 1] == '\r')) {
    --end;
  }
  NoiseOutcome out;
  out.text = std::string(question.substr(0, end));
  if (out.text.empty()) {
    out.flagged = true;
    out.note = "empty question";
  }
  if (out.text.empty() || out.text.back() != '?') out.text += '?';
  return out;
}

std::string FormatRepairEdits(const std::vector<RepairEdit>& edits) {
  std::string out = "qid\ttoken_index\toriginal\treplacement\tdistance\tmode\n";
  char buf[32];
  for (const RepairEdit& e : edits) {
    std::snprintf(buf, sizeof(buf), "%.4f", e.distance);
    out += EscapeTsv(e.qid) + "\t" + std::to_string(e.token_index) + "\t" +
           EscapeTsv(e.original) + "\t" + EscapeTsv(e.replacement) + "\t" +
           buf + "\t" + std::string(RepairModeName(e.mode)) + "\n";
  }
  return out;
}

}  // namespace qanoise
