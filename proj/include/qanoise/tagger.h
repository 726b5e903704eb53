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


#ifndef QANOISE_TAGGER_H_
#define QANOISE_TAGGER_H_

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "qanoise/dataset.h"
#include "qanoise/textcore.h"

namespace qanoise {

// Function words are closed-class (articles, conjunctions, pronouns,
// auxiliaries, common prepositions); content words are nouns and
// adjectives. Everything else, including verbs, numbers and punctuation,
// is kOther.
enum class WordClass { kFunction, kContent, kOther };

// Word lists backing the heuristic tagger. The default lists are compiled
// in; a replacement can be loaded from `class<TAB>word` lines where class
// is "function" or "verb".
class WordClassLexicon {
 public:
  static const WordClassLexicon& Default();
  static WordClassLexicon FromFile(const std::string& path);
  static WordClassLexicon Parse(std::string_view text);

  bool IsFunctionWord(std::string_view word) const;
  bool IsVerb(std::string_view word) const;
  std::size_t function_word_count() const { return function_.size(); }

 private:
  std::unordered_set<std::string> function_;
  std::unordered_set<std::string> verbs_;
};

// Tags word classes for `tokens`. With `pos` annotations (UPOS or Penn tags)
// the annotations decide and unannotated tokens are kOther; otherwise the
// lexicon heuristic applies: closed-class words are function words, known
// verbs are kOther, and every remaining word token is a content word.
std::vector<WordClass> TagWordClasses(const std::vector<Token>& tokens,
                                      const WordClassLexicon& lexicon,
                                      const std::vector<TokenAnnotation>* pos);

struct EntitySpan {
  std::size_t first = 0;  // token range, half-open
  std::size_t last = 0;
  std::string type;       // PER, LOC, ORG, MISC, or ENT for heuristic spans

  bool operator==(const EntitySpan&) const = default;
};

// Named entity spans. With `ne` annotations (PER/LOC/ORG/MISC, optionally
// B-/I- prefixed, "O" ignored) the annotations decide. Otherwise: maximal
// runs of capitalized non-function words that do not start a sentence, plus
// all-caps acronyms of two or more letters anywhere.
std::vector<EntitySpan> DetectEntities(const std::vector<Token>& tokens,
                                       const WordClassLexicon& lexicon,
                                       const std::vector<TokenAnnotation>* ne);

}  // namespace qanoise

#endif  // QANOISE_TAGGER_H_
