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


#ifndef QANOISE_NOISEGEN_H_
#define QANOISE_NOISEGEN_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qanoise/dataset.h"
#include "qanoise/keyboard.h"
#include "qanoise/tagger.h"

namespace qanoise {

// Word-level misspelling table. Keys are casefolded; every list is
// non-empty and never contains its key.
class MisspellingLexicon {
 public:
  MisspellingLexicon() = default;

  // `word<TAB>misspelling` lines; repeated words accumulate.
  static MisspellingLexicon Parse(std::string_view text);
  static MisspellingLexicon FromFile(const std::string& path);

  // Ignores pairs whose misspelling equals the word (case-insensitively)
  // and duplicate pairs. Returns whether the pair was added.
  bool Add(std::string_view word, std::string_view misspelling);

  const std::vector<std::string>* Find(std::string_view word) const;
  bool Contains(std::string_view word) const { return Find(word) != nullptr; }

  const std::map<std::string, std::vector<std::string>>& entries() const {
    return entries_;
  }
  std::size_t word_count() const { return entries_.size(); }
  std::size_t pair_count() const;

  // TSV in key order, one pair per line.
  std::string Format() const;

 private:
  std::map<std::string, std::vector<std::string>> entries_;
};

// Result of a generator that may decline to act on its input.
struct NoiseOutcome {
  std::string text;
  bool flagged = false;  // e.g. no entity found, over-long numeral
  std::string note;
};

struct KeySwapOptions {
  double probability = 0.25;
  bool allow_single_char = true;  // may a one-letter word be corrupted?
};

// Corrupts each word token independently with `probability` by replacing
// one uniformly chosen letter with a uniformly chosen row-wise neighbor on
// `layout`, keeping the letter's case. Words without a letter that has a
// row-wise neighbor are left alone. Non-word tokens and whitespace are
// never touched.
std::string KeySwapNoise(std::string_view text, const KeySwapOptions& options,
                         const KeyboardLayout& layout, std::uint64_t seed);

// Replaces each word whose casefolded form is a lexicon key, with
// `probability`, by a uniformly sampled misspelling carrying the original
// word's case pattern.
std::string InjectMisspellings(std::string_view text,
                               const MisspellingLexicon& lexicon,
                               double probability, std::uint64_t seed);

// Removes every punctuation token; whitespace runs collapse to one space.
std::string StripPunctuation(std::string_view text);
// Removes trailing question marks (and whitespace around them).
std::string StripFinalQuestionMark(std::string_view text);

enum class TargetClass { kFunction, kContent, kCommonMisspelled };
enum class PerturbMechanism { kKeySwap, kMisspell };

TargetClass ParseTargetClass(std::string_view name);
PerturbMechanism ParseMechanism(std::string_view name);

// Word-class sources for one text: the lexicon heuristic unless sidecar
// annotations are supplied.
struct TaggingContext {
  const WordClassLexicon* lexicon = &WordClassLexicon::Default();
  const std::vector<TokenAnnotation>* pos = nullptr;
  const std::vector<TokenAnnotation>* ne = nullptr;
};

// Applies `mechanism` with probability 1 to every token of `target`.
// kCommonMisspelled selects lexicon keys. kMisspell requires `lexicon`;
// tokens without a lexicon entry stay unchanged.
std::string TargetedPerturb(std::string_view text, TargetClass target,
                            PerturbMechanism mechanism,
                            const TaggingContext& tagging,
                            const KeyboardLayout& layout,
                            const MisspellingLexicon* lexicon,
                            std::uint64_t seed);

// Removes every function (or content) word. kCommonMisspelled is rejected.
std::string DropWords(std::string_view text, TargetClass target,
                      const TaggingContext& tagging);

inline constexpr std::string_view kEntityPlaceholder = "ENTITY";

// Replaces one uniformly chosen PER/LOC/ORG span (or heuristic span) with
// "ENTITY". Texts without such a span come back unchanged and flagged.
NoiseOutcome NePlaceholder(std::string_view text, const TaggingContext& tagging,
                           std::uint64_t seed);

// Spells out every digit run; runs over 15 digits stay and are flagged.
NoiseOutcome SpellOutNumerals(std::string_view text, bool year_rule = true);

}  // namespace qanoise

#endif  // QANOISE_NOISEGEN_H_
