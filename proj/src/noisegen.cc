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


#include "qanoise/noisegen.h"

#include <algorithm>

#include "qanoise/errors.h"
#include "qanoise/numerals.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

// Replaces one letter of `word` with a row-wise neighbor. Returns nullopt
// when no letter has a neighbor.
std::optional<std::string> SwapOneKey(std::string_view word,
                                      const KeyboardLayout& layout, Rng& rng) {
  std::u32string cps = DecodeUtf8(word);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] < 0x80 && IsLetter(cps[i]) &&
        !layout.RowNeighbors(static_cast<char>(cps[i])).empty()) {
      candidates.push_back(i);
    }
  }
  if (candidates.empty()) return std::nullopt;
  const std::size_t pos = candidates[rng.Index(candidates.size())];
  const std::string& neighbors =
      layout.RowNeighbors(static_cast<char>(cps[pos]));
  char32_t replacement = static_cast<unsigned char>(
      neighbors[rng.Index(neighbors.size())]);
  if (IsUpper(cps[pos])) replacement = ToUpper(replacement);
  cps[pos] = replacement;
  return EncodeUtf8(cps);
}

std::string SampleMisspelling(std::string_view word,
                              const std::vector<std::string>& options,
                              Rng& rng) {
  const std::string& chosen = options[rng.Index(options.size())];
  return ApplyCasePattern(chosen, DetectCasePattern(word));
}

std::size_t LetterCount(std::string_view word) {
  std::size_t n = 0;
  for (char32_t cp : DecodeUtf8(word)) n += IsLetter(cp);
  return n;
}

bool IsPlaceholderType(const std::string& type) {
  return type == "PER" || type == "LOC" || type == "ORG" || type == "ENT" ||
         type == "PERSON" || type == "GPE";
}

}  // namespace

MisspellingLexicon MisspellingLexicon::Parse(std::string_view text) {
  MisspellingLexicon lexicon;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    if (cells.size() != 2 || Trim(cells[0]).empty() ||
        Trim(cells[1]).empty()) {
      throw ParseError("misspelling lexicon line " + std::to_string(line_no) +
                       ": expected word<TAB>misspelling");
    }
    lexicon.Add(Trim(cells[0]), Trim(cells[1]));
  }
  return lexicon;
}

MisspellingLexicon MisspellingLexicon::FromFile(const std::string& path) {
  return Parse(ReadFile(path));
}

bool MisspellingLexicon::Add(std::string_view word,
                             std::string_view misspelling) {
  std::string key = CaseFold(word);
  std::string value = CaseFold(misspelling);
  if (key.empty() || value.empty() || key == value) return false;
  std::vector<std::string>& list = entries_[key];
  if (std::find(list.begin(), list.end(), value) != list.end()) return false;
  list.push_back(std::move(value));
  return true;
}

const std::vector<std::string>* MisspellingLexicon::Find(
    std::string_view word) const {
  const auto it = entries_.find(CaseFold(word));
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t MisspellingLexicon::pair_count() const {
  std::size_t n = 0;
  for (const auto& [word, list] : entries_) n += list.size();
  return n;
}

std::string MisspellingLexicon::Format() const {
  std::string out;
  for (const auto& [word, list] : entries_) {
    for (const std::string& m : list) out += word + "\t" + m + "\n";
  }
  return out;
}

std::string KeySwapNoise(std::string_view text, const KeySwapOptions& options,
                         const KeyboardLayout& layout, std::uint64_t seed) {
  if (options.probability < 0.0 || options.probability > 1.0) {
    throw ConfigError("key swap probability must lie in [0, 1]");
  }
  const std::vector<Token> tokens = Tokenize(text);
  std::vector<std::string> swapped(tokens.size());
  std::vector<const std::string*> replacements(tokens.size(), nullptr);
  Rng rng(seed);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kWord) continue;
    if (!rng.Bernoulli(options.probability)) continue;
    if (!options.allow_single_char && LetterCount(tokens[i].surface) < 2) {
      continue;
    }
    if (auto out = SwapOneKey(tokens[i].surface, layout, rng)) {
      swapped[i] = std::move(*out);
      replacements[i] = &swapped[i];
    }
  }
  return ReplaceTokens(text, tokens, replacements);
}

std::string InjectMisspellings(std::string_view text,
                               const MisspellingLexicon& lexicon,
                               double probability, std::uint64_t seed) {
  if (probability < 0.0 || probability > 1.0) {
    throw ConfigError("misspelling probability must lie in [0, 1]");
  }
  const std::vector<Token> tokens = Tokenize(text);
  std::vector<std::string> replaced(tokens.size());
  std::vector<const std::string*> replacements(tokens.size(), nullptr);
  Rng rng(seed);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kWord) continue;
    const auto* options = lexicon.Find(tokens[i].surface);
    if (options == nullptr || !rng.Bernoulli(probability)) continue;
    replaced[i] = SampleMisspelling(tokens[i].surface, *options, rng);
    replacements[i] = &replaced[i];
  }
  return ReplaceTokens(text, tokens, replacements);
}

std::string StripPunctuation(std::string_view text) {
  const std::vector<Token> tokens = Tokenize(text);
  std::vector<bool> remove(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    remove[i] = tokens[i].kind == TokenKind::kPunctuation;
  }
  return RemoveTokens(text, tokens, remove);
}

std::string StripFinalQuestionMark(std::string_view text) {
  std::size_t end = text.size();
  while (end > 0) {
    const char c = text[end - 1];
    if (c == '?' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      --end;
    } else {
      break;
    }
  }
  return std::string(text.substr(0, end));
}

TargetClass ParseTargetClass(std::string_view name) {
  if (name == "function") return TargetClass::kFunction;
  if (name == "content") return TargetClass::kContent;
  if (name == "common_misspelled") return TargetClass::kCommonMisspelled;
  throw ConfigError("unknown word class '" + std::string(name) +
                    "' (expected function, content or common_misspelled)");
}

PerturbMechanism ParseMechanism(std::string_view name) {
  if (name == "key_swap") return PerturbMechanism::kKeySwap;
  if (name == "misspell") return PerturbMechanism::kMisspell;
  throw ConfigError("unknown perturbation mechanism '" + std::string(name) +
                    "' (expected key_swap or misspell)");
}

std::string TargetedPerturb(std::string_view text, TargetClass target,
                            PerturbMechanism mechanism,
                            const TaggingContext& tagging,
                            const KeyboardLayout& layout,
                            const MisspellingLexicon* lexicon,
                            std::uint64_t seed) {
  if ((mechanism == PerturbMechanism::kMisspell ||
       target == TargetClass::kCommonMisspelled) &&
      lexicon == nullptr) {
    throw ConfigError("targeted perturbation needs a misspelling lexicon");
  }
  const std::vector<Token> tokens = Tokenize(text);
  const std::vector<WordClass> classes =
      TagWordClasses(tokens, *tagging.lexicon, tagging.pos);
  std::vector<std::string> changed(tokens.size());
  std::vector<const std::string*> replacements(tokens.size(), nullptr);
  Rng rng(seed);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    bool selected = false;
    switch (target) {
      case TargetClass::kFunction:
        selected = classes[i] == WordClass::kFunction;
        break;
      case TargetClass::kContent:
        selected = classes[i] == WordClass::kContent;
        break;
      case TargetClass::kCommonMisspelled:
        selected = tokens[i].kind == TokenKind::kWord &&
                   lexicon->Contains(tokens[i].surface);
        break;
    }
    if (!selected) continue;
    if (mechanism == PerturbMechanism::kKeySwap) {
      if (auto out = SwapOneKey(tokens[i].surface, layout, rng)) {
        changed[i] = std::move(*out);
        replacements[i] = &changed[i];
      }
    } else if (const auto* options = lexicon->Find(tokens[i].surface)) {
      changed[i] = SampleMisspelling(tokens[i].surface, *options, rng);
      replacements[i] = &changed[i];
    }
  }
  return ReplaceTokens(text, tokens, replacements);
}

std::string DropWords(std::string_view text, TargetClass target,
                      const TaggingContext& tagging) {
  if (target == TargetClass::kCommonMisspelled) {
    throw ConfigError("drop_words supports only function and content words");
  }
  const WordClass wanted = target == TargetClass::kFunction
                               ? WordClass::kFunction
                               : WordClass::kContent;
  const std::vector<Token> tokens = Tokenize(text);
  const std::vector<WordClass> classes =
      TagWordClasses(tokens, *tagging.lexicon, tagging.pos);
  std::vector<bool> remove(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    remove[i] = classes[i] == wanted;
  }
  return RemoveTokens(text, tokens, remove);
}

NoiseOutcome NePlaceholder(std::string_view text, const TaggingContext& tagging,
                           std::uint64_t seed) {
  const std::vector<Token> tokens = Tokenize(text);
  std::vector<EntitySpan> spans;
  for (EntitySpan& s : DetectEntities(tokens, *tagging.lexicon, tagging.ne)) {
    if (IsPlaceholderType(s.type)) spans.push_back(std::move(s));
  }
  if (spans.empty()) return {std::string(text), true, "no named entity"};
  Rng rng(seed);
  const EntitySpan& chosen = spans[rng.Index(spans.size())];
  const std::size_t begin = tokens[chosen.first].begin;
  const std::size_t end = tokens[chosen.last - 1].end;
  std::string out(text.substr(0, begin));
  out += kEntityPlaceholder;
  out.append(text.substr(end));
  return {std::move(out), false, {}};
}

NoiseOutcome SpellOutNumerals(std::string_view text, bool year_rule) {
  const std::vector<Token> tokens = Tokenize(text);
  std::vector<std::string> words(tokens.size());
  std::vector<const std::string*> replacements(tokens.size(), nullptr);
  NoiseOutcome outcome;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kNumber) continue;
    if (auto spelled = SpellOutDigits(tokens[i].surface, {year_rule})) {
      words[i] = std::move(*spelled);
      replacements[i] = &words[i];
    } else {
      outcome.flagged = true;
      outcome.note = "numeral longer than 15 digits left unchanged";
    }
  }
  outcome.text = ReplaceTokens(text, tokens, replacements);
  return outcome;
}

}  // namespace qanoise
