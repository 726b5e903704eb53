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


#ifndef QANOISE_TEXTCORE_H_
#define QANOISE_TEXTCORE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qanoise {

// ---- UTF-8 helpers -------------------------------------------------------

// Invalid byte sequences decode to U+FFFD, one per offending byte.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t cp, std::string& out);

// Number of code points in `text`.
std::size_t CodePointCount(std::string_view text);
// Byte offset of the code point with index `cp_index`; returns text.size()
// when cp_index equals the code point count, npos when past the end.
std::size_t ByteOffsetOfCodePoint(std::string_view text, std::size_t cp_index);

bool IsLetter(char32_t cp);
bool IsDigit(char32_t cp);
bool IsSpace(char32_t cp);
bool IsPunctuation(char32_t cp);
bool IsUpper(char32_t cp);
bool IsLower(char32_t cp);

// Simple one-to-one case mapping covering ASCII, Latin-1, Latin Extended-A,
// Greek and basic Cyrillic.
char32_t ToLower(char32_t cp);
char32_t ToUpper(char32_t cp);
std::string CaseFold(std::string_view text);

// Case shape of a word, used to carry capitalization over to replacements.
enum class CasePattern { kLower, kTitle, kUpper };

CasePattern DetectCasePattern(std::string_view word);
std::string ApplyCasePattern(std::string_view word, CasePattern pattern);

// ---- Tokenization ----------------------------------------------------------

enum class TokenKind { kWord, kNumber, kPunctuation, kSymbol };

struct Token {
  std::string surface;
  std::size_t begin = 0;  // byte offsets, half-open
  std::size_t end = 0;
  TokenKind kind = TokenKind::kWord;

  bool operator==(const Token&) const = default;
};

// Rule-based tokenizer:
//  * words are maximal letter runs; an apostrophe (' or U+2019) with letters
//    on both sides stays inside the word;
//  * numbers are maximal ASCII digit runs;
//  * every punctuation mark or symbol is its own token;
//  * whitespace separates tokens and is never part of one.
std::vector<Token> Tokenize(std::string_view text);

// Rebuilds `text` with token i replaced by replacements[i] where the entry
// is set. Gaps between tokens are copied through.
std::string ReplaceTokens(std::string_view text,
                          const std::vector<Token>& tokens,
                          const std::vector<const std::string*>& replacements);

// Joins runs of whitespace into single spaces and trims both ends.
std::string CollapseWhitespace(std::string_view text);

// Removes the tokens whose index is flagged, then collapses whitespace.
std::string RemoveTokens(std::string_view text, const std::vector<Token>& tokens,
                         const std::vector<bool>& remove);

// SQuAD answer normalization: lowercase, drop ASCII punctuation, drop the
// articles a/an/the as whole words, split on whitespace.
std::vector<std::string> NormalizeAnswer(std::string_view text);

}  // namespace qanoise

#endif  // QANOISE_TEXTCORE_H_
