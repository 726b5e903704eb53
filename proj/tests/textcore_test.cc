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


#include "qanoise/textcore.h"

#include <gtest/gtest.h>

namespace qanoise {
namespace {

std::vector<std::string> Surfaces(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : Tokenize(text)) out.push_back(t.surface);
  return out;
}

TEST(Utf8Test, RoundTrip) {
  const std::string text = "Café naïve 東京";
  EXPECT_EQ(EncodeUtf8(DecodeUtf8(text)), text);
  EXPECT_EQ(CodePointCount(text), 13u);
  EXPECT_EQ(ByteOffsetOfCodePoint(text, 4), 5u);
}

TEST(CaseTest, FoldAndPatterns) {
  EXPECT_EQ(CaseFold("ÉCOLE Lama"), "école lama");
  EXPECT_EQ(DetectCasePattern("lama"), CasePattern::kLower);
  EXPECT_EQ(DetectCasePattern("Lama"), CasePattern::kTitle);
  EXPECT_EQ(DetectCasePattern("NFL"), CasePattern::kUpper);
  EXPECT_EQ(ApplyCasePattern("lama", CasePattern::kTitle), "Lama");
  EXPECT_EQ(ApplyCasePattern("lama", CasePattern::kUpper), "LAMA");
}

TEST(TokenizeTest, WordsNumbersPunctuation) {
  EXPECT_EQ(Surfaces("What has a Lama determined to do?"),
            (std::vector<std::string>{"What", "has", "a", "Lama", "determined",
                                      "to", "do", "?"}));
  const auto tokens = Tokenize("In 1959, he won.");
  ASSERT_EQ(tokens.size(), 6u);
  EXPECT_EQ(tokens[1].kind, TokenKind::kNumber);
  EXPECT_EQ(tokens[2].kind, TokenKind::kPunctuation);
}

TEST(TokenizeTest, InternalApostropheStaysInWord) {
  EXPECT_EQ(Surfaces("Levi's Stadium"),
            (std::vector<std::string>{"Levi's", "Stadium"}));
}

TEST(TokenizeTest, OffsetsCoverSurfaces) {
  const std::string text = "  Who   built Notre-Dame?";
  for (const Token& t : Tokenize(text)) {
    EXPECT_EQ(text.substr(t.begin, t.end - t.begin), t.surface);
  }
}

TEST(ReplaceTokensTest, KeepsSpacing) {
  const std::string text = "What has a  Lsma determined?";
  const auto tokens = Tokenize(text);
  const std::string lama = "Lama";
  std::vector<const std::string*> repl(tokens.size(), nullptr);
  repl[3] = &lama;
  EXPECT_EQ(ReplaceTokens(text, tokens, repl), "What has a  Lama determined?");
}

TEST(RemoveTokensTest, CollapsesWhitespace) {
  const std::string text = "the cat and the dog";
  const auto tokens = Tokenize(text);
  std::vector<bool> remove(tokens.size(), false);
  remove[2] = true;
  remove[3] = true;
  EXPECT_EQ(RemoveTokens(text, tokens, remove), "the cat dog");
}

TEST(NormalizeAnswerTest, SquadRules) {
  EXPECT_EQ(NormalizeAnswer("The  Denver Broncos!"),
            (std::vector<std::string>{"denver", "broncos"}));
  EXPECT_EQ(NormalizeAnswer("an apple, a pear"),
            (std::vector<std::string>{"apple", "pear"}));
  EXPECT_TRUE(NormalizeAnswer("the").empty());
}

}  // namespace
}  // namespace qanoise
