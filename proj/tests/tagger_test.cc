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


#include "qanoise/tagger.h"

#include <gtest/gtest.h>

#include "qanoise/textcore.h"

namespace qanoise {
namespace {

std::vector<WordClass> Classes(std::string_view text,
                               const std::vector<TokenAnnotation>* pos = nullptr) {
  return TagWordClasses(Tokenize(text), WordClassLexicon::Default(), pos);
}

TEST(WordClassTest, HeuristicFunctionAndContentWords) {
  const auto c = Classes("What has a Lama determined to do?");
  // What has a Lama determined to do ?
  EXPECT_EQ(c[0], WordClass::kFunction);
  EXPECT_EQ(c[2], WordClass::kFunction);
  EXPECT_EQ(c[3], WordClass::kContent);
  EXPECT_EQ(c[7], WordClass::kOther);
}

TEST(WordClassTest, PosAnnotationsDecide) {
  const std::vector<TokenAnnotation> pos = {{0, "PRON"}, {1, "VERB"}, {2, "DT"},
                                            {3, "NNP"}, {4, "ADJ"}};
  const auto c = Classes("What has a Lama determined", &pos);
  EXPECT_EQ(c[0], WordClass::kFunction);
  EXPECT_EQ(c[1], WordClass::kOther);
  EXPECT_EQ(c[2], WordClass::kFunction);
  EXPECT_EQ(c[3], WordClass::kContent);
  EXPECT_EQ(c[4], WordClass::kContent);
}

TEST(WordClassTest, CustomLexicon) {
  const WordClassLexicon lex = WordClassLexicon::Parse("function\tlama\n");
  const auto c = TagWordClasses(Tokenize("the lama"), lex, nullptr);
  EXPECT_EQ(c[1], WordClass::kFunction);
}

TEST(EntityTest, HeuristicSpans) {
  const auto tokens =
      Tokenize("How many Panthers defense players were selected for the Pro Bowl?");
  const auto spans = DetectEntities(tokens, WordClassLexicon::Default(), nullptr);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (EntitySpan{2, 3, "ENT"}));
  EXPECT_EQ(spans[1], (EntitySpan{9, 11, "ENT"}));
}

TEST(EntityTest, AcronymsAndSentenceStart) {
  const auto tokens = Tokenize("Normans met the NFL team.");
  const auto spans = DetectEntities(tokens, WordClassLexicon::Default(), nullptr);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].first, 3u);
}

TEST(EntityTest, AnnotationsWithBioPrefixes) {
  const auto tokens = Tokenize("When did Cam Newton play in Denver?");
  const std::vector<TokenAnnotation> ne = {
      {2, "B-PER"}, {3, "I-PER"}, {4, "O"}, {6, "LOC"}};
  const auto spans = DetectEntities(tokens, WordClassLexicon::Default(), &ne);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (EntitySpan{2, 4, "PER"}));
  EXPECT_EQ(spans[1], (EntitySpan{6, 7, "LOC"}));
}

}  // namespace
}  // namespace qanoise
