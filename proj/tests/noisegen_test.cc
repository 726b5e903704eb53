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

#include <gtest/gtest.h>

#include "qanoise/edit_distance.h"
#include "qanoise/errors.h"
#include "qanoise/textcore.h"

namespace qanoise {
namespace {

const KeyboardLayout& Qwerty() { return KeyboardLayout::Qwerty(); }

TEST(KeySwapTest, ZeroProbabilityIsIdentity) {
  const std::string q = "What has a Lama determined to do?";
  EXPECT_EQ(KeySwapNoise(q, {0.0, true}, Qwerty(), 1), q);
}

TEST(KeySwapTest, FullProbabilityHitsEveryWordOnce) {
  const std::string q = "What has a Lama determined to do?";
  const std::string noisy = KeySwapNoise(q, {1.0, true}, Qwerty(), 9);
  const auto clean_tokens = Tokenize(q);
  const auto noisy_tokens = Tokenize(noisy);
  ASSERT_EQ(clean_tokens.size(), noisy_tokens.size());
  for (std::size_t i = 0; i < clean_tokens.size(); ++i) {
    const std::string& a = clean_tokens[i].surface;
    const std::string& b = noisy_tokens[i].surface;
    if (clean_tokens[i].kind != TokenKind::kWord) {
      EXPECT_EQ(a, b);
      continue;
    }
    ASSERT_EQ(a.size(), b.size());
    int diffs = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == b[k]) continue;
      ++diffs;
      EXPECT_TRUE(Qwerty().RowAdjacent(a[k], b[k])) << a << " -> " << b;
      EXPECT_EQ(IsUpper(static_cast<unsigned char>(a[k])),
                IsUpper(static_cast<unsigned char>(b[k])));
    }
    EXPECT_EQ(diffs, 1) << a << " -> " << b;
  }
}

TEST(KeySwapTest, SingleCharacterWordsCanBeProtected) {
  const std::string q = "a b c";
  EXPECT_EQ(KeySwapNoise(q, {1.0, false}, Qwerty(), 3), q);
  EXPECT_NE(KeySwapNoise(q, {1.0, true}, Qwerty(), 3), q);
}

TEST(KeySwapTest, DeterministicPerSeed) {
  const std::string q = "How many Panthers defense players were selected?";
  EXPECT_EQ(KeySwapNoise(q, {0.5, true}, Qwerty(), 42),
            KeySwapNoise(q, {0.5, true}, Qwerty(), 42));
  bool differs = false;
  for (std::uint64_t s = 0; s < 10 && !differs; ++s) {
    differs = KeySwapNoise(q, {0.5, true}, Qwerty(), s) !=
              KeySwapNoise(q, {0.5, true}, Qwerty(), s + 100);
  }
  EXPECT_TRUE(differs);
}

TEST(KeySwapTest, NonWordsUntouched) {
  const std::string q = "In 1959, 3,837 yards!";
  const std::string noisy = KeySwapNoise(q, {1.0, true}, Qwerty(), 5);
  EXPECT_NE(noisy.find("1959, 3,837"), std::string::npos);
  EXPECT_EQ(noisy.back(), '!');
}

TEST(MisspellingLexiconTest, ParseAndFormat) {
  const MisspellingLexicon lex =
      MisspellingLexicon::Parse("and\tadn\nand\tnad\nAnd\tadn\nthe\tthe\n");
  EXPECT_EQ(lex.word_count(), 1u);
  EXPECT_EQ(lex.pair_count(), 2u);
  EXPECT_EQ(lex.Format(), "and\tadn\nand\tnad\n");
}

TEST(InjectMisspellingsTest, ReplacesKeysKeepingCase) {
  const MisspellingLexicon lex = MisspellingLexicon::Parse("determined\tdetermied\n");
  EXPECT_EQ(InjectMisspellings("Determined to do", lex, 1.0, 1),
            "Determied to do");
  EXPECT_EQ(InjectMisspellings("Determined to do", lex, 0.0, 1),
            "Determined to do");
}

TEST(PunctuationTest, StripAll) {
  EXPECT_EQ(StripPunctuation("What has a Lama, determined to do?"),
            "What has a Lama determined to do");
  EXPECT_EQ(StripPunctuation("Levi's Stadium?"), "Levi's Stadium");
}

TEST(PunctuationTest, StripFinalQuestionMarkOnly) {
  EXPECT_EQ(StripFinalQuestionMark("Why? Because?  "), "Why? Because");
  EXPECT_EQ(StripFinalQuestionMark("No mark."), "No mark.");
}

TEST(TargetedPerturbTest, OnlyTargetClassChanges) {
  const std::string q = "What has a Lama determined to do?";
  const std::string noisy = TargetedPerturb(q, TargetClass::kFunction,
                                            PerturbMechanism::kKeySwap, {},
                                            Qwerty(), nullptr, 4);
  const auto a = Tokenize(q);
  const auto b = Tokenize(noisy);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_NE(a[0].surface, b[0].surface);  // What
  EXPECT_NE(a[2].surface, b[2].surface);  // a
  EXPECT_EQ(a[3].surface, b[3].surface);  // Lama
  EXPECT_EQ(a[4].surface, b[4].surface);  // determined
}

TEST(TargetedPerturbTest, NoTargetWordsMeansIdentity) {
  EXPECT_EQ(TargetedPerturb("six", TargetClass::kFunction,
                            PerturbMechanism::kKeySwap, {}, Qwerty(), nullptr, 4),
            "six");
}

TEST(TargetedPerturbTest, CommonMisspelledUsesLexiconKeys) {
  const MisspellingLexicon lex = MisspellingLexicon::Parse("determined\tdetermied\n");
  EXPECT_EQ(TargetedPerturb("What has a Lama determined to do?",
                            TargetClass::kCommonMisspelled,
                            PerturbMechanism::kMisspell, {}, Qwerty(), &lex, 1),
            "What has a Lama determied to do?");
  EXPECT_THROW(TargetedPerturb("x", TargetClass::kContent,
                               PerturbMechanism::kMisspell, {}, Qwerty(),
                               nullptr, 1),
               ConfigError);
}

TEST(DropWordsTest, FunctionAndContent) {
  EXPECT_EQ(DropWords("What has a Lama determined to do?", TargetClass::kFunction, {}),
            "Lama determined?");
  EXPECT_EQ(DropWords("What has a Lama determined to do?", TargetClass::kContent, {}),
            "What has a to do?");
  EXPECT_EQ(DropWords("the Pro Bowl", TargetClass::kFunction, {}), "Pro Bowl");
  EXPECT_EQ(DropWords("Cats, and dogs.", TargetClass::kFunction, {}), "Cats, dogs.");
  EXPECT_THROW(DropWords("x", TargetClass::kCommonMisspelled, {}), ConfigError);
}

TEST(NePlaceholderTest, ReplacesOneSpan) {
  const NoiseOutcome out = NePlaceholder(
      "How many Panthers defense players were selected for the Pro Bowl?", {}, 2);
  EXPECT_FALSE(out.flagged);
  EXPECT_NE(out.text.find("ENTITY"), std::string::npos);
  const bool first = out.text ==
      "How many ENTITY defense players were selected for the Pro Bowl?";
  const bool second = out.text ==
      "How many Panthers defense players were selected for the ENTITY?";
  EXPECT_TRUE(first || second) << out.text;
}

TEST(NePlaceholderTest, FlagsTextWithoutEntities) {
  const NoiseOutcome out = NePlaceholder("what is it?", {}, 2);
  EXPECT_TRUE(out.flagged);
  EXPECT_EQ(out.text, "what is it?");
}

TEST(SpellOutNumeralsTest, YearsAndCounts) {
  EXPECT_EQ(SpellOutNumerals("What happened in 1959 to 308 monks?").text,
            "What happened in nineteen fifty-nine to three hundred eight monks?");
  const NoiseOutcome big = SpellOutNumerals("id 12345678901234567");
  EXPECT_TRUE(big.flagged);
  EXPECT_EQ(big.text, "id 12345678901234567");
}

}  // namespace
}  // namespace qanoise
