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


#include "qanoise/phonetic.h"

#include <gtest/gtest.h>

#include "qanoise/errors.h"

namespace qanoise {
namespace {

std::string Encoded(std::string_view word) {
  std::string out;
  for (const std::string& p : PhoneticEncode(word).phonemes) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

double Distance(std::string_view a, std::string_view b) {
  return NormalizedPhonemeDistance(PhoneticEncode(a).phonemes,
                                   PhoneticEncode(b).phonemes, PhonemeWeights());
}

TEST(PhoneticEncodeTest, PronunciationPreservingPairsCollide) {
  EXPECT_EQ(Encoded("receive"), Encoded("recieve"));
  EXPECT_EQ(Encoded("school"), Encoded("schol"));
  EXPECT_EQ(Encoded("phone"), Encoded("fone"));
  EXPECT_EQ(Encoded("knight"), Encoded("nite"));
}

TEST(PhoneticEncodeTest, TypingErrorsDiffer) {
  EXPECT_NEAR(Distance("and", "adn"), 2.0 / 3, 1e-9);
  EXPECT_NEAR(Distance("article", "artical"), 1.0 / 7, 1e-9);
  EXPECT_NEAR(Distance("of", "if"), 0.5, 1e-9);
  EXPECT_GE(Distance("type", "tpye"), 0.25);
}

TEST(PhoneticEncodeTest, TableOverridesEncoder) {
  G2pTable table = G2pTable::Parse("receive\tR IH0 S IY1 V\n");
  const PhoneticForm form = PhoneticEncode("Receive", &table);
  EXPECT_EQ(form.source, PhoneticForm::Source::kG2pTable);
  EXPECT_EQ(form.phonemes.size(), 5u);
  EXPECT_EQ(PhoneticEncode("recieve", &table).source,
            PhoneticForm::Source::kBuiltinEncoder);
}

TEST(PhoneticEncodeTest, RejectsWordsWithoutLetters) {
  EXPECT_THROW(PhoneticEncode("1959"), ValidationError);
}

TEST(PhonemeDistanceTest, WeightsAndNormalization) {
  PhonemeWeights w = PhonemeWeights::Parse("S\tZ\t0.2\n*\t*\t0.5\n");
  EXPECT_NEAR(NormalizedPhonemeDistance({"S", "A"}, {"Z", "A"}, w), 0.1, 1e-9);
  EXPECT_NEAR(NormalizedPhonemeDistance({"S", "A"}, {"A"}, w), 0.25, 1e-9);
  EXPECT_EQ(NormalizedPhonemeDistance({}, {}, w), 0.0);
  EXPECT_EQ(w.Substitution("Z", "S"), w.Substitution("S", "Z"));
}

}  // namespace
}  // namespace qanoise
