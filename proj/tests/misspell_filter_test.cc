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


#include "qanoise/misspell_filter.h"

#include <gtest/gtest.h>

#include "qanoise/errors.h"

namespace qanoise {
namespace {

TEST(ClassifyPairTest, CanonicalExamples) {
  EXPECT_EQ(ClassifyPair("of", "if"), ErrorCategory::kKeySwap);
  EXPECT_EQ(ClassifyPair("type", "tpye"), ErrorCategory::kAdjSwap);
  EXPECT_EQ(ClassifyPair("school", "schol"), ErrorCategory::kDeletion);
  EXPECT_EQ(ClassifyPair("cat", "caat"), ErrorCategory::kInsertion);
  EXPECT_EQ(ClassifyPair("cat", "cot"), ErrorCategory::kSubstitution);
  EXPECT_EQ(ClassifyPair("don't", "dont"), ErrorCategory::kApostrophe);
  EXPECT_EQ(ClassifyPair("alot", "a lot"), ErrorCategory::kWhitespace);
  EXPECT_EQ(ClassifyPair("receive", "recieve"), ErrorCategory::kAdjSwap);
  EXPECT_EQ(ClassifyPair("article", "artical"), ErrorCategory::kMultiple);
  EXPECT_THROW(ClassifyPair("same", "same"), ValidationError);
}

TEST(ClassifyPairTest, AdjacencyModes) {
  // 'o' and 'k' touch on a staggered board but are not row neighbors.
  EXPECT_EQ(ClassifyPair("ok", "kk", KeyboardLayout::Qwerty(), KeyAdjacency::kPhysical),
            ErrorCategory::kKeySwap);
  EXPECT_EQ(ClassifyPair("ok", "kk", KeyboardLayout::Qwerty(), KeyAdjacency::kRowWise),
            ErrorCategory::kSubstitution);
}

TEST(FilterLexiconTest, CanonicalVerdicts) {
  const FilterResult r = FilterLexicon(
      {{"and", "adn"}, {"article", "artical"}, {"receive", "recieve"}}, {});
  ASSERT_EQ(r.audit.size(), 3u);
  EXPECT_TRUE(r.audit[0].retained);
  EXPECT_FALSE(r.audit[1].retained);
  EXPECT_FALSE(r.audit[1].category_ok);
  EXPECT_FALSE(r.audit[2].retained);
  EXPECT_TRUE(r.audit[2].category_ok);
  EXPECT_FALSE(r.audit[2].pronunciation_ok);
  EXPECT_EQ(r.lexicon.pair_count(), 1u);
  EXPECT_TRUE(r.lexicon.Contains("and"));
}

TEST(FilterLexiconTest, ThresholdAndCategoriesConfigurable) {
  FilterConfig loose;
  loose.pron_threshold = 0.0;
  EXPECT_TRUE(FilterLexicon({{"receive", "recieve"}}, loose).audit[0].retained);
  FilterConfig only_deletions;
  only_deletions.retained_categories = {ErrorCategory::kDeletion};
  EXPECT_FALSE(FilterLexicon({{"and", "adn"}}, only_deletions).audit[0].retained);
  FilterConfig bad;
  bad.pron_threshold = 1.5;
  EXPECT_THROW(FilterLexicon({}, bad), ConfigError);
}

TEST(FilterLexiconTest, G2pTableDecidesPronunciation) {
  G2pTable table = G2pTable::Parse("and\tAH0 N D\nadn\tAH0 N D\n");
  const FilterResult r = FilterLexicon({{"and", "adn"}}, {},
                                       KeyboardLayout::Qwerty(), &table);
  EXPECT_FALSE(r.audit[0].retained);
  EXPECT_EQ(r.audit[0].pron_distance, 0.0);
}

TEST(FilterLexiconTest, AuditFormat) {
  const FilterResult r = FilterLexicon({{"and", "adn"}, {"x", "x"}}, {});
  EXPECT_EQ(FormatAudit(r.audit),
            "word\tmisspelling\tcategory\tpron_distance\tverdict\n"
            "and\tadn\tAdjSwap\t0.6667\tretain\n"
            "x\tx\tMultiple\t0.0000\tdiscard\n");
}

TEST(RawListTest, WikipediaAndTsvFormats) {
  const auto pairs = ParseRawMisspellings(
      "abandonned->abandoned\nacheive->achieve, achieved\n# note\nand\tadn\n");
  ASSERT_EQ(pairs.size(), 4u);
  EXPECT_EQ(pairs[0].word, "abandoned");
  EXPECT_EQ(pairs[0].misspelling, "abandonned");
  EXPECT_EQ(pairs[2].word, "achieved");
  EXPECT_EQ(pairs[3].misspelling, "adn");
  EXPECT_THROW(ParseRawMisspellings("garbage line\n"), ParseError);
}

TEST(CalibrationTest, SweepFindsSeparatingThreshold) {
  const auto sample = ParseLabeledSample(
      "and\tadn\tinterface\n"
      "receive\trecieve\tnon-interface\n"
      "school\tschol\tnon-interface\n"
      "of\tif\tinterface\n");
  const Calibration c =
      CalibrateThreshold(sample, {}, KeyboardLayout::Qwerty(), nullptr, 0.05);
  EXPECT_EQ(c.sweep.size(), 21u);
  EXPECT_EQ(c.best.agreement, 100.0);
  EXPECT_GT(c.best.threshold, 0.0);
  EXPECT_LE(c.best.threshold, 0.5);
  EXPECT_EQ(c.sweep.front().agreement, 50.0);
}

TEST(CalibrationTest, AgreementRejectsEmptySample) {
  EXPECT_THROW(Agreement({}, {}), ValidationError);
}

}  // namespace
}  // namespace qanoise
