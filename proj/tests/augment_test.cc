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


#include "qanoise/augment.h"

#include <gtest/gtest.h>

#include "qanoise/errors.h"
#include "test_data.h"

namespace qanoise {
namespace {

using testing::DataPath;

TEST(NoisePolicyTest, ParseAndFormat) {
  const NoisePolicy p = ParseNoisePolicy("typo=key_swap:p=0.1,seed=3");
  EXPECT_EQ(p.name, "typo");
  EXPECT_EQ(p.kind, NoiseKind::kKeySwap);
  EXPECT_EQ(p.seed, 3u);
  EXPECT_DOUBLE_EQ(p.Probability(0.25), 0.1);
  EXPECT_EQ(ParseNoisePolicy(FormatNoisePolicy(p)).params, p.params);
  const NoisePolicy d = ParseNoisePolicy("strip_punct");
  EXPECT_EQ(d.name, "strip_punct");
  EXPECT_FALSE(d.seed.has_value());
}

TEST(NoisePolicyTest, RejectsBadSpecs) {
  EXPECT_THROW(ParseNoisePolicy("telepathy"), ConfigError);
  EXPECT_THROW(ParseNoisePolicy("key_swap:p=2"), ConfigError);
  EXPECT_THROW(ParseNoisePolicy("key_swap:colour=red"), ConfigError);
  EXPECT_THROW(ParseNoisePolicy("key_swap:p"), ConfigError);
}

TEST(NoisePolicyTest, InterfaceLabels) {
  EXPECT_EQ(InterfaceOf(NoiseKind::kKeySwap), "keyboard");
  EXPECT_EQ(InterfaceOf(NoiseKind::kBackTranslate), "mt");
  EXPECT_EQ(InterfaceOf(NoiseKind::kTtsAsr), "asr");
  EXPECT_TRUE(IsStochastic(NoiseKind::kKeySwap));
  EXPECT_FALSE(IsStochastic(NoiseKind::kStripPunct));
}

TEST(CheckPolicyTest, MissingResourcesAndSeeds) {
  PolicyResources none;
  EXPECT_THROW(CheckPolicy(ParseNoisePolicy("back_translate:pivot=de"), none),
               ConfigError);
  EXPECT_THROW(CheckPolicy(ParseNoisePolicy("tts_asr"), none), ConfigError);
  EXPECT_THROW(CheckPolicy(ParseNoisePolicy("misspell_lexicon:seed=1"), none),
               ConfigError);
  EXPECT_THROW(CheckPolicy(ParseNoisePolicy("key_swap"), none), ConfigError);
  EXPECT_NO_THROW(CheckPolicy(ParseNoisePolicy("key_swap:seed=1"), none));
}

TEST(ApplyPolicyTest, SeedDerivedPerRecord) {
  const NoisePolicy p = ParseNoisePolicy("key_swap:p=0.5,seed=7");
  PolicyResources r;
  const std::string q = "How many Panthers defense players were selected?";
  EXPECT_EQ(ApplyPolicy(p, "q1", q, r).text, ApplyPolicy(p, "q1", q, r).text);
  bool differs = false;
  for (int i = 0; i < 10 && !differs; ++i) {
    differs = ApplyPolicy(p, "a" + std::to_string(i), q, r).text !=
              ApplyPolicy(p, "b" + std::to_string(i), q, r).text;
  }
  EXPECT_TRUE(differs);
}

TEST(ApplyPoliciesTest, ChainInOrder) {
  PolicyResources r;
  const auto chain = {ParseNoisePolicy("spell_out_numerals"),
                      ParseNoisePolicy("strip_final_qmark")};
  EXPECT_EQ(ApplyPolicies(chain, "q", "What happened in 1959?", r).text,
            "What happened in nineteen fifty-nine");
}

TEST(NoiseQuestionsTest, IndependentOfJobs) {
  const Dataset base = LoadSquad(DataPath("toy_squad.json"));
  PolicyResources r;
  const std::vector<NoisePolicy> chain = {ParseNoisePolicy("key_swap:p=0.25,seed=7")};
  const NoiseRun one = NoiseQuestions(base, chain, r, 1);
  const NoiseRun four = NoiseQuestions(base, chain, r, 4);
  EXPECT_EQ(one.noisy, four.noisy);
  EXPECT_EQ(one.noisy.size(), 8u);
}

TEST(NoiseQuestionsTest, AdapterFailuresSkipRecords) {
  const Dataset base = LoadSquad(DataPath("toy_squad.json"));
  const auto mt = LoadEngine(DataPath("table1_mt.json"));
  AuditLog audit;
  PolicyResources r;
  r.mt = mt.get();
  r.audit = &audit;
  r.retry.sleep = [](std::chrono::milliseconds) {};
  const NoiseRun run =
      NoiseQuestions(base, {ParseNoisePolicy("back_translate:pivot=de")}, r, 3);
  ASSERT_EQ(run.noisy.size(), 1u);
  EXPECT_EQ(run.noisy.at("lama1"), "What has a Lama decided to do?");
  EXPECT_EQ(run.warnings.size(), 7u);
  EXPECT_EQ(run.warnings.front().qid, "lama2");
}

TEST(EmitAugmentedTest, OneCopyPerPolicy) {
  const Dataset base = LoadSquad(DataPath("toy3_squad.json"));
  PolicyResources r;
  const AugmentResult out = EmitAugmented(
      base, {ParseNoisePolicy("typo=key_swap:p=1,seed=1")}, r, 2);
  ASSERT_EQ(out.dataset.questions().size(), 6u);
  const auto& qs = out.dataset.questions();
  EXPECT_EQ(qs[0].qid, "norm1");
  EXPECT_EQ(qs[1].qid, "norm1#typo");
  EXPECT_EQ(qs[1].answers, qs[0].answers);
  EXPECT_EQ(qs[1].context_id, qs[0].context_id);
  EXPECT_NE(qs[1].question, qs[0].question);
  EXPECT_EQ(out.dataset.contexts(), base.contexts());
}

TEST(EmitAugmentedTest, DuplicateNamesRejected) {
  const Dataset base = LoadSquad(DataPath("toy3_squad.json"));
  EXPECT_THROW(EmitAugmented(base,
                             {ParseNoisePolicy("strip_punct"),
                              ParseNoisePolicy("strip_punct")},
                             {}, 1),
               ConfigError);
}

}  // namespace
}  // namespace qanoise
