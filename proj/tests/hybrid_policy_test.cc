// Copyright 2026 The mcnli Authors.
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

#include "mcnli/hybrid_policy.h"

#include <gtest/gtest.h>

#include "test_support.h"

namespace mcnli {
namespace {

const char kQuestion[] = "How often does the woman see her parents?";
const char kAnswer[] = "Once a week.";

TEST(WellFormedTest, DefaultsAcceptGoodHypothesis) {
  EXPECT_TRUE(WellFormed("The woman sees her parents once a week.", kQuestion, kAnswer));
}

TEST(WellFormedTest, QuestionMarkRejected) {
  EXPECT_FALSE(WellFormed("When will we tire of this circus?", kQuestion, kAnswer));
  HybridConfig lax;
  lax.forbid_question_mark = false;
  lax.min_answer_overlap = 0.0;
  EXPECT_TRUE(WellFormed("When will we tire of this circus?", kQuestion, kAnswer, lax));
}

TEST(WellFormedTest, EmptyRejected) {
  EXPECT_FALSE(WellFormed("", kQuestion, kAnswer));
  EXPECT_FALSE(WellFormed("   ", kQuestion, kAnswer));
}

TEST(WellFormedTest, OverlapThreshold) {
  // Answer content words: {once, week}. One of two survives: 0.5 < 0.6.
  EXPECT_FALSE(WellFormed("The woman sees her parents once.", kQuestion, kAnswer));
  HybridConfig half;
  half.min_answer_overlap = 0.5;
  EXPECT_TRUE(WellFormed("The woman sees her parents once.", kQuestion, kAnswer, half));
}

TEST(WellFormedTest, AnswerWithoutContentWordsPassesVacuously) {
  EXPECT_TRUE(WellFormed("It is so.", "Is it?", "No"));
}

TEST(WellFormedTest, LengthRatio) {
  // question 2 tokens + answer 1 token, default ratio 2.5 -> at most 7.5 tokens.
  EXPECT_TRUE(WellFormed("Tom one two three four five six.", "Who came?", "Tom"));
  EXPECT_FALSE(WellFormed("Tom one two three four five six seven.", "Who came?", "Tom"));
}

TEST(SelectHypothesisTest, NeuralFirst) {
  auto s = SelectHypothesis(kQuestion, kAnswer,
                            ConversionOutcome::Success("The woman sees her parents once a week."),
                            ConversionOutcome::Success("Rule text once a week."));
  EXPECT_EQ(s.strategy, Strategy::kNeural);
  EXPECT_EQ(s.hypothesis, "The woman sees her parents once a week.");
}

TEST(SelectHypothesisTest, RuleWhenNeuralFiltered) {
  auto s = SelectHypothesis(kQuestion, kAnswer,
                            ConversionOutcome::Success("When will we tire of this circus?"),
                            ConversionOutcome::Success("The woman sees her parents once a week."));
  EXPECT_EQ(s.strategy, Strategy::kRule);
}

TEST(SelectHypothesisTest, ConcatenationFallback) {
  const std::string q =
      "Did Alexander set out to secure his northern fronts and was he able to accomplish this "
      "goal?";
  auto s = SelectHypothesis(q, "Yes and yes.",
                            ConversionOutcome::Failure(FailureReason::kBackendError, "oom"),
                            ConversionOutcome::Failure(FailureReason::kMultiClause));
  EXPECT_EQ(s.strategy, Strategy::kQaConcat);
  EXPECT_EQ(s.hypothesis,
            "Did Alexander set out to secure his northern fronts and was he able to accomplish "
            "this goal? Yes and yes.");
}

TEST(SelectHypothesisTest, FitbFallbackSubstitutes) {
  auto s = SelectHypothesis("The sky is _ .", "blue",
                            ConversionOutcome::Failure(FailureReason::kBackendError),
                            ConversionOutcome::Failure(FailureReason::kNoRuleMatched));
  EXPECT_EQ(s.strategy, Strategy::kQaConcat);
  EXPECT_EQ(s.hypothesis, "The sky is blue.");
}

TEST(HybridPropertyTest, CascadeProperties) {
  testing::PropertyReport r = testing::CheckHybridCascade(2000, 11);
  EXPECT_TRUE(r.ok()) << r.failures << " failures; first: " << r.first_failure;
}

}  // namespace
}  // namespace mcnli
