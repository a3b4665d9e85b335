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

// Shared data model: multiple-choice examples in, NLI examples out, plus the
// score records used by the evaluation harness.

#ifndef MCNLI_TYPES_H_
#define MCNLI_TYPES_H_

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcnli {

enum class Dataset { kRace, kMultiRc, kDream, kCosmosQa, kGeneric };
enum class Split { kTrain, kDev, kTest };

std::string_view DatasetName(Dataset d);
std::optional<Dataset> ParseDataset(std::string_view s);
std::string_view SplitName(Split s);
std::optional<Split> ParseSplit(std::string_view s);

struct OptionEntry {
  std::string text;
  bool is_correct = false;

  bool operator==(const OptionEntry&) const = default;
};

struct McqExample {
  // "<dataset>/<split>/<passage-id>/<question-index>"
  std::string id;
  std::vector<std::string> passage_units;
  bool is_dialogue = false;
  std::string question;
  std::vector<OptionEntry> options;
  Dataset source_dataset = Dataset::kGeneric;
  Split split = Split::kTrain;

  int NumCorrect() const;
  bool operator==(const McqExample&) const = default;
};

// RACE-scheme heuristic flags. Non-exclusive.
enum class RaceFlag { kMainIdea, kNegation, kDialogue, kMath, kDeductive, kFitb };
inline constexpr int kNumRaceFlags = 6;

// MultiRC-scheme type. Exactly one per question.
enum class MultiRcType {
  kWhat,
  kWho,
  kHow,
  kWhy,
  kAssertion,
  kWhich,
  kDoubleQuestions,
  kWhen,
  kWhere,
  kUncategorized,
};
inline constexpr int kNumMultiRcTypes = 10;

std::string_view RaceFlagTag(RaceFlag f);
std::string_view MultiRcTypeTag(MultiRcType t);

struct CategorySet {
  std::bitset<kNumRaceFlags> race_flags;
  std::optional<MultiRcType> multirc_type;

  bool Has(RaceFlag f) const { return race_flags.test(static_cast<int>(f)); }
  void Set(RaceFlag f) { race_flags.set(static_cast<int>(f)); }

  // Lowercase snake-case tags: race flags in declaration order, then the
  // MultiRC type if present.
  std::vector<std::string> Tags() const;
  // Inverse of Tags(). Returns std::nullopt on an unknown tag.
  static std::optional<CategorySet> FromTags(const std::vector<std::string>& tags);

  bool operator==(const CategorySet&) const = default;
};

// All category tags in canonical reporting order.
const std::vector<std::string>& AllCategoryTags();

enum class Label { kEntailment, kNotEntailment };
enum class Strategy { kRule, kNeural, kQaConcat };

std::string_view LabelName(Label l);
std::optional<Label> ParseLabel(std::string_view s);
std::string_view StrategyName(Strategy s);
std::optional<Strategy> ParseStrategy(std::string_view s);

struct NliExample {
  // "<question-id>#<option-index>"
  std::string id;
  std::string premise;
  std::string hypothesis;
  Label label = Label::kNotEntailment;
  Strategy strategy = Strategy::kRule;
  CategorySet categories;
  std::string source_question_id;
  int option_index = 0;

  bool operator==(const NliExample&) const = default;
};

enum class FailureReason {
  kMultiClause,
  kNoRuleMatched,
  kEmptyAnswer,
  kAnswerIsQuestion,
  kBackendError,
};

std::string_view FailureReasonName(FailureReason r);

// Result of turning one (question, answer) pair into a hypothesis.
struct ConversionOutcome {
  std::optional<std::string> hypothesis;
  std::optional<FailureReason> failure_reason;
  // Free-form detail, e.g. the backend's error message.
  std::string detail;

  bool ok() const { return hypothesis.has_value(); }

  static ConversionOutcome Success(std::string text) {
    ConversionOutcome o;
    o.hypothesis = std::move(text);
    return o;
  }
  static ConversionOutcome Failure(FailureReason reason, std::string detail = {}) {
    ConversionOutcome o;
    o.failure_reason = reason;
    o.detail = std::move(detail);
    return o;
  }

  bool operator==(const ConversionOutcome&) const = default;
};

struct ScoreRecord {
  std::string id;
  double entail = 0.0;
};

enum class CfcsLabel { kConsistent, kInconsistent };

struct CfcsLabeledItem {
  std::string id;
  double score = 0.0;
  CfcsLabel label = CfcsLabel::kConsistent;
};

struct CfcsPair {
  std::string id;
  double consistent_score = 0.0;
  double inconsistent_score = 0.0;
};

}  // namespace mcnli

#endif  // MCNLI_TYPES_H_
