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

#include "mcnli/types.h"

#include <algorithm>

namespace mcnli {
namespace {

constexpr std::array<std::string_view, 5> kDatasetNames = {
    "race", "multirc", "dream", "cosmosqa", "generic"};
constexpr std::array<std::string_view, 3> kSplitNames = {"train", "dev", "test"};
constexpr std::array<std::string_view, kNumRaceFlags> kRaceTags = {
    "main_idea", "negation", "dialogue", "math", "deductive", "fitb"};
constexpr std::array<std::string_view, kNumMultiRcTypes> kMultiRcTags = {
    "what", "who",       "how",  "why",   "assertion",
    "which", "double_questions", "when", "where", "uncategorized"};

template <typename Enum, size_t N>
std::optional<Enum> Lookup(const std::array<std::string_view, N>& names,
                           std::string_view s) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) return std::nullopt;
  return static_cast<Enum>(it - names.begin());
}

}  // namespace

std::string_view DatasetName(Dataset d) { return kDatasetNames[static_cast<int>(d)]; }

std::optional<Dataset> ParseDataset(std::string_view s) {
  return Lookup<Dataset>(kDatasetNames, s);
}

std::string_view SplitName(Split s) { return kSplitNames[static_cast<int>(s)]; }

std::optional<Split> ParseSplit(std::string_view s) {
  if (s == "valid" || s == "validation") return Split::kDev;
  return Lookup<Split>(kSplitNames, s);
}

int McqExample::NumCorrect() const {
  return static_cast<int>(std::count_if(options.begin(), options.end(),
                                        [](const OptionEntry& o) { return o.is_correct; }));
}

std::string_view RaceFlagTag(RaceFlag f) { return kRaceTags[static_cast<int>(f)]; }

std::string_view MultiRcTypeTag(MultiRcType t) {
  return kMultiRcTags[static_cast<int>(t)];
}

std::vector<std::string> CategorySet::Tags() const {
  std::vector<std::string> tags;
  for (int i = 0; i < kNumRaceFlags; ++i) {
    if (race_flags.test(i)) tags.emplace_back(kRaceTags[i]);
  }
  if (multirc_type) tags.emplace_back(MultiRcTypeTag(*multirc_type));
  return tags;
}

std::optional<CategorySet> CategorySet::FromTags(const std::vector<std::string>& tags) {
  CategorySet set;
  for (const std::string& tag : tags) {
    if (auto flag = Lookup<RaceFlag>(kRaceTags, tag)) {
      set.Set(*flag);
    } else if (auto type = Lookup<MultiRcType>(kMultiRcTags, tag)) {
      if (set.multirc_type && *set.multirc_type != *type) return std::nullopt;
      set.multirc_type = *type;
    } else {
      return std::nullopt;
    }
  }
  return set;
}

const std::vector<std::string>& AllCategoryTags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> all(kRaceTags.begin(), kRaceTags.end());
    all.insert(all.end(), kMultiRcTags.begin(), kMultiRcTags.end());
    return all;
  }();
  return tags;
}

std::string_view LabelName(Label l) {
  return l == Label::kEntailment ? "entailment" : "not_entailment";
}

std::optional<Label> ParseLabel(std::string_view s) {
  if (s == "entailment") return Label::kEntailment;
  if (s == "not_entailment") return Label::kNotEntailment;
  return std::nullopt;
}

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kRule:
      return "rule";
    case Strategy::kNeural:
      return "neural";
    case Strategy::kQaConcat:
      return "qa_concat";
  }
  return "";
}

std::optional<Strategy> ParseStrategy(std::string_view s) {
  if (s == "rule") return Strategy::kRule;
  if (s == "neural") return Strategy::kNeural;
  if (s == "qa_concat") return Strategy::kQaConcat;
  return std::nullopt;
}

std::string_view FailureReasonName(FailureReason r) {
  switch (r) {
    case FailureReason::kMultiClause:
      return "multi_clause";
    case FailureReason::kNoRuleMatched:
      return "no_rule_matched";
    case FailureReason::kEmptyAnswer:
      return "empty_answer";
    case FailureReason::kAnswerIsQuestion:
      return "answer_is_question";
    case FailureReason::kBackendError:
      return "backend_error";
  }
  return "";
}

}  // namespace mcnli
