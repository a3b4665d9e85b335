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

// Metrics over external entailment scores: multiple-choice accuracy by
// per-question argmax, per-category breakdowns, two-model gain/loss regions,
// and summary consistency thresholding and ranking.

#ifndef MCNLI_EVAL_HARNESS_H_
#define MCNLI_EVAL_HARNESS_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mcnli/types.h"

namespace mcnli {

struct QuestionResult {
  int predicted_index = 0;
  bool correct = false;
  bool operator==(const QuestionResult&) const = default;
};

struct McrcReport {
  double accuracy = 0.0;  // percent
  size_t n_questions = 0;
  size_t n_correct = 0;
  std::map<std::string, QuestionResult> per_question;
};

// Groups examples by question id and predicts the option with the highest
// entail score, ties going to the lowest option index. Scores for ids not in
// `examples` are ignored. Throws DataError listing example ids without a
// score, or naming a question with fewer than two options.
McrcReport ScoreMcrc(std::span<const NliExample> examples, std::span<const ScoreRecord> scores);

// Question id -> categories as carried by the examples. Throws DataError if
// the options of one question disagree.
std::map<std::string, CategorySet> QuestionCategories(std::span<const NliExample> examples);

struct CategoryRow {
  std::string category;
  double accuracy = 0.0;  // percent
  size_t n = 0;
};

// One row per category tag with at least one member, in tag order.
// Throws DataError when a reported question has no category entry.
std::vector<CategoryRow> CategoryAccuracy(const McrcReport& report,
                                          const std::map<std::string, CategorySet>& categories);

struct GainLossReport {
  std::vector<std::string> gain_ids;  // A right, B wrong; sorted
  std::vector<std::string> loss_ids;  // A wrong, B right; sorted
  // Percent of the region carrying each tag; tags with no members omitted.
  std::vector<std::pair<std::string, double>> gain_distribution;
  std::vector<std::pair<std::string, double>> loss_distribution;
  size_t n_questions = 0;
};

// Throws DataError listing the symmetric difference when the reports cover
// different questions, or when a region question has no category entry.
GainLossReport GainLoss(const McrcReport& a, const McrcReport& b,
                        const std::map<std::string, CategorySet>& categories);

struct ThresholdResult {
  double threshold = 0.0;
  double balanced_accuracy = 0.0;  // percent
};

// Predicts consistent iff score >= threshold. Candidates are the midpoints
// between adjacent distinct scores plus min - 1 and max + 1; the best
// balanced accuracy wins, ties going to the smallest threshold. Throws
// DataError unless both labels occur.
ThresholdResult TuneThreshold(std::span<const CfcsLabeledItem> items);

// Balanced accuracy (percent) at a fixed threshold. Throws DataError unless
// both labels occur.
double BalancedAccuracy(std::span<const CfcsLabeledItem> items, double threshold);

// Percent of pairs whose consistent summary scores strictly higher. Throws
// DataError on an empty list.
double RankPairs(std::span<const CfcsPair> pairs);

// "90.42"
std::string FormatPercent(double value);

// Aligned plain-text tables. The first column is left-aligned, the rest
// right-aligned.
std::string FormatTable(const std::vector<std::vector<std::string>>& cells);
std::string FormatCategoryTable(const std::vector<std::string>& model_names,
                                const std::vector<std::vector<CategoryRow>>& rows);
std::string FormatDistribution(const std::string& title,
                               const std::vector<std::pair<std::string, double>>& dist,
                               size_t region_size);

}  // namespace mcnli

#endif  // MCNLI_EVAL_HARNESS_H_
