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

#include "mcnli/eval_harness.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mcnli/errors.h"

namespace mcnli {
namespace {

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size() && i < 20; ++i) out += (i ? ", " : "") + ids[i];
  if (ids.size() > 20) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

double Percent(size_t part, size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

const CategorySet& CategoryOf(const std::map<std::string, CategorySet>& categories,
                              const std::string& id) {
  auto it = categories.find(id);
  if (it == categories.end()) throw DataError("no categories for question " + id);
  return it->second;
}

std::vector<std::pair<std::string, double>> Distribution(
    const std::vector<std::string>& region, const std::map<std::string, CategorySet>& categories) {
  std::map<std::string, size_t> counts;
  for (const std::string& id : region) {
    for (const std::string& tag : CategoryOf(categories, id).Tags()) ++counts[tag];
  }
  std::vector<std::pair<std::string, double>> dist;
  for (const std::string& tag : AllCategoryTags()) {
    auto it = counts.find(tag);
    if (it != counts.end()) dist.emplace_back(tag, Percent(it->second, region.size()));
  }
  return dist;
}

struct LabelCounts {
  int64_t positives = 0;  // consistent
  int64_t negatives = 0;
};

LabelCounts CountLabels(std::span<const CfcsLabeledItem> items) {
  LabelCounts c;
  for (const CfcsLabeledItem& it : items) {
    (it.label == CfcsLabel::kConsistent ? c.positives : c.negatives)++;
  }
  if (c.positives == 0 || c.negatives == 0) {
    throw DataError("balanced accuracy needs both consistent and inconsistent items");
  }
  return c;
}

// Balanced accuracy * 2PN, kept integral so candidates compare exactly.
int64_t ScaledBalanced(int64_t tp, int64_t tn, const LabelCounts& c) {
  return tp * c.negatives + tn * c.positives;
}

double BalancedPercent(int64_t scaled, const LabelCounts& c) {
  return 100.0 * static_cast<double>(scaled) /
         (2.0 * static_cast<double>(c.positives) * static_cast<double>(c.negatives));
}

std::string PadRight(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string PadLeft(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string RenderTable(const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += c == 0 ? PadRight(row[c], width[c]) : PadLeft(row[c], width[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

McrcReport ScoreMcrc(std::span<const NliExample> examples, std::span<const ScoreRecord> scores) {
  std::unordered_map<std::string, double> score_of;
  score_of.reserve(scores.size());
  for (const ScoreRecord& s : scores) score_of[s.id] = s.entail;

  struct Option {
    int index;
    double score;
    bool entailed;
  };
  std::map<std::string, std::vector<Option>> groups;
  std::vector<std::string> missing;
  for (const NliExample& e : examples) {
    auto it = score_of.find(e.id);
    if (it == score_of.end()) {
      missing.push_back(e.id);
      continue;
    }
    groups[e.source_question_id].push_back(
        {e.option_index, it->second, e.label == Label::kEntailment});
  }
  if (!missing.empty()) throw DataError("missing scores for ids: " + JoinIds(missing));

  McrcReport report;
  for (auto& [qid, options] : groups) {
    if (options.size() < 2) {
      throw DataError("question " + qid + " has fewer than 2 scored options");
    }
    std::sort(options.begin(), options.end(),
              [](const Option& a, const Option& b) { return a.index < b.index; });
    const Option* best = &options.front();
    for (const Option& o : options) {
      if (o.score > best->score) best = &o;
    }
    QuestionResult r{best->index, best->entailed};
    report.per_question[qid] = r;
    if (r.correct) ++report.n_correct;
  }
  report.n_questions = report.per_question.size();
  report.accuracy = Percent(report.n_correct, report.n_questions);
  return report;
}

std::map<std::string, CategorySet> QuestionCategories(std::span<const NliExample> examples) {
  std::map<std::string, CategorySet> out;
  for (const NliExample& e : examples) {
    auto [it, inserted] = out.emplace(e.source_question_id, e.categories);
    if (!inserted && !(it->second == e.categories)) {
      throw DataError("options of question " + e.source_question_id +
                      " carry different categories");
    }
  }
  return out;
}

std::vector<CategoryRow> CategoryAccuracy(const McrcReport& report,
                                          const std::map<std::string, CategorySet>& categories) {
  std::map<std::string, std::pair<size_t, size_t>> tally;  // tag -> (correct, n)
  for (const auto& [qid, result] : report.per_question) {
    for (const std::string& tag : CategoryOf(categories, qid).Tags()) {
      auto& t = tally[tag];
      t.first += result.correct ? 1 : 0;
      t.second += 1;
    }
  }
  std::vector<CategoryRow> rows;
  for (const std::string& tag : AllCategoryTags()) {
    auto it = tally.find(tag);
    if (it == tally.end()) continue;
    rows.push_back({tag, Percent(it->second.first, it->second.second), it->second.second});
  }
  return rows;
}

GainLossReport GainLoss(const McrcReport& a, const McrcReport& b,
                        const std::map<std::string, CategorySet>& categories) {
  std::vector<std::string> diff;
  for (const auto& [qid, r] : a.per_question) {
    if (!b.per_question.count(qid)) diff.push_back(qid);
  }
  for (const auto& [qid, r] : b.per_question) {
    if (!a.per_question.count(qid)) diff.push_back(qid);
  }
  if (!diff.empty()) {
    std::sort(diff.begin(), diff.end());
    throw DataError("reports cover different questions: " + JoinIds(diff));
  }
  GainLossReport out;
  out.n_questions = a.per_question.size();
  for (const auto& [qid, ra] : a.per_question) {
    const QuestionResult& rb = b.per_question.at(qid);
    if (ra.correct && !rb.correct) out.gain_ids.push_back(qid);
    if (!ra.correct && rb.correct) out.loss_ids.push_back(qid);
  }
  out.gain_distribution = Distribution(out.gain_ids, categories);
  out.loss_distribution = Distribution(out.loss_ids, categories);
  return out;
}

ThresholdResult TuneThreshold(std::span<const CfcsLabeledItem> items) {
  const LabelCounts c = CountLabels(items);
  std::vector<std::pair<double, bool>> sorted;  // (score, consistent)
  sorted.reserve(items.size());
  for (const CfcsLabeledItem& it : items) {
    sorted.emplace_back(it.score, it.label == CfcsLabel::kConsistent);
  }
  std::sort(sorted.begin(), sorted.end());

  // Sweep thresholds upward. Below every score all items are predicted
  // consistent: tp = P, tn = 0. Passing a group of equal scores flips the
  // whole group to inconsistent.
  int64_t tp = c.positives;
  int64_t tn = 0;
  ThresholdResult best{sorted.front().first - 1.0, 0.0};
  int64_t best_scaled = ScaledBalanced(tp, tn, c);
  size_t i = 0;
  while (i < sorted.size()) {
    const double value = sorted[i].first;
    while (i < sorted.size() && sorted[i].first == value) {
      if (sorted[i].second) {
        --tp;
      } else {
        ++tn;
      }
      ++i;
    }
    const double threshold =
        i < sorted.size() ? value + (sorted[i].first - value) / 2.0 : value + 1.0;
    const int64_t scaled = ScaledBalanced(tp, tn, c);
    if (scaled > best_scaled) {
      best_scaled = scaled;
      best.threshold = threshold;
    }
  }
  best.balanced_accuracy = BalancedPercent(best_scaled, c);
  return best;
}

double BalancedAccuracy(std::span<const CfcsLabeledItem> items, double threshold) {
  const LabelCounts c = CountLabels(items);
  int64_t tp = 0;
  int64_t tn = 0;
  for (const CfcsLabeledItem& it : items) {
    const bool predicted = it.score >= threshold;
    const bool actual = it.label == CfcsLabel::kConsistent;
    if (predicted && actual) ++tp;
    if (!predicted && !actual) ++tn;
  }
  return BalancedPercent(ScaledBalanced(tp, tn, c), c);
}

double RankPairs(std::span<const CfcsPair> pairs) {
  if (pairs.empty()) throw DataError("no pairs to rank");
  size_t right = 0;
  for (const CfcsPair& p : pairs) {
    if (p.consistent_score > p.inconsistent_score) ++right;
  }
  return Percent(right, pairs.size());
}

std::string FormatPercent(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string FormatTable(const std::vector<std::vector<std::string>>& cells) {
  return RenderTable(cells);
}

std::string FormatCategoryTable(const std::vector<std::string>& model_names,
                                const std::vector<std::vector<CategoryRow>>& rows) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"type", "n"};
  header.insert(header.end(), model_names.begin(), model_names.end());
  cells.push_back(header);
  for (const std::string& tag : AllCategoryTags()) {
    std::vector<std::string> line{tag, ""};
    bool present = false;
    for (const auto& model_rows : rows) {
      auto it = std::find_if(model_rows.begin(), model_rows.end(),
                             [&](const CategoryRow& r) { return r.category == tag; });
      if (it == model_rows.end()) {
        line.push_back("-");
        continue;
      }
      present = true;
      line[1] = std::to_string(it->n);
      line.push_back(FormatPercent(it->accuracy));
    }
    if (present) cells.push_back(std::move(line));
  }
  return RenderTable(cells);
}

std::string FormatDistribution(const std::string& title,
                               const std::vector<std::pair<std::string, double>>& dist,
                               size_t region_size) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"type", "percent"});
  for (const auto& [tag, pct] : dist) cells.push_back({tag, FormatPercent(pct)});
  return title + " (" + std::to_string(region_size) + " questions)\n" + RenderTable(cells);
}

}  // namespace mcnli
