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

#include <set>

#include "mcnli/rule_converter.h"
#include "mcnli/text.h"

namespace mcnli {

bool WellFormed(std::string_view hypothesis, std::string_view question, std::string_view answer,
                const HybridConfig& config) {
  if (text::Trim(hypothesis).empty()) return false;
  if (config.forbid_question_mark && hypothesis.find('?') != std::string_view::npos) {
    return false;
  }
  std::vector<std::string> answer_words = text::ContentWords(answer);
  std::set<std::string> wanted(answer_words.begin(), answer_words.end());
  if (!wanted.empty()) {
    std::vector<std::string> hyp_words = text::ContentWords(hypothesis);
    std::set<std::string> have(hyp_words.begin(), hyp_words.end());
    size_t hit = 0;
    for (const std::string& w : wanted) hit += have.count(w);
    if (static_cast<double>(hit) < config.min_answer_overlap * static_cast<double>(wanted.size())) {
      return false;
    }
  }
  const double budget =
      config.max_length_ratio *
      static_cast<double>(text::SplitWhitespace(question).size() +
                          text::SplitWhitespace(answer).size());
  return static_cast<double>(text::SplitWhitespace(hypothesis).size()) <= budget;
}

std::string ConcatHypothesis(std::string_view question, std::string_view answer) {
  if (auto filled = FillBlank(question, answer)) return *filled;
  std::string q = text::NormalizeWhitespace(question);
  std::string a = text::NormalizeWhitespace(answer);
  if (q.empty()) return a;
  if (a.empty()) return q;
  return q + " " + a;
}

Selection SelectHypothesis(std::string_view question, std::string_view answer,
                           const ConversionOutcome& neural, const ConversionOutcome& rule,
                           const HybridConfig& config) {
  if (neural.ok() && WellFormed(*neural.hypothesis, question, answer, config)) {
    return {*neural.hypothesis, Strategy::kNeural};
  }
  if (rule.ok() && WellFormed(*rule.hypothesis, question, answer, config)) {
    return {*rule.hypothesis, Strategy::kRule};
  }
  return {ConcatHypothesis(question, answer), Strategy::kQaConcat};
}

}  // namespace mcnli
