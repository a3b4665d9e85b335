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

// Question shape detection and heuristic question-type categorization.
//
// Two categorization schemes are supported:
//
//   RACE     non-exclusive flags from keyword triggers (main idea, negation,
//            dialogue, math, deductive, fill-in-the-blank).
//   MultiRC  exactly one type from prefix/suffix/contains rules.
//
// AnalyzeQuestion() is the front end of the rule converter: it splits a
// wh-question into wh-phrase, auxiliary, subject and body.

#ifndef MCNLI_QUESTION_ANALYSIS_H_
#define MCNLI_QUESTION_ANALYSIS_H_

#include <optional>
#include <string>
#include <string_view>

#include "mcnli/types.h"

namespace mcnli {

// RACE scheme. Single-word triggers ('mainly', 'title', 'purpose', 'topic',
// 'not', 'except', 'true') match whole words case-insensitively; multiword
// triggers match as case-insensitive substrings. The dialogue flag depends
// only on the passage: more than 10 '"' characters.
CategorySet CategorizeRace(std::string_view question, std::string_view passage);

// MultiRC scheme. double_questions is tested first, then the prefix/suffix
// rows in table order; the first match wins.
MultiRcType CategorizeMultiRc(std::string_view question);

enum class Terminal { kQuestionMark, kPeriod, kBlank, kOther };

struct WhAnalysis {
  std::optional<std::string> wh_phrase;    // "How often", "Which of the following"
  std::optional<std::string> auxiliary;    // as written, e.g. "does"; "'s" for "What's"
  std::optional<std::string> subject_span; // absent for subject questions
  std::optional<std::string> body_span;
  bool is_fitb = false;
  bool is_multi_clause = false;
  Terminal terminal = Terminal::kOther;

  // Details consumed by the rule converter.
  std::string wh_word;              // lowercase wh word, empty if no wh_phrase
  std::string leading_preposition;  // "in" for "In what year ..."
  std::string wh_complement;        // "often" / "building" / "of the following"
  bool contracted_copula = false;   // "What's ..."
  bool starts_with_auxiliary = false;
};

WhAnalysis AnalyzeQuestion(std::string_view question);

}  // namespace mcnli

#endif  // MCNLI_QUESTION_ANALYSIS_H_
