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

// Deterministic question + answer -> declarative hypothesis conversion.
//
// Rules are tried in a fixed order and the first match wins:
//
//   FITB        "The sky is _ ."                 -> "The sky is blue."
//   WHICH-TRUE  "Which of the following is TRUE" -> "<Answer> is TRUE."
//   COPULA-WH   "What's <NP>?"                   -> "<NP>'s <answer>."
//               "What is <NP> <clause>?"         -> "<Answer> is <NP> <clause>."
//   WH-AUX-SUBJ "How often does <S> <V> ...?"    -> "<S> <V+s> ... <answer>."
//
// Before any rule runs, multi-clause questions, empty answers and answers
// that are themselves questions are rejected with a typed failure. The
// passage is never consulted.

#ifndef MCNLI_RULE_CONVERTER_H_
#define MCNLI_RULE_CONVERTER_H_

#include <optional>
#include <string>
#include <string_view>

#include "mcnli/types.h"

namespace mcnli {

// Bumped whenever a rule changes observable output; recorded in manifests.
inline constexpr std::string_view kRuleGrammarVersion = "1";

ConversionOutcome ConvertRule(std::string_view question, std::string_view answer);

// First sentence of the answer with terminal punctuation stripped, ready to
// be inserted mid-sentence: the first letter is lowercased unless the first
// token looks like a proper noun (inner capitals such as "CNN", the pronoun
// "I", or a capitalized token that also appears past the first word of
// `question`).
std::string NormalizeAnswer(std::string_view answer, std::string_view question = {});

// First sentence of the answer, trimmed, terminal punctuation stripped,
// original casing kept.
std::string AnswerCore(std::string_view answer);

// Blank substitution: replaces the first run of '_' with the normalized
// answer and tidies spacing and the terminal period. Returns nullopt when the
// question has no blank or the result would still contain '?'.
std::optional<std::string> FillBlank(std::string_view question, std::string_view answer);

}  // namespace mcnli

#endif  // MCNLI_RULE_CONVERTER_H_
