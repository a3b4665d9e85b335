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

// Neural -> rule -> question+answer cascade with a well-formedness filter.

#ifndef MCNLI_HYBRID_POLICY_H_
#define MCNLI_HYBRID_POLICY_H_

#include <string>
#include <string_view>

#include "mcnli/types.h"

namespace mcnli {

struct HybridConfig {
  // Fraction of the answer's content words that must survive into the
  // hypothesis.
  double min_answer_overlap = 0.6;
  // Hypothesis tokens / (question tokens + answer tokens).
  double max_length_ratio = 2.5;
  bool forbid_question_mark = true;
};

// Content words are case-folded alphanumeric runs of length >= 3. An answer
// without content words passes the overlap test.
bool WellFormed(std::string_view hypothesis, std::string_view question, std::string_view answer,
                const HybridConfig& config = {});

// Question+answer concatenation; fill-in-the-blank questions get the blank
// substituted instead.
std::string ConcatHypothesis(std::string_view question, std::string_view answer);

struct Selection {
  std::string hypothesis;
  Strategy strategy = Strategy::kQaConcat;
};

// Never fails; the hypothesis is non-empty whenever the question or the
// answer is.
Selection SelectHypothesis(std::string_view question, std::string_view answer,
                           const ConversionOutcome& neural, const ConversionOutcome& rule,
                           const HybridConfig& config = {});

}  // namespace mcnli

#endif  // MCNLI_HYBRID_POLICY_H_
