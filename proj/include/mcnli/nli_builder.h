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

// MCQ corpus -> NLI corpus, one example per (question, option).

#ifndef MCNLI_NLI_BUILDER_H_
#define MCNLI_NLI_BUILDER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcnli/hybrid_policy.h"
#include "mcnli/neural_adapter.h"
#include "mcnli/types.h"

namespace mcnli {

enum class ConversionMode { kRule, kNeural, kHybrid, kQa };

std::string_view ConversionModeName(ConversionMode m);
// Accepts "rule", "neural", "hybrid", "qa" (and "qa_concat").
std::optional<ConversionMode> ParseConversionMode(std::string_view s);

struct BuildConfig {
  ConversionMode mode = ConversionMode::kRule;
  HybridConfig hybrid;
  // Required for kNeural and kHybrid.
  NeuralConfig neural;
  int jobs = 1;
};

struct ConversionStats {
  size_t total_questions = 0;
  size_t total_examples = 0;
  std::map<Strategy, size_t> per_strategy;
  // Options that ended in qa_concat because the last converter tried failed,
  // keyed by that converter's failure reason.
  std::map<FailureReason, size_t> per_failure_reason;
  size_t entailment_count = 0;

  void Merge(const ConversionStats& other);
};

// Units joined by spaces; dialogue turns joined by newlines.
std::string BuildPremise(const McqExample& example);

// Multirc questions get their MultiRC type, everything else the RACE flags.
CategorySet CategorizeExample(const McqExample& example, std::string_view premise);

// Converts one question. `neural` holds one outcome per option and is only
// read in the neural and hybrid modes.
std::vector<NliExample> ConvertExample(const McqExample& example, ConversionMode mode,
                                       std::span<const ConversionOutcome> neural,
                                       const HybridConfig& hybrid, ConversionStats* stats);

// Converts a corpus, preserving input order. Neural requests for the whole
// corpus go to the backend as one batch. Throws BackendError from the
// adapter.
std::vector<NliExample> ConvertCorpus(std::span<const McqExample> corpus,
                                      const BuildConfig& config, ConversionStats* stats);

std::string OptionExampleId(const std::string& question_id, size_t option_index);

}  // namespace mcnli

#endif  // MCNLI_NLI_BUILDER_H_
