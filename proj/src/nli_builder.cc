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

#include "mcnli/nli_builder.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "mcnli/question_analysis.h"
#include "mcnli/rule_converter.h"
#include "mcnli/text.h"

namespace mcnli {
namespace {

bool NeedsNeural(ConversionMode m) {
  return m == ConversionMode::kNeural || m == ConversionMode::kHybrid;
}

}  // namespace

std::string_view ConversionModeName(ConversionMode m) {
  switch (m) {
    case ConversionMode::kRule:
      return "rule";
    case ConversionMode::kNeural:
      return "neural";
    case ConversionMode::kHybrid:
      return "hybrid";
    case ConversionMode::kQa:
      return "qa";
  }
  return "rule";
}

std::optional<ConversionMode> ParseConversionMode(std::string_view s) {
  if (s == "rule") return ConversionMode::kRule;
  if (s == "neural") return ConversionMode::kNeural;
  if (s == "hybrid") return ConversionMode::kHybrid;
  if (s == "qa" || s == "qa_concat") return ConversionMode::kQa;
  return std::nullopt;
}

void ConversionStats::Merge(const ConversionStats& other) {
  total_questions += other.total_questions;
  total_examples += other.total_examples;
  entailment_count += other.entailment_count;
  for (const auto& [k, v] : other.per_strategy) per_strategy[k] += v;
  for (const auto& [k, v] : other.per_failure_reason) per_failure_reason[k] += v;
}

std::string BuildPremise(const McqExample& example) {
  return text::Join(example.passage_units, example.is_dialogue ? "\n" : " ");
}

CategorySet CategorizeExample(const McqExample& example, std::string_view premise) {
  if (example.source_dataset == Dataset::kMultiRc) {
    CategorySet c;
    c.multirc_type = CategorizeMultiRc(example.question);
    return c;
  }
  return CategorizeRace(example.question, premise);
}

std::string OptionExampleId(const std::string& question_id, size_t option_index) {
  return question_id + "#" + std::to_string(option_index);
}

std::vector<NliExample> ConvertExample(const McqExample& example, ConversionMode mode,
                                       std::span<const ConversionOutcome> neural,
                                       const HybridConfig& hybrid, ConversionStats* stats) {
  if (NeedsNeural(mode) && neural.size() != example.options.size()) {
    throw std::invalid_argument("neural outcomes do not match the options of " + example.id);
  }
  const std::string premise = BuildPremise(example);
  const CategorySet categories = CategorizeExample(example, premise);
  ConversionStats local;
  local.total_questions = 1;
  std::vector<NliExample> out;
  out.reserve(example.options.size());
  for (size_t i = 0; i < example.options.size(); ++i) {
    const OptionEntry& option = example.options[i];
    Selection chosen;
    std::optional<FailureReason> fell_through;
    switch (mode) {
      case ConversionMode::kRule: {
        ConversionOutcome rule = ConvertRule(example.question, option.text);
        if (rule.ok()) {
          chosen = {*rule.hypothesis, Strategy::kRule};
        } else {
          chosen = {ConcatHypothesis(example.question, option.text), Strategy::kQaConcat};
          fell_through = rule.failure_reason;
        }
        break;
      }
      case ConversionMode::kNeural: {
        const ConversionOutcome& n = neural[i];
        if (n.ok()) {
          chosen = {*n.hypothesis, Strategy::kNeural};
        } else {
          chosen = {ConcatHypothesis(example.question, option.text), Strategy::kQaConcat};
          fell_through = n.failure_reason;
        }
        break;
      }
      case ConversionMode::kHybrid: {
        ConversionOutcome rule = ConvertRule(example.question, option.text);
        chosen = SelectHypothesis(example.question, option.text, neural[i], rule, hybrid);
        if (chosen.strategy == Strategy::kQaConcat && !rule.ok()) {
          fell_through = rule.failure_reason;
        }
        break;
      }
      case ConversionMode::kQa:
        chosen = {ConcatHypothesis(example.question, option.text), Strategy::kQaConcat};
        break;
    }
    if (fell_through) ++local.per_failure_reason[*fell_through];
    ++local.per_strategy[chosen.strategy];
    ++local.total_examples;
    if (option.is_correct) ++local.entailment_count;

    NliExample e;
    e.id = OptionExampleId(example.id, i);
    e.premise = premise;
    e.hypothesis = std::move(chosen.hypothesis);
    e.label = option.is_correct ? Label::kEntailment : Label::kNotEntailment;
    e.strategy = chosen.strategy;
    e.categories = categories;
    e.source_question_id = example.id;
    e.option_index = static_cast<int>(i);
    out.push_back(std::move(e));
  }
  if (stats) stats->Merge(local);
  return out;
}

std::vector<NliExample> ConvertCorpus(std::span<const McqExample> corpus,
                                      const BuildConfig& config, ConversionStats* stats) {
  // Offsets of each question's options in the flat neural result.
  std::vector<size_t> offsets(corpus.size() + 1, 0);
  for (size_t q = 0; q < corpus.size(); ++q) {
    offsets[q + 1] = offsets[q] + corpus[q].options.size();
  }
  std::vector<ConversionOutcome> neural;
  if (NeedsNeural(config.mode)) {
    std::vector<ConversionRequest> requests;
    requests.reserve(offsets.back());
    for (const McqExample& ex : corpus) {
      for (size_t i = 0; i < ex.options.size(); ++i) {
        requests.push_back({OptionExampleId(ex.id, i), ex.question, ex.options[i].text});
      }
    }
    neural = ConvertBatch(config.neural, requests);
  }

  std::vector<std::vector<NliExample>> per_question(corpus.size());
  std::vector<ConversionStats> per_question_stats(corpus.size());
  auto work = [&](size_t q) {
    std::span<const ConversionOutcome> slice;
    if (!neural.empty()) {
      slice = std::span<const ConversionOutcome>(neural).subspan(offsets[q],
                                                                 offsets[q + 1] - offsets[q]);
    }
    per_question[q] =
        ConvertExample(corpus[q], config.mode, slice, config.hybrid, &per_question_stats[q]);
  };

  const size_t jobs = static_cast<size_t>(std::max(1, config.jobs));
  if (jobs == 1 || corpus.size() < 2) {
    for (size_t q = 0; q < corpus.size(); ++q) work(q);
  } else {
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
      std::vector<std::jthread> pool;
      for (size_t t = 0; t < std::min(jobs, corpus.size()); ++t) {
        pool.emplace_back([&] {
          for (size_t q = next++; q < corpus.size(); q = next++) {
            try {
              work(q);
            } catch (...) {
              std::lock_guard<std::mutex> lock(failure_mu);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<NliExample> out;
  out.reserve(offsets.back());
  for (size_t q = 0; q < corpus.size(); ++q) {
    for (NliExample& e : per_question[q]) out.push_back(std::move(e));
    if (stats) stats->Merge(per_question_stats[q]);
  }
  return out;
}

}  // namespace mcnli
