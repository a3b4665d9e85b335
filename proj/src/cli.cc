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

#include "mcnli/cli.h"

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcnli/corpus_io.h"
#include "mcnli/errors.h"
#include "mcnli/eval_harness.h"
#include "mcnli/nli_builder.h"
#include "mcnli/question_analysis.h"
#include "mcnli/rule_converter.h"

namespace mcnli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kFormats = {"race", "multirc", "dream", "cosmosqa", "generic"};

struct Options {
  // convert / categorize
  std::string format = "generic";
  std::string split;
  std::string strategy = "rule";
  std::string input;
  std::string output;
  std::string neural_cmd;
  std::string cache;
  double min_answer_overlap = HybridConfig{}.min_answer_overlap;
  double max_length_ratio = HybridConfig{}.max_length_ratio;
  bool allow_question_mark = false;
  double timeout_seconds = 300.0;
  int jobs = 1;
  std::string manifest;
  std::string scheme = "race";
  // evaluate / compare
  std::string examples;
  std::string scores;
  std::string scores_a;
  std::string scores_b;
  std::string name_a = "A";
  std::string name_b = "B";
  bool by_category = false;
  // cfcs
  std::string labeled;
  std::string pairs;
  double threshold = 0.0;
  bool json = false;
};

std::string Dump(const ordered_json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string ShortestDouble(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string UtcNow() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<Split> SplitOption(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto split = ParseSplit(s);
  if (!split) throw DataError("unknown split '" + s + "'");
  return split;
}

Dataset FormatOption(const std::string& s) {
  auto d = ParseDataset(s);
  if (!d) throw DataError("unknown format '" + s + "'");
  return *d;
}

ordered_json StatsJson(const ConversionStats& stats) {
  ordered_json j;
  j["total_questions"] = stats.total_questions;
  j["total_examples"] = stats.total_examples;
  j["entailment_count"] = stats.entailment_count;
  ordered_json strategies = ordered_json::object();
  for (Strategy s : {Strategy::kNeural, Strategy::kRule, Strategy::kQaConcat}) {
    auto it = stats.per_strategy.find(s);
    strategies[std::string(StrategyName(s))] = it == stats.per_strategy.end() ? 0 : it->second;
  }
  j["per_strategy"] = strategies;
  ordered_json reasons = ordered_json::object();
  for (FailureReason r : {FailureReason::kMultiClause, FailureReason::kNoRuleMatched,
                          FailureReason::kEmptyAnswer, FailureReason::kAnswerIsQuestion,
                          FailureReason::kBackendError}) {
    auto it = stats.per_failure_reason.find(r);
    reasons[std::string(FailureReasonName(r))] =
        it == stats.per_failure_reason.end() ? 0 : it->second;
  }
  j["per_failure_reason"] = reasons;
  return j;
}

void WriteTextFile(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw WriteError("cannot open " + path.string() + " for writing", 0);
  f << content;
  f.flush();
  if (!f) throw WriteError("write failed for " + path.string(), 0);
}

int Convert(const Options& o, std::ostream& err) {
  const std::string started = UtcNow();
  const Dataset format = FormatOption(o.format);
  const std::optional<Split> split = SplitOption(o.split);
  auto mode = ParseConversionMode(o.strategy);
  if (!mode) throw DataError("unknown strategy '" + o.strategy + "'");
  if (o.min_answer_overlap < 0.0 || o.min_answer_overlap > 1.0) {
    throw DataError("--min-answer-overlap must be in [0,1]");
  }
  if (!(o.max_length_ratio > 0.0)) throw DataError("--max-length-ratio must be positive");

  BuildConfig config;
  config.mode = *mode;
  config.hybrid.min_answer_overlap = o.min_answer_overlap;
  config.hybrid.max_length_ratio = o.max_length_ratio;
  config.hybrid.forbid_question_mark = !o.allow_question_mark;
  config.neural.command = o.neural_cmd;
  config.neural.cache = o.cache;
  config.neural.timeout =
      std::chrono::milliseconds(static_cast<long long>(o.timeout_seconds * 1000.0));
  config.jobs = o.jobs;

  std::vector<McqExample> corpus = ReadMcq(format, o.input, split);
  ConversionStats stats;
  std::vector<NliExample> examples = ConvertCorpus(corpus, config, &stats);
  const size_t written = WriteNliJsonl(examples, fs::path(o.output));

  ordered_json manifest;
  manifest["subcommand"] = "convert";
  manifest["tool_version"] = std::string(kToolVersion);
  manifest["rule_grammar_version"] = std::string(kRuleGrammarVersion);
  manifest["input"] = o.input;
  manifest["output"] = o.output;
  manifest["format"] = o.format;
  manifest["split"] = o.split.empty() ? nullptr : ordered_json(o.split);
  manifest["strategy"] = std::string(ConversionModeName(*mode));
  ordered_json cfg;
  cfg["min_answer_overlap"] = config.hybrid.min_answer_overlap;
  cfg["max_length_ratio"] = config.hybrid.max_length_ratio;
  cfg["forbid_question_mark"] = config.hybrid.forbid_question_mark;
  cfg["neural_cmd"] = o.neural_cmd;
  cfg["cache"] = o.cache;
  cfg["timeout_seconds"] = o.timeout_seconds;
  cfg["jobs"] = o.jobs;
  manifest["config"] = cfg;
  manifest["stats"] = StatsJson(stats);
  manifest["started_at"] = started;
  manifest["finished_at"] = UtcNow();
  const std::string manifest_path = o.manifest.empty() ? o.output + ".manifest.json" : o.manifest;
  WriteTextFile(manifest_path, manifest.dump(2, ' ', false, json::error_handler_t::replace) + "\n");

  err << "converted " << stats.total_questions << " questions into " << written
      << " examples\n";
  return kExitOk;
}

int Categorize(const Options& o, std::ostream& out) {
  const Dataset format = FormatOption(o.format);
  std::vector<McqExample> corpus = ReadMcq(format, o.input, SplitOption(o.split));
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary | std::ios::trunc);
    if (!file) throw WriteError("cannot open " + o.output + " for writing", 0);
    sink = &file;
  }
  size_t written = 0;
  for (const McqExample& e : corpus) {
    CategorySet c;
    if (o.scheme == "multirc") {
      c.multirc_type = CategorizeMultiRc(e.question);
    } else {
      c = CategorizeRace(e.question, BuildPremise(e));
    }
    ordered_json j;
    j["question_id"] = e.id;
    j["question"] = e.question;
    j["categories"] = c.Tags();
    *sink << Dump(j) << '\n';
    if (!*sink) throw WriteError("write failed", written);
    ++written;
  }
  sink->flush();
  if (!*sink) throw WriteError("write failed", written);
  return kExitOk;
}

std::string AccuracyCell(const McrcReport& r) { return FormatPercent(r.accuracy); }

int Evaluate(const Options& o, std::ostream& out) {
  std::vector<NliExample> examples = ReadNliJsonl(fs::path(o.examples));
  std::vector<ScoreRecord> scores = ReadScores(fs::path(o.scores));
  McrcReport report = ScoreMcrc(examples, scores);
  std::vector<CategoryRow> rows;
  if (o.by_category) rows = CategoryAccuracy(report, QuestionCategories(examples));
  if (o.json) {
    ordered_json j;
    j["metric"] = "accuracy";
    j["value"] = report.accuracy;
    j["n_questions"] = report.n_questions;
    j["n_correct"] = report.n_correct;
    out << Dump(j) << '\n';
    for (const CategoryRow& r : rows) {
      ordered_json c;
      c["category"] = r.category;
      c["accuracy"] = r.accuracy;
      c["n"] = r.n;
      out << Dump(c) << '\n';
    }
    return kExitOk;
  }
  out << FormatTable({{"questions", "correct", "accuracy"},
                      {std::to_string(report.n_questions), std::to_string(report.n_correct),
                       AccuracyCell(report)}});
  if (o.by_category) out << '\n' << FormatCategoryTable({"accuracy"}, {rows});
  return kExitOk;
}

ordered_json DistributionJson(const std::vector<std::pair<std::string, double>>& dist) {
  ordered_json j = ordered_json::object();
  for (const auto& [tag, pct] : dist) j[tag] = pct;
  return j;
}

int Compare(const Options& o, std::ostream& out) {
  std::vector<NliExample> examples = ReadNliJsonl(fs::path(o.examples));
  McrcReport a = ScoreMcrc(examples, ReadScores(fs::path(o.scores_a)));
  McrcReport b = ScoreMcrc(examples, ReadScores(fs::path(o.scores_b)));
  const auto categories = QuestionCategories(examples);
  GainLossReport gl = GainLoss(a, b, categories);
  std::vector<CategoryRow> rows_a, rows_b;
  if (o.by_category) {
    rows_a = CategoryAccuracy(a, categories);
    rows_b = CategoryAccuracy(b, categories);
  }
  if (o.json) {
    for (const auto& [name, r] : {std::pair{o.name_a, &a}, std::pair{o.name_b, &b}}) {
      ordered_json j;
      j["model"] = name;
      j["accuracy"] = r->accuracy;
      j["n_questions"] = r->n_questions;
      j["n_correct"] = r->n_correct;
      out << Dump(j) << '\n';
    }
    for (const auto& [region, ids, dist] :
         {std::tuple{"gain", &gl.gain_ids, &gl.gain_distribution},
          std::tuple{"loss", &gl.loss_ids, &gl.loss_distribution}}) {
      ordered_json j;
      j["region"] = region;
      j["ids"] = *ids;
      if (o.by_category) j["distribution"] = DistributionJson(*dist);
      out << Dump(j) << '\n';
    }
    if (o.by_category) {
      for (const auto& [name, rows] : {std::pair{o.name_a, &rows_a}, std::pair{o.name_b, &rows_b}}) {
        for (const CategoryRow& r : *rows) {
          ordered_json c;
          c["model"] = name;
          c["category"] = r.category;
          c["accuracy"] = r.accuracy;
          c["n"] = r.n;
          out << Dump(c) << '\n';
        }
      }
    }
    return kExitOk;
  }
  out << FormatTable({{"model", "questions", "correct", "accuracy"},
                      {o.name_a, std::to_string(a.n_questions), std::to_string(a.n_correct),
                       AccuracyCell(a)},
                      {o.name_b, std::to_string(b.n_questions), std::to_string(b.n_correct),
                       AccuracyCell(b)}});
  out << '\n'
      << FormatTable({{"region", "questions"},
                      {"gain", std::to_string(gl.gain_ids.size())},
                      {"loss", std::to_string(gl.loss_ids.size())}});
  if (o.by_category) {
    out << '\n' << FormatCategoryTable({o.name_a, o.name_b}, {rows_a, rows_b});
    out << '\n' << FormatDistribution("gain", gl.gain_distribution, gl.gain_ids.size());
    out << '\n' << FormatDistribution("loss", gl.loss_distribution, gl.loss_ids.size());
  }
  return kExitOk;
}

int CfcsTune(const Options& o, std::ostream& out) {
  ThresholdResult r = TuneThreshold(ReadCfcsLabeled(fs::path(o.labeled)));
  if (o.json) {
    ordered_json j;
    j["threshold"] = r.threshold;
    j["balanced_accuracy"] = r.balanced_accuracy;
    out << Dump(j) << '\n';
  } else {
    out << "threshold " << ShortestDouble(r.threshold) << '\n'
        << "balanced_accuracy " << FormatPercent(r.balanced_accuracy) << '\n';
  }
  return kExitOk;
}

int CfcsClassify(const Options& o, std::ostream& out) {
  std::vector<CfcsLabeledItem> items = ReadCfcsLabeled(fs::path(o.labeled));
  const double ba = BalancedAccuracy(items, o.threshold);
  if (o.json) {
    ordered_json j;
    j["threshold"] = o.threshold;
    j["balanced_accuracy"] = ba;
    j["n"] = items.size();
    out << Dump(j) << '\n';
  } else {
    out << "threshold " << ShortestDouble(o.threshold) << '\n'
        << "balanced_accuracy " << FormatPercent(ba) << '\n';
  }
  return kExitOk;
}

int CfcsRank(const Options& o, std::ostream& out) {
  std::vector<CfcsPair> pairs = ReadCfcsPairs(fs::path(o.pairs));
  const double acc = RankPairs(pairs);
  if (o.json) {
    ordered_json j;
    j["ranking_accuracy"] = acc;
    j["n"] = pairs.size();
    out << Dump(j) << '\n';
  } else {
    out << "ranking_accuracy " << FormatPercent(acc) << '\n' << "pairs " << pairs.size() << '\n';
  }
  return kExitOk;
}

int Stats(const Options& o, std::ostream& out) {
  std::vector<NliExample> examples = ReadNliJsonl(fs::path(o.input));
  const auto categories = QuestionCategories(examples);
  std::map<std::string, size_t> labels, strategies, tags;
  for (const NliExample& e : examples) {
    ++labels[std::string(LabelName(e.label))];
    ++strategies[std::string(StrategyName(e.strategy))];
  }
  for (const auto& [qid, c] : categories) {
    for (const std::string& t : c.Tags()) ++tags[t];
  }
  struct Section {
    const char* kind;
    std::vector<std::string> keys;
    const std::map<std::string, size_t>* counts;
    size_t base;
  };
  const std::vector<Section> sections = {
      {"label", {"entailment", "not_entailment"}, &labels, examples.size()},
      {"strategy", {"neural", "rule", "qa_concat"}, &strategies, examples.size()},
      {"category", AllCategoryTags(), &tags, categories.size()},
  };
  auto pct = [](size_t n, size_t base) {
    return base == 0 ? 0.0 : 100.0 * static_cast<double>(n) / static_cast<double>(base);
  };
  if (o.json) {
    for (const Section& s : sections) {
      for (const std::string& k : s.keys) {
        auto it = s.counts->find(k);
        const size_t n = it == s.counts->end() ? 0 : it->second;
        if (n == 0 && std::string(s.kind) == "category") continue;
        ordered_json j;
        j["kind"] = s.kind;
        j["key"] = k;
        j["count"] = n;
        j["percent"] = pct(n, s.base);
        out << Dump(j) << '\n';
      }
    }
    return kExitOk;
  }
  out << FormatTable({{"examples", std::to_string(examples.size())},
                      {"questions", std::to_string(categories.size())}});
  for (const Section& s : sections) {
    std::vector<std::vector<std::string>> cells{{s.kind, "count", "percent"}};
    for (const std::string& k : s.keys) {
      auto it = s.counts->find(k);
      const size_t n = it == s.counts->end() ? 0 : it->second;
      if (n == 0 && std::string(s.kind) == "category") continue;
      cells.push_back({k, std::to_string(n), FormatPercent(pct(n, s.base))});
    }
    out << '\n' << FormatTable(cells);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Recast multiple-choice reading comprehension corpora as NLI data and score "
               "NLI model outputs.",
               "mcnli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CLI::App* convert = app.add_subcommand("convert", "Convert an MCQ corpus to NLI lines");
  convert->add_option("--format", o.format, "Source format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  convert->add_option("--split", o.split, "train, dev or test; inferred from the path if unset");
  convert->add_option("--strategy", o.strategy, "Hypothesis strategy")
      ->check(CLI::IsMember({"rule", "neural", "hybrid", "qa"}))
      ->capture_default_str();
  convert->add_option("--input", o.input, "MCQ corpus file or directory")->required();
  convert->add_option("--output", o.output, "NLI JSON lines output")->required();
  convert->add_option("--neural-cmd", o.neural_cmd, "Shell command starting the converter backend");
  convert->add_option("--cache", o.cache, "Converter cache file");
  convert->add_option("--timeout", o.timeout_seconds, "Backend timeout per batch, seconds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  convert->add_option("--min-answer-overlap", o.min_answer_overlap,
                      "Hybrid filter: answer content-word overlap")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  convert->add_option("--max-length-ratio", o.max_length_ratio,
                      "Hybrid filter: hypothesis / (question + answer) tokens")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  convert->add_flag("--allow-question-mark", o.allow_question_mark,
                    "Hybrid filter: accept hypotheses containing '?'");
  convert->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  convert->add_option("--manifest", o.manifest, "Manifest path (default <output>.manifest.json)");

  CLI::App* categorize =
      app.add_subcommand("categorize", "Assign heuristic question categories");
  categorize->add_option("--scheme", o.scheme, "Category scheme")
      ->check(CLI::IsMember({"race", "multirc"}))
      ->capture_default_str();
  categorize->add_option("--format", o.format, "Source format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  categorize->add_option("--split", o.split, "train, dev or test; inferred from the path if unset");
  categorize->add_option("--input", o.input, "MCQ corpus file or directory")->required();
  categorize->add_option("--output", o.output, "Output file (default stdout)");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Multiple-choice accuracy from scores");
  evaluate->add_option("--examples", o.examples, "NLI JSON lines")->required();
  evaluate->add_option("--scores", o.scores, "Score JSON lines")->required();
  evaluate->add_flag("--by-category", o.by_category, "Per-category accuracy table");
  evaluate->add_flag("--json", o.json, "JSON lines instead of tables");

  CLI::App* compare = app.add_subcommand("compare", "Compare two models on the same examples");
  compare->add_option("--examples", o.examples, "NLI JSON lines")->required();
  compare->add_option("--scores-a", o.scores_a, "Scores of model A")->required();
  compare->add_option("--scores-b", o.scores_b, "Scores of model B")->required();
  compare->add_option("--name-a", o.name_a, "Label for model A")->capture_default_str();
  compare->add_option("--name-b", o.name_b, "Label for model B")->capture_default_str();
  compare->add_flag("--by-category", o.by_category,
                    "Per-category accuracy and gain/loss distributions");
  compare->add_flag("--json", o.json, "JSON lines instead of tables");

  CLI::App* cfcs = app.add_subcommand("cfcs", "Summary factual consistency metrics");
  cfcs->require_subcommand(1);
  CLI::App* tune = cfcs->add_subcommand("tune", "Pick the threshold with best balanced accuracy");
  tune->add_option("--labeled", o.labeled, "Labeled score lines")->required();
  tune->add_flag("--json", o.json, "JSON line output");
  CLI::App* classify = cfcs->add_subcommand("classify", "Balanced accuracy at a threshold");
  classify->add_option("--labeled", o.labeled, "Labeled score lines")->required();
  classify->add_option("--threshold", o.threshold, "Consistent iff score >= threshold")
      ->required();
  classify->add_flag("--json", o.json, "JSON line output");
  CLI::App* rank = cfcs->add_subcommand("rank", "Pairwise ranking accuracy");
  rank->add_option("--pairs", o.pairs, "Pair score lines")->required();
  rank->add_flag("--json", o.json, "JSON line output");

  CLI::App* stats = app.add_subcommand("stats", "Label, strategy and category distributions");
  stats->add_option("--input", o.input, "NLI JSON lines")->required();
  stats->add_flag("--json", o.json, "JSON lines instead of tables");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*convert) return Convert(o, err);
    if (*categorize) return Categorize(o, out);
    if (*evaluate) return Evaluate(o, out);
    if (*compare) return Compare(o, out);
    if (*tune) return CfcsTune(o, out);
    if (*classify) return CfcsClassify(o, out);
    if (*rank) return CfcsRank(o, out);
    if (*stats) return Stats(o, out);
  } catch (const WriteError& e) {
    err << "error: " << e.what() << " (" << e.written() << " records written)\n";
    return kExitData;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << '\n';
    return kExitBackend;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace mcnli
