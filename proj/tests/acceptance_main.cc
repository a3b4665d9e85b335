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

// Acceptance runner: one PASS/FAIL/SKIP line per criterion. Exits nonzero if
// any criterion fails. Corpus count checks run only when MCNLI_DATA_DIR
// points at a directory holding race/, dream/ and multirc/.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcnli/cli.h"
#include "mcnli/corpus_io.h"
#include "mcnli/question_analysis.h"
#include "mcnli/rule_converter.h"
#include "test_support.h"

namespace mcnli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::ReadFileBytes;
using testing::ReadLines;
using testing::ScopedTempDir;
using testing::WriteFileBytes;

struct Outcome {
  enum Kind { kPass, kFail, kSkip } kind = kPass;
  std::string detail;
};

Outcome Pass(std::string d = {}) { return {Outcome::kPass, std::move(d)}; }
Outcome Fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Outcome Skip(std::string d) { return {Outcome::kSkip, std::move(d)}; }

class Runner {
 public:
  // `budget_s` <= 0 means no time limit.
  void Check(const std::string& name, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = Fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.kind == Outcome::kPass && budget_s > 0 && secs >= budget_s) {
      o = Fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
    }
    const char* tag = o.kind == Outcome::kPass ? "PASS" : o.kind == Outcome::kFail ? "FAIL" : "SKIP";
    if (o.kind == Outcome::kFail) ++failures_;
    std::printf("%s  %-28s %7.3fs  %s\n", tag, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  int failures() const { return failures_; }

 private:
  int failures_ = 0;
};

int Cli(const std::vector<std::string>& args, std::string* err = nullptr) {
  std::ostringstream out, e;
  int code = RunCli(args, out, e);
  if (err) *err = e.str();
  return code;
}

Outcome GoldenRules() {
  std::ifstream in(std::string(MCNLI_TESTDATA_DIR) + "/rule_golden.jsonl");
  if (!in) return Fail("golden file missing");
  // Rows that must be present among the fixtures.
  const std::vector<std::pair<std::string, std::string>> required = {
      {"Which of the following is TRUE about the report findings?", "race"},
      {"What's the best title of the passage?", "race"},
      {"How often does the woman see her parents?", "dream"},
      {"What is one method of treatment the dentist does NOT mention?", "dream"},
      {"What building were the four captives inside on Tuesday?", "multirc"},
      {"How might Air New Zealand's video partner benefited from helping to make this video?",
       "multirc"},
  };
  std::map<std::string, bool> seen;
  size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    ++rows;
    ConversionOutcome o = ConvertRule(j["question"].get<std::string>(), j["answer"].get<std::string>());
    std::string got = o.ok() ? *o.hypothesis
                             : "<failure:" + std::string(FailureReasonName(*o.failure_reason)) + ">";
    if (got != j["expected"].get<std::string>()) {
      return Fail(j["question"].get<std::string>() + " -> " + got);
    }
    seen[j["question"].get<std::string>()] = true;
  }
  for (const auto& [q, src] : required) {
    if (!seen.count(q)) return Fail("fixture row absent: " + q);
  }
  return Pass(std::to_string(rows) + " rows");
}

Outcome Categorizer() {
  struct RaceCase {
    const char* question;
    std::string passage;
    RaceFlag flag;
  };
  std::string quoted;
  for (int i = 0; i < 6; ++i) quoted += "\"Hello,\" she said. ";
  const RaceCase race[] = {
      {"What's the best title for this passage?", "A plain passage.", RaceFlag::kMainIdea},
      {"How many functions of snow are discussed in the passage?", "Snow.", RaceFlag::kMath},
      {"Who spoke first?", quoted, RaceFlag::kDialogue},
  };
  for (const RaceCase& c : race) {
    if (!CategorizeRace(c.question, c.passage).Has(c.flag)) {
      return Fail(std::string("race: ") + c.question);
    }
  }
  if (CategorizeRace("Who spoke first?", "\"Hi,\" he said.").Has(RaceFlag::kDialogue)) {
    return Fail("dialogue flag on a two-quote passage");
  }
  const std::pair<const char*, MultiRcType> multirc[] = {
      {"What is the drawback of kinetic energy from hydro power?", MultiRcType::kWhat},
      {"Who does Billy have the same color hair as?", MultiRcType::kWho},
      {"Approximately how much older is Charlie than Sylvia?", MultiRcType::kHow},
      {"Why did Phoebe cry?", MultiRcType::kWhy},
      {"Was the Emperor hurt when the explosion damaged his carriage?", MultiRcType::kAssertion},
      {"Which philosopher is said to have taught the young Confucius?", MultiRcType::kWhich},
      {"Where did money to fund the 9/11 plotters come from and where didn't it come from?",
       MultiRcType::kDoubleQuestions},
      {"When did the Romans set up a fortress at Aquae Sextiae (Aix-en-Provence)?",
       MultiRcType::kWhen},
      {"Where does the absorption part of digestion occur?", MultiRcType::kWhere},
      {"Explain the religious schism in both England and Scotland.", MultiRcType::kUncategorized},
  };
  for (const auto& [q, want] : multirc) {
    MultiRcType got = CategorizeMultiRc(q);
    if (got != want) {
      return Fail(std::string("multirc: ") + q + " -> " + std::string(MultiRcTypeTag(got)));
    }
  }
  return Pass("3 race + 10 multirc rows");
}

Outcome Cardinality() {
  ScopedTempDir dir;
  WriteFileBytes(dir / "in.jsonl", testing::SyntheticGenericCorpus(1000, 4, 7));
  std::string err;
  int code = Cli({"convert", "--format", "generic", "--strategy", "rule", "--jobs", "1",
                  "--input", (dir / "in.jsonl").string(), "--output",
                  (dir / "out.jsonl").string()},
                 &err);
  if (code != 0) return Fail("convert exited " + std::to_string(code) + ": " + err);
  std::vector<std::string> lines = ReadLines(dir / "out.jsonl");
  size_t entail = 0;
  std::map<std::string, std::string> premise_of;
  for (const std::string& l : lines) {
    json j = json::parse(l);
    if (j["label"] == "entailment") ++entail;
    const std::string id = j["id"];
    const std::string qid = id.substr(0, id.rfind('#'));
    auto [it, inserted] = premise_of.emplace(qid, j["premise"].get<std::string>());
    if (!inserted && it->second != j["premise"].get<std::string>()) {
      return Fail("premises differ within " + qid);
    }
  }
  if (lines.size() != 4000) return Fail(std::to_string(lines.size()) + " lines");
  if (entail != 1000) return Fail(std::to_string(entail) + " entailment labels");
  if (premise_of.size() != 1000) return Fail(std::to_string(premise_of.size()) + " questions");
  json manifest = json::parse(ReadFileBytes(dir / "out.jsonl.manifest.json"));
  long sum = 0;
  for (auto& [k, v] : manifest["stats"]["per_strategy"].items()) sum += v.get<long>();
  if (sum != 4000) return Fail("strategy histogram sums to " + std::to_string(sum));
  return Pass("4000 lines, 1000 entailment, histogram " + manifest["stats"]["per_strategy"].dump());
}

Outcome FromReport(const testing::PropertyReport& r, size_t min_cases) {
  if (r.cases < min_cases) return Fail("only " + std::to_string(r.cases) + " cases");
  if (!r.ok()) {
    return Fail(std::to_string(r.failures) + " failures; first: " + r.first_failure);
  }
  return Pass(std::to_string(r.cases) + " cases");
}

Outcome TwelveQuestionTable() {
  ScopedTempDir dir;
  auto f = testing::MakeTwelveQuestionFixture();
  WriteFileBytes(dir / "ex.jsonl", f.examples_jsonl);
  WriteFileBytes(dir / "a.jsonl", f.scores_a_jsonl);
  WriteFileBytes(dir / "b.jsonl", f.scores_b_jsonl);
  std::ostringstream out, err;
  int code = RunCli({"compare", "--examples", (dir / "ex.jsonl").string(), "--scores-a",
                     (dir / "a.jsonl").string(), "--scores-b", (dir / "b.jsonl").string(),
                     "--by-category"},
                    out, err);
  if (code != 0) return Fail("compare exited " + std::to_string(code) + ": " + err.str());
  if (out.str() != f.expected_compare_text) return Fail("output differs:\n" + out.str());
  return Pass("12 questions, 6 categories");
}

Outcome Determinism() {
  ScopedTempDir dir;
  WriteFileBytes(dir / "in.jsonl", testing::SyntheticGenericCorpus(200, 4, 11));
  const std::string backend = testing::StubBackendPath() + " --error-on party";
  auto run = [&](const std::string& out, const std::string& jobs) {
    std::string err;
    int code = Cli({"convert", "--format", "generic", "--strategy", "hybrid", "--input",
                    (dir / "in.jsonl").string(), "--output", (dir / out).string(),
                    "--neural-cmd", backend, "--cache", (dir / "cache.jsonl").string(),
                    "--jobs", jobs},
                   &err);
    if (code != 0) throw std::runtime_error("convert exited " + std::to_string(code) + ": " + err);
    return ReadFileBytes(dir / out);
  };
  const std::string cold = run("cold.jsonl", "1");
  const std::string warm1 = run("warm1.jsonl", "1");
  const std::string warm4 = run("warm4.jsonl", "4");
  if (warm1.empty()) return Fail("empty output");
  if (warm1 != warm4) return Fail("jobs 1 and jobs 4 differ");
  if (cold != warm1) return Fail("cold and warm cache runs differ");
  return Pass(std::to_string(warm1.size()) + " bytes identical across 3 runs");
}

// Integration counts against real corpora.
Outcome DatasetCounts(const fs::path& root, Dataset format, const std::string& sub,
                      const std::vector<std::pair<Split, size_t>>& expected, bool count_options,
                      size_t* race_train_options) {
  const fs::path dir = root / sub;
  if (!fs::exists(dir)) return Skip(dir.string() + " not present");
  std::vector<McqExample> corpus = ReadMcq(format, dir);
  std::map<Split, size_t> questions, options;
  for (const McqExample& e : corpus) {
    ++questions[e.split];
    options[e.split] += e.options.size();
  }
  std::string detail;
  bool ok = true;
  for (const auto& [split, want] : expected) {
    const size_t got = count_options ? options[split] : questions[split];
    detail += std::string(SplitName(split)) + "=" + std::to_string(got) + " ";
    if (got != want) ok = false;
  }
  if (race_train_options) *race_train_options = options[Split::kTrain];
  return ok ? Pass(detail) : Fail(detail);
}

}  // namespace
}  // namespace mcnli

int main() {
  using namespace mcnli;
  Runner r;
  r.Check("golden_rule_fixtures", 1.0, GoldenRules);
  r.Check("categorizer_fixtures", 1.0, Categorizer);
  r.Check("conversion_cardinality", 10.0, Cardinality);
  r.Check("hybrid_cascade_properties", 0,
          [] { return FromReport(testing::CheckHybridCascade(2000, 1), 1000); });
  r.Check("threshold_oracle", 30.0,
          [] { return FromReport(testing::CheckThresholdOracle(1000, 2), 1000); });
  r.Check("argmax_invariance", 0,
          [] { return FromReport(testing::CheckArgmaxInvariance(500, 3), 500); });
  r.Check("gain_loss_identity", 0,
          [] { return FromReport(testing::CheckGainLossIdentity(500, 4), 500); });
  r.Check("twelve_question_table", 0, TwelveQuestionTable);
  r.Check("determinism", 0, Determinism);

  const char* data = std::getenv("MCNLI_DATA_DIR");
  if (data == nullptr || *data == '\0') {
    r.Check("integration_counts", 0, [] { return Skip("MCNLI_DATA_DIR not set"); });
  } else {
    const fs::path root(data);
    size_t race_train_options = 0;
    bool have_race = fs::exists(root / "race");
    r.Check("integration_race", 0, [&] {
      return DatasetCounts(root, Dataset::kRace, "race",
                           {{Split::kTrain, 87866}, {Split::kDev, 4887}, {Split::kTest, 4934}},
                           false, &race_train_options);
    });
    r.Check("integration_dream", 0, [&] {
      return DatasetCounts(root, Dataset::kDream, "dream",
                           {{Split::kTrain, 6116}, {Split::kDev, 2040}, {Split::kTest, 2041}},
                           false, nullptr);
    });
    // MultiRC is counted per answer option.
    r.Check("integration_multirc", 0, [&] {
      return DatasetCounts(root, Dataset::kMultiRc, "multirc",
                           {{Split::kTrain, 27243}, {Split::kDev, 4848}}, true, nullptr);
    });
    r.Check("integration_race_train_options", 0, [&] {
      if (!have_race) return Skip("race not present");
      return race_train_options == 351464
                 ? Pass(std::to_string(race_train_options))
                 : Fail(std::to_string(race_train_options) + " != 351464");
    });
  }
  std::printf("%d failed\n", r.failures());
  return r.failures() == 0 ? 0 : 1;
}
