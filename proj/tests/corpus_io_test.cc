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

#include "mcnli/corpus_io.h"

#include <random>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mcnli/errors.h"
#include "test_support.h"

namespace mcnli {
namespace {

using ::mcnli::testing::ReadFileBytes;
using ::mcnli::testing::ReadLines;
using ::mcnli::testing::ScopedTempDir;
using ::mcnli::testing::WriteFileBytes;

const char kRaceArticle[] = R"({
  "id": "high1234.txt",
  "article": "Tom lives in a small town.\nHe  likes\tapples.",
  "questions": ["Where does Tom live?", "What does Tom like?"],
  "options": [["In a city", "In a small town", "On a farm", "By the sea"],
              ["Apples", "Pears", "Plums", "Grapes"]],
  "answers": ["B", "A"]
})";

TEST(ReadRaceTest, ArticleFile) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "RACE/dev/high/1234.txt", kRaceArticle);
  auto examples = ReadMcq(Dataset::kRace, dir / "RACE");
  ASSERT_EQ(examples.size(), 2u);
  const McqExample& e = examples[0];
  EXPECT_EQ(e.id, "race/dev/high1234/0");
  EXPECT_EQ(e.split, Split::kDev);
  EXPECT_EQ(e.passage_units,
            (std::vector<std::string>{"Tom lives in a small town.", "He likes apples."}));
  ASSERT_EQ(e.options.size(), 4u);
  EXPECT_EQ(e.NumCorrect(), 1);
  EXPECT_TRUE(e.options[1].is_correct);
  EXPECT_EQ(examples[1].id, "race/dev/high1234/1");
  EXPECT_TRUE(examples[1].options[0].is_correct);
}

TEST(ReadRaceTest, BadLetterNamesQuestion) {
  ScopedTempDir dir;
  std::string bad = kRaceArticle;
  bad.replace(bad.find("\"A\"]"), 3, "\"E\"");
  WriteFileBytes(dir / "train/1.txt", bad);
  try {
    ReadMcq(Dataset::kRace, dir / "train");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("question 1"), std::string::npos) << e.what();
  }
}

TEST(ReadRaceTest, SplitMustBeInferable) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "misc/1.txt", kRaceArticle);
  EXPECT_THROW(ReadMcq(Dataset::kRace, dir / "misc"), DataError);
  EXPECT_EQ(ReadMcq(Dataset::kRace, dir / "misc", Split::kTest).size(), 2u);
}

TEST(ReadMultiRcTest, SeveralCorrectAnswers) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "dev_83-fixedIds.json", R"({"data": [{"id": "News/doc1.txt",
    "paragraph": {"text": "<b>Sent 1: </b>Billy has red hair.<br><b>Sent 2: </b>So does Sarah.<br>",
      "questions": [{"question": "Who does Billy have the same color hair as?",
        "answers": [{"text": "Sarah", "isAnswer": true}, {"text": "His sister Sarah", "isAnswer": true},
                    {"text": "Tom", "isAnswer": false}]}]}}]})");
  auto examples = ReadMcq(Dataset::kMultiRc, dir / "dev_83-fixedIds.json");
  ASSERT_EQ(examples.size(), 1u);
  EXPECT_EQ(examples[0].id, "multirc/dev/News/doc1.txt/0");
  EXPECT_EQ(examples[0].passage_units,
            (std::vector<std::string>{"Billy has red hair.", "So does Sarah."}));
  EXPECT_EQ(examples[0].NumCorrect(), 2);
}

TEST(ReadDreamTest, DialogueTurns) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "test.json", R"([[["M: How often do you see your parents?", "W: Once a week."],
    [{"question": "How often does the woman see her parents?",
      "choice": ["Once a week.", "Twice a year.", "Every day."], "answer": "Once a week."}],
    "5-510"]])");
  auto examples = ReadMcq(Dataset::kDream, dir / "test.json");
  ASSERT_EQ(examples.size(), 1u);
  EXPECT_EQ(examples[0].id, "dream/test/5-510/0");
  EXPECT_TRUE(examples[0].is_dialogue);
  EXPECT_EQ(examples[0].passage_units.size(), 2u);
  EXPECT_TRUE(examples[0].options[0].is_correct);
  EXPECT_EQ(examples[0].NumCorrect(), 1);
}

TEST(ReadDreamTest, AnswerMustMatchAChoice) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "dev.json", R"([[["M: Hi."],
    [{"question": "Who?", "choice": ["A", "B"], "answer": "C"}], "1-1"]])");
  EXPECT_THROW(ReadMcq(Dataset::kDream, dir / "dev.json"), DataError);
}

TEST(ReadCosmosQaTest, CsvDropsNoneOfTheAbove) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "valid.csv",
                 "id,context,question,answer0,answer1,answer2,answer3,label\n"
                 "r1,\"She said, \"\"hi\"\".\nThen left.\",Why did she leave?,A,B,C,D,2\n"
                 "r2,Ctx,What happened?,A,B,C, none of the ABOVE ,3\n"
                 "r3,Ctx,What happened?,A,B,None of the above,D,0\n");
  auto examples = ReadMcq(Dataset::kCosmosQa, dir / "valid.csv");
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_EQ(examples[0].id, "cosmosqa/dev/r1/0");
  EXPECT_EQ(examples[0].passage_units,
            (std::vector<std::string>{"She said, \"hi\".", "Then left."}));
  EXPECT_TRUE(examples[0].options[2].is_correct);
  EXPECT_EQ(examples[1].id, "cosmosqa/dev/r3/0");
}

TEST(ReadCosmosQaTest, JsonLines) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "train.jsonl",
                 R"({"id": "x", "context": "C.", "question": "Q?", "answer0": "a", "answer1": "b", "answer2": "c", "answer3": "None of the above", "label": 3})"
                 "\n"
                 R"({"id": "y", "context": "C.", "question": "Q?", "answer0": "a", "answer1": "b", "answer2": "c", "answer3": "d", "label": 1})"
                 "\n");
  auto examples = ReadMcq(Dataset::kCosmosQa, dir / "train.jsonl");
  ASSERT_EQ(examples.size(), 1u);
  EXPECT_EQ(examples[0].id, "cosmosqa/train/y/0");
}

TEST(ReadGenericTest, PassageAndTurns) {
  std::istringstream in(
      R"({"id": "a", "passage": "One.\nTwo.", "question": "Q?", "options": [{"text": "x", "correct": true}, {"text": "y", "correct": false}], "split": "train"})"
      "\n\n"
      R"({"turns": ["M: Hi.", "W: Hello."], "question": "Q?", "options": [{"text": "x", "correct": false}, {"text": "y", "correct": true}], "split": "valid"})"
      "\n");
  auto examples = ReadGenericMcq(in, "mem");
  ASSERT_EQ(examples.size(), 2u);
  EXPECT_EQ(examples[0].id, "generic/train/a/0");
  EXPECT_EQ(examples[0].passage_units, (std::vector<std::string>{"One.", "Two."}));
  EXPECT_EQ(examples[1].id, "generic/dev/1/0");
  EXPECT_TRUE(examples[1].is_dialogue);
}

TEST(ReadGenericTest, ErrorsNameTheLine) {
  std::istringstream in(
      R"({"id": "a", "passage": "P.", "question": "Q?", "options": [{"text": "x", "correct": true}, {"text": "y", "correct": false}], "split": "train"})"
      "\n"
      R"({"id": "b", "passage": "P.", "options": [{"text": "x", "correct": true}, {"text": "y", "correct": false}], "split": "train"})"
      "\n");
  try {
    ReadGenericMcq(in, "mem");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("mem:2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("question"), std::string::npos) << msg;
  }
}

TEST(ReadGenericTest, DuplicateIdRejected) {
  const std::string line =
      R"({"id": "a", "passage": "P.", "question": "Q?", "options": [{"text": "x", "correct": true}, {"text": "y", "correct": false}], "split": "train"})";
  std::istringstream in(line + "\n" + line + "\n");
  EXPECT_THROW(ReadGenericMcq(in, "mem"), DataError);
}

TEST(ValidateTest, Invariants) {
  McqExample e;
  e.id = "generic/train/x/0";
  e.passage_units = {"P."};
  e.question = "Q?";
  e.source_dataset = Dataset::kRace;
  e.options = {{"a", true}, {"b", false}};
  EXPECT_NO_THROW(ValidateMcqExample(e));
  e.options[1].is_correct = true;
  EXPECT_THROW(ValidateMcqExample(e), DataError);  // two correct for race
  e.source_dataset = Dataset::kMultiRc;
  EXPECT_NO_THROW(ValidateMcqExample(e));
  e.options = {{"a", true}};
  EXPECT_THROW(ValidateMcqExample(e), DataError);
  e.source_dataset = Dataset::kGeneric;
  e.options.assign(9, {"a", true});
  EXPECT_THROW(ValidateMcqExample(e), DataError);
  e.options = {{"a", false}, {"b", false}};
  EXPECT_THROW(ValidateMcqExample(e), DataError);
}

NliExample RandomNli(std::mt19937& rng, int i) {
  const char* words[] = {"alpha", "beta", "\"quoted\"", "caf\xc3\xa9", "line\nbreak", "tab\t", "?"};
  std::uniform_int_distribution<int> pick(0, 6);
  auto phrase = [&] {
    std::string s;
    for (int k = 0; k < 5; ++k) s += std::string(words[pick(rng)]) + " ";
    return s;
  };
  NliExample e;
  e.source_question_id = "generic/train/p" + std::to_string(i) + "/0";
  e.option_index = i % 4;
  e.id = e.source_question_id + "#" + std::to_string(e.option_index);
  e.premise = phrase();
  e.hypothesis = phrase();
  e.label = pick(rng) % 2 ? Label::kEntailment : Label::kNotEntailment;
  e.strategy = static_cast<Strategy>(pick(rng) % 3);
  for (int f = 0; f < 6; ++f) {
    if (pick(rng) % 2) e.categories.Set(static_cast<RaceFlag>(f));
  }
  if (pick(rng) % 3 == 0) e.categories.multirc_type = static_cast<MultiRcType>(pick(rng));
  return e;
}

TEST(NliJsonlTest, RoundTripRandomExamples) {
  std::mt19937 rng(7);
  std::vector<NliExample> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(RandomNli(rng, i));
  ScopedTempDir dir;
  EXPECT_EQ(WriteNliJsonl(xs, dir / "out.jsonl"), 100u);
  EXPECT_EQ(ReadLines(dir / "out.jsonl").size(), 100u);
  EXPECT_EQ(ReadNliJsonl(dir / "out.jsonl"), xs);
}

TEST(NliJsonlTest, SingleLineHasAllFields) {
  std::mt19937 rng(1);
  NliExample e = RandomNli(rng, 0);
  auto j = nlohmann::json::parse(NliExampleToJsonLine(e));
  for (const char* f : {"id", "premise", "hypothesis", "label", "strategy", "categories",
                        "question_id", "option_index"}) {
    EXPECT_TRUE(j.contains(f)) << f;
  }
  EXPECT_EQ(j.size(), 8u);
}

TEST(NliJsonlTest, EmptyStream) {
  ScopedTempDir dir;
  EXPECT_EQ(WriteNliJsonl({}, dir / "empty.jsonl"), 0u);
  EXPECT_EQ(ReadFileBytes(dir / "empty.jsonl"), "");
}

TEST(NliJsonlTest, UnwritableSink) {
  ScopedTempDir dir;
  EXPECT_THROW(WriteNliJsonl({}, dir.path()), WriteError);
}

TEST(ReadScoresTest, Valid) {
  std::istringstream in(R"({"id": "race/dev/p1/0#2", "entail": 0.9})" "\n");
  auto scores = ReadScores(in, "s");
  ASSERT_EQ(scores.size(), 1u);
  EXPECT_EQ(scores[0].id, "race/dev/p1/0#2");
  EXPECT_DOUBLE_EQ(scores[0].entail, 0.9);
}

TEST(ReadScoresTest, Errors) {
  {
    std::istringstream in(R"({"id": "a", "entail": 0.1})" "\n" R"({"id": "a", "entail": 0.2})");
    EXPECT_THROW(ReadScores(in, "s"), DataError);
  }
  {
    std::istringstream in(R"({"id": "a", "entail": 1.2})");
    try {
      ReadScores(in, "s");
      FAIL();
    } catch (const DataError& e) {
      EXPECT_NE(std::string(e.what()).find("a"), std::string::npos);
    }
  }
  {
    std::istringstream in(R"({"id": "a", "entail": 0.5})" "\n" R"({"id": "b"})");
    try {
      ReadScores(in, "s");
      FAIL();
    } catch (const DataError& e) {
      EXPECT_NE(std::string(e.what()).find("s:2"), std::string::npos) << e.what();
    }
  }
}

TEST(ReadCfcsTest, LabeledAndPairs) {
  std::istringstream labeled(R"({"id": "f1", "score": 0.8, "label": "consistent"})");
  auto items = ReadCfcsLabeled(labeled, "l");
  ASSERT_EQ(items.size(), 1u);
  EXPECT_EQ(items[0].label, CfcsLabel::kConsistent);
  std::istringstream bad(R"({"id": "f1", "score": 0.8, "label": "maybe"})");
  EXPECT_THROW(ReadCfcsLabeled(bad, "l"), DataError);
  std::istringstream missing(R"({"id": "f1", "label": "consistent"})");
  EXPECT_THROW(ReadCfcsLabeled(missing, "l"), DataError);
  std::istringstream pairs(R"({"id": "p1", "consistent_score": 0.7, "inconsistent_score": 0.3})");
  auto ps = ReadCfcsPairs(pairs, "p");
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_DOUBLE_EQ(ps[0].consistent_score, 0.7);
}

TEST(ReadMcqTest, Deterministic) {
  ScopedTempDir dir;
  WriteFileBytes(dir / "corpus.jsonl", testing::SyntheticGenericCorpus(50, 4, 3));
  EXPECT_EQ(ReadMcq(Dataset::kGeneric, dir / "corpus.jsonl"),
            ReadMcq(Dataset::kGeneric, dir / "corpus.jsonl"));
}

}  // namespace
}  // namespace mcnli
