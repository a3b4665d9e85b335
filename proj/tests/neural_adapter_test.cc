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

#include "mcnli/neural_adapter.h"

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mcnli/errors.h"
#include "test_support.h"

namespace mcnli {
namespace {

using ::mcnli::testing::ReadLines;
using ::mcnli::testing::ScopedTempDir;
using ::mcnli::testing::StubBackendPath;

NeuralConfig Stub(const std::string& flags = "", const std::string& cache = "") {
  NeuralConfig c;
  c.command = StubBackendPath() + " " + flags;
  c.cache = cache;
  c.timeout = std::chrono::seconds(20);
  return c;
}

std::vector<ConversionRequest> Requests(int n) {
  std::vector<ConversionRequest> rs;
  for (int i = 0; i < n; ++i) {
    rs.push_back({"q" + std::to_string(i), "What is item " + std::to_string(i) + "?",
                  "Answer " + std::to_string(i)});
  }
  return rs;
}

TEST(CacheKeyTest, Sha256OfQuestionSeparatorAnswer) {
  EXPECT_EQ(CacheKey("How often does the woman see her parents?", "Once a week."),
            "bc3d07f3079568fefde284d053ffe78e8c66d7972f28c1a06bd5a2e4d6946002");
  EXPECT_NE(CacheKey("ab", "c"), CacheKey("a", "bc"));
}

TEST(ConvertBatchTest, EchoStub) {
  std::vector<ConversionRequest> rs = {
      {"r1", "How often does the woman see her parents?", "Once a week."}};
  auto out = ConvertBatch(Stub(), rs);
  ASSERT_EQ(out.size(), 1u);
  ASSERT_TRUE(out[0].ok());
  EXPECT_EQ(*out[0].hypothesis, "How often does the woman see her parents Once a week.");
}

TEST(ConvertBatchTest, ErrorRecordBecomesFailure) {
  std::vector<ConversionRequest> rs = {{"r1", "Why boom?", "x"}, {"r2", "Why not?", "y"}};
  auto out = ConvertBatch(Stub("--error-on boom --error-message oom"), rs);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_FALSE(out[0].ok());
  EXPECT_EQ(out[0].failure_reason, FailureReason::kBackendError);
  EXPECT_EQ(out[0].detail, "oom");
  EXPECT_TRUE(out[1].ok());
}

TEST(ConvertBatchTest, OrderFollowsRequestsNotResponses) {
  auto rs = Requests(50);
  auto out = ConvertBatch(Stub("--reverse"), rs);
  ASSERT_EQ(out.size(), 50u);
  for (int i = 0; i < 50; ++i) {
    ASSERT_TRUE(out[i].ok());
    EXPECT_EQ(*out[i].hypothesis, rs[i].question.substr(0, rs[i].question.size() - 1) + " " +
                                      rs[i].answer);
  }
}

TEST(ConvertBatchTest, CacheServesRepeatsWithoutBackend) {
  ScopedTempDir dir;
  const std::string count = (dir / "count.txt").string();
  const std::string cache = (dir / "cache.jsonl").string();
  std::vector<ConversionRequest> rs = {{"a", "Who came?", "Tom"}};
  auto first = ConvertBatch(Stub("--count-file " + count, cache), rs);
  auto second = ConvertBatch(Stub("--count-file " + count, cache), rs);
  EXPECT_EQ(first, second);
  EXPECT_EQ(ReadLines(count).size(), 1u);
}

TEST(ConvertBatchTest, DuplicatePairsInOneBatchSentOnce) {
  ScopedTempDir dir;
  const std::string count = (dir / "count.txt").string();
  std::vector<ConversionRequest> rs = {{"a", "Who came?", "Tom"}, {"b", "Who came?", "Tom"}};
  auto out = ConvertBatch(Stub("--count-file " + count), rs);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0], out[1]);
  EXPECT_EQ(ReadLines(count).size(), 1u);
}

TEST(ConvertBatchTest, CachedRunNeedsNoCommand) {
  ScopedTempDir dir;
  const std::string cache = (dir / "cache.jsonl").string();
  auto rs = Requests(5);
  auto warm = ConvertBatch(Stub("", cache), rs);
  NeuralConfig offline;
  offline.cache = cache;
  EXPECT_EQ(ConvertBatch(offline, rs), warm);
  rs.push_back({"new", "New?", "n"});
  EXPECT_THROW(ConvertBatch(offline, rs), BackendError);
}

TEST(ConvertBatchTest, ErrorsAreCached) {
  ScopedTempDir dir;
  const std::string count = (dir / "count.txt").string();
  const std::string cache = (dir / "cache.jsonl").string();
  std::vector<ConversionRequest> rs = {{"a", "boom?", "x"}};
  auto flags = "--error-on boom --count-file " + count;
  auto first = ConvertBatch(Stub(flags, cache), rs);
  auto second = ConvertBatch(Stub(flags, cache), rs);
  EXPECT_EQ(first, second);
  EXPECT_EQ(second[0].detail, "oom");
  EXPECT_EQ(ReadLines(count).size(), 1u);
}

TEST(NeuralCacheTest, LastEntryWinsAndTornLinesSkipped) {
  ScopedTempDir dir;
  testing::WriteFileBytes(dir / "c.jsonl",
                          "{\"key\":\"k\",\"hypothesis\":\"old\"}\n"
                          "{\"key\":\"k\",\"hypothesis\":\"new\"}\n"
                          "{\"key\":\"j\",\"hypo");
  NeuralCache cache(dir / "c.jsonl");
  EXPECT_EQ(cache.size(), 1u);
  ASSERT_NE(cache.Find("k"), nullptr);
  EXPECT_EQ(*cache.Find("k")->hypothesis, "new");
}

TEST(ConvertBatchTest, MalformedLineNamed) {
  try {
    ConvertBatch(Stub("--malformed-after 1"), Requests(3));
    FAIL() << "expected BackendError";
  } catch (const BackendError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(ConvertBatchTest, MissingIdsListed) {
  try {
    ConvertBatch(Stub("--drop q1"), Requests(3));
    FAIL() << "expected BackendError";
  } catch (const BackendError& e) {
    EXPECT_NE(std::string(e.what()).find("q1"), std::string::npos) << e.what();
  }
}

TEST(ConvertBatchTest, NonzeroExit) {
  EXPECT_THROW(ConvertBatch(Stub("--exit-code 4"), Requests(2)), BackendError);
}

TEST(ConvertBatchTest, StartFailure) {
  NeuralConfig c;
  c.command = "/nonexistent/converter-backend";
  EXPECT_THROW(ConvertBatch(c, Requests(1)), BackendError);
}

TEST(ConvertBatchTest, Timeout) {
  NeuralConfig c = Stub("--sleep-ms 3000");
  c.timeout = std::chrono::milliseconds(200);
  const auto start = std::chrono::steady_clock::now();
  EXPECT_THROW(ConvertBatch(c, Requests(1)), BackendError);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(2));
}

TEST(ConvertBatchTest, DuplicateRequestIds) {
  std::vector<ConversionRequest> rs = {{"a", "Q?", "x"}, {"a", "Q?", "y"}};
  EXPECT_THROW(ConvertBatch(Stub(), rs), DataError);
}

TEST(ConvertBatchTest, EmptyBatchStartsNothing) {
  NeuralConfig c;
  c.command = "/nonexistent/converter-backend";
  EXPECT_TRUE(ConvertBatch(c, {}).empty());
}

TEST(ConvertBatchTest, LargeBatchDoesNotDeadlock) {
  auto rs = Requests(5000);
  auto out = ConvertBatch(Stub(), rs);
  ASSERT_EQ(out.size(), 5000u);
  EXPECT_TRUE(out.back().ok());
}

}  // namespace
}  // namespace mcnli
