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

// Client for an external question+answer -> statement converter.
//
// The backend is started with `/bin/sh -c <command>` and speaks one JSON
// object per line:
//
//   client  -> {"id": ..., "question": ..., "answer": ...}
//   backend -> {"id": ..., "hypothesis": ...} | {"id": ..., "error": ...}
//
// The client closes the backend's stdin to end the batch; the backend must
// answer every id and exit 0. Responses may arrive in any order.

#ifndef MCNLI_NEURAL_ADAPTER_H_
#define MCNLI_NEURAL_ADAPTER_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcnli/types.h"

namespace mcnli {

struct ConversionRequest {
  std::string id;
  std::string question;
  std::string answer;
};

struct NeuralConfig {
  std::string command;
  // Empty path disables caching.
  std::filesystem::path cache;
  std::chrono::milliseconds timeout{std::chrono::seconds(300)};
};

// Hex SHA-256 of question + '\x1f' + answer.
std::string CacheKey(std::string_view question, std::string_view answer);

// Append-only line cache: {"key", "hypothesis"} or {"key", "error"} per line,
// later lines override earlier ones.
class NeuralCache {
 public:
  NeuralCache() = default;
  // Loads `path` if it exists. A missing file is an empty cache.
  explicit NeuralCache(std::filesystem::path path);

  const ConversionOutcome* Find(const std::string& key) const;
  // Appends under an exclusive lock and updates the in-memory view. No-op
  // for a cache without a path beyond the in-memory update.
  void Append(const std::vector<std::pair<std::string, ConversionOutcome>>& entries);

  size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path path_;
  std::map<std::string, ConversionOutcome> entries_;
};

// Converts a batch. Cache hits never reach the backend; misses are sent in
// request order, one line per distinct (question, answer). The result has the
// same length and order as `requests`. A backend error record becomes a
// kBackendError failure carrying the message. Throws BackendError when the
// backend cannot be started, writes a malformed line, leaves ids unanswered,
// exits nonzero or runs past the timeout; DataError on duplicate request ids.
std::vector<ConversionOutcome> ConvertBatch(const NeuralConfig& config,
                                            std::span<const ConversionRequest> requests);

}  // namespace mcnli

#endif  // MCNLI_NEURAL_ADAPTER_H_
