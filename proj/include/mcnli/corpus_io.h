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

// Readers for the source multiple-choice corpora and the score files, and the
// line-delimited NLI corpus writer.
//
// Native formats:
//   race      one JSON object per article file: article, questions, options,
//             answers (letters A-D). `source` may be a file or a directory
//             (searched recursively, files visited in sorted path order).
//   multirc   {"data": [{"id", "paragraph": {"text", "questions": [
//             {"question", "answers": [{"text", "isAnswer"}]}]}}]}
//   dream     [[turns...], [{"question", "choice", "answer"}...], "id"] ...
//   cosmosqa  CSV with header (id, context, question, answer0..3, label) or
//             JSON lines with the same fields.
//   generic   JSON lines: id (optional), passage | turns, question,
//             options [{text, correct}], split.
//
// For native formats the split is taken from the path (a "train", "dev",
// "valid"/"validation" or "test" component or file stem) unless given.

#ifndef MCNLI_CORPUS_IO_H_
#define MCNLI_CORPUS_IO_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcnli/types.h"

namespace mcnli {

std::vector<McqExample> ReadMcq(Dataset format, const std::filesystem::path& source,
                                std::optional<Split> split = std::nullopt);

// Parses generic-format lines from an in-memory stream; `origin` names the
// source in error messages.
std::vector<McqExample> ReadGenericMcq(std::istream& in, const std::string& origin);

// Throws DataError when an example violates the McqExample invariants.
void ValidateMcqExample(const McqExample& example);

// Returns the number of lines written. Throws WriteError (carrying the
// partial count) on I/O failure.
size_t WriteNliJsonl(std::span<const NliExample> examples, const std::filesystem::path& sink);
size_t WriteNliJsonl(std::span<const NliExample> examples, std::ostream& out);
std::string NliExampleToJsonLine(const NliExample& example);

std::vector<NliExample> ReadNliJsonl(const std::filesystem::path& source);
std::vector<NliExample> ReadNliJsonl(std::istream& in, const std::string& origin);

std::vector<ScoreRecord> ReadScores(const std::filesystem::path& source);
std::vector<ScoreRecord> ReadScores(std::istream& in, const std::string& origin);

std::vector<CfcsLabeledItem> ReadCfcsLabeled(const std::filesystem::path& source);
std::vector<CfcsLabeledItem> ReadCfcsLabeled(std::istream& in, const std::string& origin);
std::vector<CfcsPair> ReadCfcsPairs(const std::filesystem::path& source);
std::vector<CfcsPair> ReadCfcsPairs(std::istream& in, const std::string& origin);

}  // namespace mcnli

#endif  // MCNLI_CORPUS_IO_H_
