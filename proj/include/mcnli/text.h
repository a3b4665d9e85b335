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

// ASCII-level string helpers. Non-ASCII bytes pass through untouched, so
// UTF-8 input is safe but only ASCII letters change case.

#ifndef MCNLI_TEXT_H_
#define MCNLI_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace mcnli::text {

std::string_view Trim(std::string_view s);

// Collapses runs of spaces/tabs (and \r) into one space and trims. With
// keep_newlines, a newline survives as a line break (surrounding blanks are
// dropped and blank lines collapse); otherwise newlines count as whitespace.
std::string NormalizeWhitespace(std::string_view s, bool keep_newlines = false);

std::vector<std::string> SplitWhitespace(std::string_view s);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);

std::string ToLower(std::string_view s);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);
bool EndsWithIgnoreCase(std::string_view s, std::string_view suffix);

// Uppercases / lowercases the first character if it is an ASCII letter.
std::string CapitalizeFirst(std::string_view s);
std::string LowercaseFirst(std::string_view s);

inline bool IsWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Case-insensitive search for `word` delimited by non-word characters.
bool ContainsWord(std::string_view haystack, std::string_view word);
// Case-insensitive substring search.
bool ContainsIgnoreCase(std::string_view haystack, std::string_view needle);

// Lowercased alphanumeric runs of length >= 3.
std::vector<std::string> ContentWords(std::string_view s);

size_t CountChar(std::string_view s, char c);

}  // namespace mcnli::text

#endif  // MCNLI_TEXT_H_
