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

#ifndef MCNLI_SRC_QUESTION_TOKENS_H_
#define MCNLI_SRC_QUESTION_TOKENS_H_

#include <string>
#include <string_view>
#include <vector>

#include "mcnli/text.h"

namespace mcnli {

struct QuestionToken {
  std::string text;  // as written
  std::string bare;  // lowercase, outer punctuation stripped, ’ -> '
};

inline std::string BareForm(std::string_view token) {
  std::string s(token);
  for (size_t pos = s.find("\xE2\x80\x99"); pos != std::string::npos;
       pos = s.find("\xE2\x80\x99", pos)) {
    s.replace(pos, 3, "'");
  }
  auto strip = [](char c) {
    return c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' || c == '"' ||
           c == '(' || c == ')' || c == '[' || c == ']';
  };
  size_t b = 0, e = s.size();
  while (b < e && strip(s[b])) ++b;
  while (e > b && strip(s[e - 1])) --e;
  return text::ToLower(std::string_view(s).substr(b, e - b));
}

// Whitespace tokenization with the terminal '?' / '.' removed from the last
// token (a free-standing "?" token is dropped).
inline std::vector<QuestionToken> TokenizeQuestion(std::string_view question) {
  std::vector<QuestionToken> toks;
  for (std::string& t : text::SplitWhitespace(question)) {
    toks.push_back({t, BareForm(t)});
  }
  while (!toks.empty()) {
    std::string& last = toks.back().text;
    while (!last.empty() && (last.back() == '?' || last.back() == '.')) last.pop_back();
    if (!last.empty()) break;
    toks.pop_back();
  }
  return toks;
}

}  // namespace mcnli

#endif  // MCNLI_SRC_QUESTION_TOKENS_H_
