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

#include "mcnli/text.h"

#include <algorithm>

namespace mcnli::text {
namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

char Lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }
char Upper(char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c; }

}  // namespace

std::string_view Trim(std::string_view s) {
  size_t b = 0;
  while (b < s.size() && (IsBlank(s[b]) || s[b] == '\n')) ++b;
  size_t e = s.size();
  while (e > b && (IsBlank(s[e - 1]) || s[e - 1] == '\n')) --e;
  return s.substr(b, e - b);
}

std::string NormalizeWhitespace(std::string_view s, bool keep_newlines) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  bool pending_newline = false;
  for (char c : s) {
    if (c == '\n' && keep_newlines) {
      pending_newline = true;
      pending_space = false;
    } else if (IsBlank(c) || c == '\n') {
      if (!pending_newline) pending_space = true;
    } else {
      if (!out.empty()) {
        if (pending_newline) {
          out += '\n';
        } else if (pending_space) {
          out += ' ';
        }
      }
      pending_space = pending_newline = false;
      out += c;
    }
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (IsBlank(s[i]) || s[i] == '\n')) ++i;
    size_t start = i;
    while (i < s.size() && !(IsBlank(s[i]) || s[i] == '\n')) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = Lower(c);
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(),
                    [](char x, char y) { return Lower(x) == Lower(y); });
}

bool EndsWithIgnoreCase(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         EqualsIgnoreCase(s.substr(s.size() - suffix.size()), suffix);
}

std::string CapitalizeFirst(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = Upper(out[0]);
  return out;
}

std::string LowercaseFirst(std::string_view s) {
  std::string out(s);
  if (!out.empty()) out[0] = Lower(out[0]);
  return out;
}

bool ContainsWord(std::string_view haystack, std::string_view word) {
  if (word.empty()) return false;
  const std::string h = ToLower(haystack);
  const std::string w = ToLower(word);
  for (size_t pos = h.find(w); pos != std::string::npos; pos = h.find(w, pos + 1)) {
    bool left_ok = pos == 0 || !IsWordChar(h[pos - 1]);
    size_t end = pos + w.size();
    bool right_ok = end == h.size() || !IsWordChar(h[end]);
    if (left_ok && right_ok) return true;
  }
  return false;
}

bool ContainsIgnoreCase(std::string_view haystack, std::string_view needle) {
  return ToLower(haystack).find(ToLower(needle)) != std::string::npos;
}

std::vector<std::string> ContentWords(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && !IsWordChar(s[i])) ++i;
    size_t start = i;
    while (i < s.size() && IsWordChar(s[i])) ++i;
    if (i - start >= 3) out.push_back(ToLower(s.substr(start, i - start)));
  }
  return out;
}

size_t CountChar(std::string_view s, char c) {
  return static_cast<size_t>(std::count(s.begin(), s.end(), c));
}

}  // namespace mcnli::text
