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

#include "mcnli/rule_converter.h"

#include <regex>
#include <vector>

#include "lexicon.h"
#include "mcnli/question_analysis.h"
#include "mcnli/text.h"
#include "question_tokens.h"

namespace mcnli {
namespace {

using lexicon::AuxKind;

bool IsTerminalPunct(char c) { return c == '.' || c == '!' || c == '?'; }

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

// "Mr." or "U.S." should not end a sentence.
bool IsAbbreviation(std::string_view word_with_dot) {
  static const std::vector<std::string_view> kAbbrev = {
      "mr.", "mrs.", "ms.", "dr.", "st.", "jr.", "sr.", "vs.", "etc.",
      "e.g.", "i.e.", "prof.", "no.", "mt.", "gen.", "col.", "lt."};
  const std::string lower = text::ToLower(word_with_dot);
  for (std::string_view a : kAbbrev) {
    if (lower == a) return true;
  }
  // single letters separated by dots: "U.S.", "a.m."
  if (lower.size() >= 4) {
    bool pattern = true;
    for (size_t i = 0; i < lower.size(); ++i) {
      bool want_dot = i % 2 == 1;
      if (want_dot ? lower[i] != '.' : !(lower[i] >= 'a' && lower[i] <= 'z')) {
        pattern = false;
        break;
      }
    }
    if (pattern) return true;
  }
  return false;
}

std::string StripTerminalPunct(std::string_view s) {
  s = text::Trim(s);
  while (!s.empty()) {
    char c = s.back();
    if (IsTerminalPunct(c) || c == ',' || c == ';' || c == ':' || IsSpace(c)) {
      s.remove_suffix(1);
    } else {
      break;
    }
  }
  return std::string(s);
}

bool LooksLikeProperNoun(std::string_view token, std::string_view question) {
  std::string bare(token);
  while (!bare.empty() && !text::IsWordChar(bare.back())) bare.pop_back();
  if (bare.empty()) return false;
  if (bare == "I" || bare.starts_with("I'")) return true;
  if (bare.size() >= 2) {
    for (size_t i = 1; i < bare.size(); ++i) {
      if (bare[i] >= 'A' && bare[i] <= 'Z') return true;
    }
  }
  if (!(bare[0] >= 'A' && bare[0] <= 'Z')) return false;
  std::vector<std::string> qtoks = text::SplitWhitespace(question);
  for (size_t i = 1; i < qtoks.size(); ++i) {
    std::string q = qtoks[i];
    while (!q.empty() && !text::IsWordChar(q.back())) q.pop_back();
    size_t b = 0;
    while (b < q.size() && !text::IsWordChar(q[b])) ++b;
    if (q.substr(b) == bare) return true;
  }
  return false;
}

// Joins words, drops spaces before punctuation, capitalizes, and ends the
// sentence with a period.
std::string FinishSentence(std::string_view raw) {
  std::string s = text::NormalizeWhitespace(raw);
  std::string out;
  out.reserve(s.size() + 1);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ' ' && i + 1 < s.size() &&
        (s[i + 1] == '.' || s[i + 1] == ',' || s[i + 1] == ';' || s[i + 1] == ':' ||
         s[i + 1] == '!' || s[i + 1] == '?')) {
      continue;
    }
    out += s[i];
  }
  while (!out.empty() && (out.back() == ',' || out.back() == ';' || out.back() == ':' ||
                          out.back() == '?' || out.back() == ' ')) {
    out.pop_back();
  }
  if (out.empty()) return out;
  if (out.back() != '.' && out.back() != '!') out += '.';
  return text::CapitalizeFirst(out);
}

// Folds do-support into the first verb of `tokens`: "does NOT mention" ->
// "NOT mentions". Returns false when no do-auxiliary was found.
bool FoldDoSupport(std::vector<std::string>& tokens) {
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string aux = BareForm(tokens[i]);
    if (aux != "do" && aux != "does" && aux != "did") continue;
    size_t v = i + 1;
    while (v < tokens.size() && (BareForm(tokens[v]) == "not" || BareForm(tokens[v]) == "never")) {
      ++v;
    }
    if (v >= tokens.size()) return false;
    if (aux == "does") {
      tokens[v] = lexicon::ThirdPersonSingular(tokens[v]);
    } else if (aux == "did") {
      auto past = lexicon::RegularPast(tokens[v]);
      if (!past) return false;  // keep "did <verb>"
      tokens[v] = *past;
    }
    tokens.erase(tokens.begin() + static_cast<std::ptrdiff_t>(i));
    return true;
  }
  return false;
}

bool IsAdverbialWh(std::string_view wh) {
  return wh == "how" || wh == "when" || wh == "where" || wh == "why";
}

// Preposition placed before a clause-final answer.
std::string AdverbialPrefix(const WhAnalysis& a, std::string_view normalized_answer) {
  if (!a.leading_preposition.empty()) return a.leading_preposition + " ";
  std::vector<std::string> words = text::SplitWhitespace(normalized_answer);
  if (words.empty()) return "";
  const std::string first = text::ToLower(words[0]);
  if (a.wh_word == "why") {
    for (std::string_view w : {"because", "since", "as", "to", "so", "for", "in", "due"}) {
      if (first == w) return "";
    }
    return "because ";
  }
  if (a.wh_word == "how" && a.wh_complement.empty()) {
    if (lexicon::IsPreposition(first)) return "";
    if (first.size() > 4 &&
        (first.ends_with("ing") || first.ends_with("es") || first.ends_with("ed"))) {
      return "by ";
    }
  }
  return "";
}

std::optional<std::string> ApplyWhichTrue(std::string_view question, std::string_view answer) {
  static const std::regex kPattern(
      R"(^\s*which\s+of\s+the\s+following(\s+statements?)?\s+(is|are)\s+((not\s+)?(true|false|correct|incorrect|right|wrong))\b)",
      std::regex::icase);
  std::cmatch m;
  const std::string q(question);
  if (!std::regex_search(q.c_str(), m, kPattern)) return std::nullopt;
  std::string subject = StripTerminalPunct(answer);
  if (subject.empty()) return std::nullopt;
  return FinishSentence(text::CapitalizeFirst(subject) + " is " + m[3].str());
}

std::optional<std::string> ApplyCopulaWh(const WhAnalysis& a, std::string_view question,
                                         std::string_view answer) {
  if (a.wh_word.empty() || !a.auxiliary) return std::nullopt;
  if (a.contracted_copula) {
    if (!a.subject_span) return std::nullopt;
    return FinishSentence(*a.subject_span + *a.auxiliary + " " +
                          NormalizeAnswer(answer, question));
  }
  if ((a.wh_word != "what" && a.wh_word != "who") || !a.wh_complement.empty() ||
      !a.leading_preposition.empty() || !a.subject_span) {
    return std::nullopt;
  }
  const std::string copula = text::ToLower(*a.auxiliary);
  if (copula != "is" && copula != "are" && copula != "was" && copula != "were") {
    return std::nullopt;
  }
  // "What is the boy doing?" is a progressive, not an identity question.
  if (a.body_span) {
    std::vector<std::string> body = text::SplitWhitespace(*a.body_span);
    std::string first = BareForm(body.front());
    if (first.size() > 4 && first.ends_with("ing")) return std::nullopt;
  }
  std::string rest = *a.subject_span;
  if (a.body_span) rest += " " + *a.body_span;
  std::vector<std::string> tokens = text::SplitWhitespace(rest);
  FoldDoSupport(tokens);
  return FinishSentence(text::CapitalizeFirst(AnswerCore(answer)) + " " + *a.auxiliary + " " +
                        text::Join(tokens, " "));
}

std::optional<std::string> ApplyWhAuxSubject(const WhAnalysis& a, std::string_view question,
                                             std::string_view answer) {
  if (a.wh_word.empty() || a.contracted_copula) return std::nullopt;
  const std::string core = AnswerCore(answer);
  std::vector<std::string> body =
      a.body_span ? text::SplitWhitespace(*a.body_span) : std::vector<std::string>{};

  // Subject questions: the answer takes the place of the wh phrase.
  if (!a.subject_span) {
    if (body.empty()) return std::nullopt;
    std::string head;
    if (a.wh_word == "what" || a.wh_word == "which" || a.wh_word == "who" ||
        a.wh_word == "whom" || a.wh_word == "whose") {
      head = text::CapitalizeFirst(core);
    } else if (a.wh_word == "how" && !a.wh_complement.empty()) {
      std::vector<std::string> comp = text::SplitWhitespace(a.wh_complement);
      const std::string q = text::ToLower(comp.front());
      if ((q != "many" && q != "much") || comp.size() < 2) return std::nullopt;
      comp.erase(comp.begin());
      head = text::CapitalizeFirst(core) + " " + text::Join(comp, " ");
    } else {
      return std::nullopt;
    }
    std::string aux = a.auxiliary ? *a.auxiliary + " " : "";
    return FinishSentence(head + " " + aux + text::Join(body, " "));
  }

  if (!a.auxiliary) return std::nullopt;
  const std::string aux_lower = BareForm(*a.auxiliary);
  const auto kind = lexicon::Auxiliary(aux_lower);
  if (!kind) return std::nullopt;

  // Predicate with the auxiliary folded back in. `verb_index` is the
  // position of the main verb within `pred`.
  std::vector<std::string> pred;
  size_t verb_index = 0;
  if (*kind == AuxKind::kDo && !lexicon::IsNegatedAuxiliary(aux_lower)) {
    if (body.empty()) return std::nullopt;
    size_t v = 0;
    while (v + 1 < body.size() && lexicon::IsPreverbalAdverb(BareForm(body[v]))) ++v;
    pred = body;
    verb_index = v;
    if (aux_lower == "does") {
      pred[v] = lexicon::ThirdPersonSingular(pred[v]);
    } else if (aux_lower == "did") {
      if (auto past = lexicon::RegularPast(pred[v])) {
        pred[v] = *past;
      } else {
        pred.insert(pred.begin(), *a.auxiliary);
        ++verb_index;
      }
    }
  } else {
    pred.push_back(*a.auxiliary);
    pred.insert(pred.end(), body.begin(), body.end());
    verb_index = body.empty() ? 0 : 1;
  }

  const std::string normalized = NormalizeAnswer(answer, question);
  std::vector<std::string> clause = text::SplitWhitespace(*a.subject_span);
  clause.front() = text::CapitalizeFirst(clause.front());

  const bool adverbial = IsAdverbialWh(a.wh_word) || !a.leading_preposition.empty();
  const bool stranded_prep = !body.empty() && lexicon::IsPreposition(BareForm(body.back()));
  if (adverbial || body.empty() || stranded_prep) {
    clause.insert(clause.end(), pred.begin(), pred.end());
    std::string prefix = adverbial ? AdverbialPrefix(a, normalized) : "";
    return FinishSentence(text::Join(clause, " ") + " " + prefix + normalized);
  }
  // Object questions: the answer fills the slot right after the main verb.
  pred.insert(pred.begin() + static_cast<std::ptrdiff_t>(verb_index + 1), normalized);
  clause.insert(clause.end(), pred.begin(), pred.end());
  return FinishSentence(text::Join(clause, " "));
}

}  // namespace

std::string AnswerCore(std::string_view answer) {
  std::string_view s = text::Trim(answer);
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!IsTerminalPunct(s[i])) continue;
    size_t end = i + 1;
    while (end < s.size() && IsTerminalPunct(s[end])) ++end;
    if (end < s.size() && !IsSpace(s[end])) continue;
    if (s[i] == '.') {
      size_t word_start = s.find_last_of(" \t\n", i);
      word_start = word_start == std::string_view::npos ? 0 : word_start + 1;
      if (IsAbbreviation(s.substr(word_start, end - word_start))) continue;
    }
    std::string segment = StripTerminalPunct(s.substr(start, end - start));
    if (!segment.empty()) return segment;
    start = end;
    i = end - 1;
  }
  return StripTerminalPunct(s.substr(start));
}

std::string NormalizeAnswer(std::string_view answer, std::string_view question) {
  std::string core = AnswerCore(answer);
  if (core.empty()) return core;
  std::vector<std::string> words = text::SplitWhitespace(core);
  if (LooksLikeProperNoun(words.front(), question)) return core;
  return text::LowercaseFirst(core);
}

std::optional<std::string> FillBlank(std::string_view question, std::string_view answer) {
  size_t blank = question.find('_');
  if (blank == std::string_view::npos) return std::nullopt;
  size_t blank_end = blank;
  while (blank_end < question.size() && question[blank_end] == '_') ++blank_end;
  std::string filled(question.substr(0, blank));
  filled += ' ';
  filled += NormalizeAnswer(answer, question);
  filled += ' ';
  filled += question.substr(blank_end);
  std::string out = FinishSentence(filled);
  if (out.empty() || out.find('?') != std::string::npos) return std::nullopt;
  return out;
}

ConversionOutcome ConvertRule(std::string_view question, std::string_view answer) {
  const WhAnalysis a = AnalyzeQuestion(question);
  if (a.is_multi_clause) return ConversionOutcome::Failure(FailureReason::kMultiClause);
  if (AnswerCore(answer).empty()) return ConversionOutcome::Failure(FailureReason::kEmptyAnswer);
  std::string_view trimmed = text::Trim(answer);
  if (trimmed.back() == '?') return ConversionOutcome::Failure(FailureReason::kAnswerIsQuestion);

  std::optional<std::string> out;
  if (a.is_fitb) {
    out = FillBlank(question, answer);
  } else if ((out = ApplyWhichTrue(question, answer))) {
  } else if ((out = ApplyCopulaWh(a, question, answer))) {
  } else {
    out = ApplyWhAuxSubject(a, question, answer);
  }
  if (!out || out->empty() || out->find('?') != std::string::npos) {
    return ConversionOutcome::Failure(FailureReason::kNoRuleMatched);
  }
  return ConversionOutcome::Success(std::move(*out));
}

}  // namespace mcnli
