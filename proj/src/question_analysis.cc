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

#include "mcnli/question_analysis.h"

#include <array>
#include <vector>

#include "lexicon.h"
#include "mcnli/text.h"
#include "question_tokens.h"

namespace mcnli {
namespace {

using lexicon::AuxKind;

// ---------------------------------------------------------------------------
// MultiRC rule table. Prefixes are case-sensitive; suffixes are not.

struct MultiRcRow {
  MultiRcType type;
  std::vector<std::string_view> prefixes;
  std::vector<std::string_view> suffixes;
};

const std::vector<MultiRcRow>& MultiRcRows() {
  static const std::vector<MultiRcRow> rows = {
      {MultiRcType::kWhat, {"What", "In what", "With what", "To what"}, {"what?"}},
      {MultiRcType::kWho,
       {"Who", "Whom", "With whom", "From whom", "For whom"},
       {"who?", "whom?"}},
      {MultiRcType::kHow, {"How"}, {}},
      {MultiRcType::kWhy, {"Why"}, {}},
      {MultiRcType::kAssertion,
       {"Could it", "Will ", "Was", "Were", "Has", "Have", "Does", "Would", "Did", "Had",
        "Is", "Are", "Do", "Can", "True or false"},
       {}},
      {MultiRcType::kWhich, {"Which", "In which"}, {}},
      {MultiRcType::kWhen, {"When"}, {}},
      {MultiRcType::kWhere, {"Where"}, {"where?"}},
  };
  return rows;
}

constexpr std::array<std::string_view, 8> kDoubleQuestionTriggers = {
    "and what", "and how", "and which", "and where",
    "and when", "and why", "and by whom", "if not, what?"};

std::optional<MultiRcType> MatchMultiRcRows(std::string_view q) {
  for (const MultiRcRow& row : MultiRcRows()) {
    for (std::string_view p : row.prefixes) {
      if (q.starts_with(p)) return row.type;
    }
    for (std::string_view s : row.suffixes) {
      if (text::EndsWithIgnoreCase(q, s)) return row.type;
    }
  }
  return std::nullopt;
}

// "Approximately how much ..." -> "How much ...": drops one leading -ly
// adverb and capitalizes what follows.
std::optional<std::string> StripLeadingAdverb(std::string_view q) {
  size_t space = q.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  std::string first = text::ToLower(q.substr(0, space));
  if (first.size() < 4 || !first.ends_with("ly")) return std::nullopt;
  for (char c : first) {
    if (c < 'a' || c > 'z') return std::nullopt;
  }
  return text::CapitalizeFirst(text::Trim(q.substr(space + 1)));
}

// ---------------------------------------------------------------------------
// Wh-question parsing helpers.

bool ParticipleLike(std::string_view lower) {
  return (lower.size() > 4 && lower.ends_with("ing")) ||
         (lower.size() > 3 && lower.ends_with("ed")) || lexicon::IsIrregularVerbForm(lower);
}

// Any finite or base verb form we can recognize without a tagger.
bool VerbForm(std::string_view lower) {
  if (lexicon::IsBaseVerb(lower) || lexicon::IsIrregularVerbForm(lower)) return true;
  if (lower.size() > 4 && lower.ends_with("ed")) return true;
  if (lower.size() > 3 && lower.ends_with("ies") &&
      lexicon::IsBaseVerb(std::string(lower.substr(0, lower.size() - 3)) + "y")) {
    return true;
  }
  if (lower.size() > 2 && lower.ends_with("es") &&
      lexicon::IsBaseVerb(lower.substr(0, lower.size() - 2))) {
    return true;
  }
  return lower.size() > 2 && lower.ends_with("s") &&
         lexicon::IsBaseVerb(lower.substr(0, lower.size() - 1));
}

bool BlocksVerbReading(std::string_view prev_lower) {
  return lexicon::IsDeterminer(prev_lower) || lexicon::IsPreposition(prev_lower) ||
         prev_lower.ends_with("'s");
}

bool IsCapitalized(std::string_view token) {
  return !token.empty() && token[0] >= 'A' && token[0] <= 'Z';
}

bool LooksLikeSubjectStart(const QuestionToken& t) {
  return lexicon::IsSubjectPronoun(t.bare) || lexicon::IsDeterminer(t.bare) ||
         IsCapitalized(t.text);
}

bool DetectMultiClause(std::string_view question, const std::vector<QuestionToken>& toks) {
  if (text::CountChar(question, '?') > 1) return true;
  if (text::ContainsIgnoreCase(question, "if not, what")) return true;
  for (size_t i = 1; i + 1 < toks.size(); ++i) {
    if (!lexicon::IsConjunction(toks[i].bare)) continue;
    const QuestionToken& next = toks[i + 1];
    if (lexicon::IsWhWord(next.bare)) return true;
    if (i + 2 < toks.size()) {
      if (lexicon::IsPreposition(next.bare) && lexicon::IsWhWord(toks[i + 2].bare)) return true;
      if (lexicon::Auxiliary(next.bare) && LooksLikeSubjectStart(toks[i + 2])) return true;
    }
  }
  return false;
}

// Noun-phrase guess used when no verb marks the end of the subject.
size_t GuessSubjectLength(const std::vector<QuestionToken>& rest) {
  if (rest.empty()) return 0;
  if (lexicon::IsSubjectPronoun(rest[0].bare)) return 1;
  size_t n = 1;
  if (lexicon::IsDeterminer(rest[0].bare)) {
    n = std::min<size_t>(2, rest.size());
  } else if (IsCapitalized(rest[0].text)) {
    while (n < rest.size() && IsCapitalized(rest[n].text)) ++n;
  }
  // possessive chains: "the man's wife", "Air New Zealand's video partner"
  while (n < rest.size() && rest[n - 1].bare.ends_with("'s")) ++n;
  return n;
}

// Index where the predicate starts within `rest` (the tokens after the
// auxiliary), or rest.size() when the whole remainder is the subject.
size_t FindBodyStart(AuxKind kind, const std::vector<QuestionToken>& rest) {
  for (size_t i = 1; i < rest.size(); ++i) {
    if (BlocksVerbReading(rest[i - 1].bare)) continue;
    const std::string& w = rest[i].bare;
    if (kind == AuxKind::kBe || kind == AuxKind::kHave) {
      if (ParticipleLike(w)) return i;
      continue;
    }
    bool verb = lexicon::IsBaseVerb(w) || (w.size() > 4 && w.ends_with("ed"));
    if (verb) return i;
    if (lexicon::IsPreverbalAdverb(w) && i + 1 < rest.size() &&
        lexicon::IsBaseVerb(rest[i + 1].bare)) {
      return i;
    }
  }
  if (kind == AuxKind::kBe || kind == AuxKind::kHave) return rest.size();
  return GuessSubjectLength(rest);
}

bool StartsPredicate(AuxKind kind, std::string_view lower) {
  switch (kind) {
    case AuxKind::kBe:
    case AuxKind::kHave:
      return ParticipleLike(lower);
    case AuxKind::kModal:
      return lexicon::IsBaseVerb(lower);
    case AuxKind::kDo:
      return false;
  }
  return false;
}

std::string JoinTokens(const std::vector<QuestionToken>& toks, size_t b, size_t e) {
  std::string out;
  for (size_t i = b; i < e; ++i) {
    if (i > b) out += ' ';
    out += toks[i].text;
  }
  return out;
}

}  // namespace

CategorySet CategorizeRace(std::string_view question, std::string_view passage) {
  CategorySet set;
  for (std::string_view w : {"mainly", "title", "purpose", "topic"}) {
    if (text::ContainsWord(question, w)) set.Set(RaceFlag::kMainIdea);
  }
  if (text::ContainsWord(question, "not") || text::ContainsWord(question, "except") ||
      text::ContainsIgnoreCase(question, "which of the following is wrong")) {
    set.Set(RaceFlag::kNegation);
  }
  if (text::CountChar(passage, '"') > 10) set.Set(RaceFlag::kDialogue);
  for (std::string_view p : {"how many", "how old", "how much"}) {
    if (text::ContainsIgnoreCase(question, p)) set.Set(RaceFlag::kMath);
  }
  if (text::ContainsWord(question, "true")) set.Set(RaceFlag::kDeductive);
  if (question.find('_') != std::string_view::npos) set.Set(RaceFlag::kFitb);
  return set;
}

MultiRcType CategorizeMultiRc(std::string_view question) {
  std::string_view q = text::Trim(question);
  for (std::string_view trigger : kDoubleQuestionTriggers) {
    if (text::ContainsIgnoreCase(q, trigger)) return MultiRcType::kDoubleQuestions;
  }
  if (text::CountChar(q, '?') > 1) return MultiRcType::kDoubleQuestions;
  if (auto type = MatchMultiRcRows(q)) return *type;
  if (auto stripped = StripLeadingAdverb(q)) {
    if (auto type = MatchMultiRcRows(*stripped)) return *type;
  }
  return MultiRcType::kUncategorized;
}

WhAnalysis AnalyzeQuestion(std::string_view question) {
  WhAnalysis a;
  std::string_view q = text::Trim(question);
  a.is_fitb = q.find('_') != std::string_view::npos;
  if (!q.empty()) {
    switch (q.back()) {
      case '?':
        a.terminal = Terminal::kQuestionMark;
        break;
      case '.':
        a.terminal = Terminal::kPeriod;
        break;
      case '_':
        a.terminal = Terminal::kBlank;
        break;
      default:
        a.terminal = Terminal::kOther;
    }
    // "The sky is _ ." ends in the blank; the dot is decoration.
    const size_t last = q.find_last_not_of(" .");
    if (last != std::string_view::npos && q[last] == '_') a.terminal = Terminal::kBlank;
  }

  std::vector<QuestionToken> toks = TokenizeQuestion(q);
  a.is_multi_clause = DetectMultiClause(q, toks);
  if (a.is_fitb || toks.empty()) return a;

  if (lexicon::Auxiliary(toks[0].bare)) {
    a.starts_with_auxiliary = true;
    a.auxiliary = toks[0].text;
    return a;
  }

  // Locate the wh word, allowing one leading preposition ("In what year").
  size_t w = 0;
  if (toks.size() > 1 && lexicon::IsPreposition(toks[0].bare) &&
      (toks[1].bare == "what" || toks[1].bare == "which" || toks[1].bare == "whom" ||
       toks[1].bare == "whose")) {
    a.leading_preposition = toks[0].bare;
    w = 1;
  }

  // Contracted copula: "What's the best title of the passage?"
  if (w == 0) {
    const std::string& b = toks[0].bare;
    size_t apos = b.find('\'');
    if (apos != std::string::npos && b.substr(apos) == "'s" &&
        lexicon::IsWhWord(b.substr(0, apos))) {
      a.wh_word = b.substr(0, apos);
      a.wh_phrase = toks[0].text.substr(0, apos);
      a.auxiliary = toks[0].text.substr(apos);
      a.contracted_copula = true;
      if (toks.size() > 1) a.subject_span = JoinTokens(toks, 1, toks.size());
      return a;
    }
  }

  if (w >= toks.size() || !lexicon::IsWhWord(toks[w].bare)) return a;
  a.wh_word = toks[w].bare;

  // Extend the wh phrase over its complement ("How often", "What building",
  // "Which of the following") up to the auxiliary.
  size_t aux_index = toks.size();
  size_t complement_end = w + 1;
  const bool takes_complement = a.wh_word == "what" || a.wh_word == "which" ||
                                a.wh_word == "whose" || a.wh_word == "how";
  if (takes_complement) {
    for (size_t j = w + 1; j < toks.size() && j <= w + 6; ++j) {
      if (lexicon::Auxiliary(toks[j].bare)) {
        aux_index = j;
        break;
      }
      bool prev_blocks = j > w + 1 && BlocksVerbReading(toks[j - 1].bare);
      // "What influence did ..." : a verb-looking word right before the
      // auxiliary is a noun.
      bool before_aux = j + 1 < toks.size() && lexicon::Auxiliary(toks[j + 1].bare);
      if (toks[j].bare == "that" || toks[j].bare == "who" ||
          (!prev_blocks && !before_aux && VerbForm(toks[j].bare))) {
        break;
      }
      complement_end = j + 1;
    }
    if (aux_index == toks.size()) {
      // No auxiliary: subject question such as "Which team won the game?".
      // The complement is only kept when it stops right before a verb.
      if (complement_end >= toks.size()) complement_end = w + 1;
    } else {
      complement_end = aux_index;
    }
  } else if (w + 1 < toks.size() && lexicon::Auxiliary(toks[w + 1].bare)) {
    aux_index = w + 1;
  }

  a.wh_phrase = JoinTokens(toks, 0, complement_end);
  if (complement_end > w + 1) a.wh_complement = JoinTokens(toks, w + 1, complement_end);

  if (aux_index == toks.size()) {
    if (complement_end < toks.size()) a.body_span = JoinTokens(toks, complement_end, toks.size());
    return a;
  }

  a.auxiliary = toks[aux_index].text;
  const AuxKind kind = *lexicon::Auxiliary(toks[aux_index].bare);
  std::vector<QuestionToken> rest(toks.begin() + aux_index + 1, toks.end());
  if (rest.empty()) return a;

  if (StartsPredicate(kind, rest[0].bare)) {
    a.body_span = JoinTokens(rest, 0, rest.size());
    return a;
  }
  size_t body = FindBodyStart(kind, rest);
  a.subject_span = JoinTokens(rest, 0, body);
  if (body < rest.size()) a.body_span = JoinTokens(rest, body, rest.size());
  return a;
}

}  // namespace mcnli
