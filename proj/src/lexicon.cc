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

#include "lexicon.h"

#include <initializer_list>
#include <unordered_map>
#include <unordered_set>

#include "mcnli/text.h"

namespace mcnli::lexicon {
namespace {

using WordSet = std::unordered_set<std::string_view>;

WordSet MakeSet(std::initializer_list<std::string_view> words) { return WordSet(words); }

const WordSet& WhWords() {
  static const WordSet s = MakeSet(
      {"what", "who", "whom", "whose", "when", "where", "why", "which", "how"});
  return s;
}

const WordSet& Prepositions() {
  static const WordSet s = MakeSet(
      {"about", "above", "across", "after",  "against", "along", "among", "around",
       "as",    "at",    "before", "behind", "below",   "beside", "between", "beyond",
       "by",    "despite", "down", "during", "except",  "for",   "from",   "in",
       "inside", "into", "like",   "near",   "of",      "off",   "on",     "onto",
       "out",   "outside", "over", "past",   "since",   "than",  "through", "throughout",
       "to",    "toward", "towards", "under", "until",  "up",    "upon",   "via",
       "with",  "within", "without"});
  return s;
}

const WordSet& Determiners() {
  static const WordSet s = MakeSet(
      {"the",  "a",    "an",    "this",  "that",  "these", "those", "my",
       "your", "his",  "her",   "its",   "our",   "their", "some",  "any",
       "many", "much", "most",  "each",  "every", "all",   "both",  "no",
       "several", "few", "more", "other", "another", "such", "one", "two", "three"});
  return s;
}

const WordSet& SubjectPronouns() {
  static const WordSet s = MakeSet(
      {"i", "you", "he", "she", "it", "we", "they", "this", "that", "these", "those",
       "there", "someone", "somebody", "everyone", "everybody", "anyone", "people"});
  return s;
}

const WordSet& PreverbalAdverbs() {
  static const WordSet s = MakeSet(
      {"not", "never", "really", "also", "ever", "still", "usually", "often", "always",
       "actually", "probably", "finally", "first", "mainly", "most", "just", "only",
       "sometimes", "eventually", "originally", "suddenly", "even", "already"});
  return s;
}

// Common English verbs in base form.
const WordSet& BaseVerbs() {
  static const WordSet s = MakeSet({
      "accept", "accompany", "achieve", "act", "add", "admire", "admit", "advise",
      "affect", "afford", "agree", "aim", "allow", "answer", "appear", "apply",
      "argue", "arrange", "arrive", "ask", "attack", "attend", "avoid", "bake",
      "base", "be", "bear", "beat", "become", "begin", "behave", "believe",
      "belong", "bend", "benefit", "bet", "bite", "blame", "blow", "borrow",
      "break", "breathe", "bring", "build", "burn", "buy", "call", "care",
      "carry", "catch", "cause", "celebrate", "change", "charge", "chase", "check",
      "choose", "clean", "climb", "close", "collect", "come", "compare", "complain",
      "complete", "concern", "consider", "contain", "continue", "control", "cook", "copy",
      "cost", "count", "cover", "create", "cross", "cry", "cut", "damage",
      "dance", "deal", "decide", "decrease", "defend", "deliver", "depend", "describe",
      "deserve", "design", "destroy", "develop", "die", "dig", "disagree", "disappear",
      "discover", "discuss", "dislike", "do", "draw", "dream", "dress", "drink",
      "drive", "drop", "earn", "eat", "encourage", "end", "enjoy", "enter",
      "escape", "expect", "experience", "explain", "express", "fail", "fall", "feed",
      "feel", "fight", "fill", "find", "finish", "fit", "fix", "fly",
      "follow", "forbid", "forget", "forgive", "form", "found", "freeze", "gain",
      "get", "give", "go", "graduate", "greet", "grow", "guess", "handle",
      "hang", "happen", "hate", "have", "hear", "help", "hide", "hire",
      "hit", "hold", "hope", "hurt", "identify", "ignore", "imagine", "improve",
      "include", "increase", "influence", "inform", "insist", "intend", "introduce", "invent",
      "invite", "involve", "join", "judge", "jump", "keep", "kill", "kiss",
      "know", "land", "last", "laugh", "lay", "lead", "learn", "leave",
      "lend", "let", "lie", "lift", "like", "listen", "live", "look",
      "lose", "love", "make", "manage", "marry", "matter", "mean", "measure",
      "meet", "mention", "mind", "miss", "move", "need", "notice", "obey",
      "offer", "open", "order", "organize", "own", "paint", "pass", "pay",
      "perform", "pick", "plan", "plant", "play", "point", "practice", "praise",
      "prefer", "prepare", "present", "prevent", "produce", "promise", "protect", "prove",
      "provide", "publish", "pull", "punish", "push", "put", "quit", "raise",
      "reach", "read", "realize", "receive", "recognize", "recommend", "reduce", "refer",
      "refuse", "regard", "regret", "relax", "remain", "remember", "remind", "remove",
      "rent", "repair", "repeat", "replace", "reply", "report", "represent", "require",
      "rescue", "respect", "respond", "rest", "return", "ride", "ring", "rise",
      "risk", "rob", "run", "save", "say", "search", "see", "seek",
      "seem", "sell", "send", "serve", "set", "settle", "shake", "share",
      "shine", "shoot", "shop", "shout", "show", "shut", "sing", "sink",
      "sit", "sleep", "slow", "smell", "smile", "solve", "speak", "spend",
      "spread", "stand", "start", "stay", "steal", "stick", "stop", "study",
      "succeed", "suffer", "suggest", "supply", "support", "suppose", "surprise", "survive",
      "swim", "take", "talk", "taste", "teach", "tear", "tell", "tend",
      "thank", "think", "throw", "touch", "train", "travel", "treat", "trust",
      "try", "turn", "understand", "use", "visit", "wait", "wake", "walk",
      "want", "warn", "wash", "watch", "wear", "win", "wish", "wonder",
      "work", "worry", "write",
  });
  return s;
}

// Irregular verbs (base forms); past tense is never derived for these.
const WordSet& IrregularVerbs() {
  static const WordSet s = MakeSet({
      "arise", "awake", "be", "bear", "beat", "become", "begin", "bend", "bet",
      "bind", "bite", "bleed", "blow", "break", "breed", "bring", "build", "burn",
      "burst", "buy", "cast", "catch", "choose", "cling", "come", "cost", "creep",
      "cut", "deal", "dig", "do", "draw", "dream", "drink", "drive", "eat",
      "fall", "feed", "feel", "fight", "find", "flee", "fling", "fly", "forbid",
      "forget", "forgive", "freeze", "get", "give", "go", "grind", "grow", "hang",
      "have", "hear", "hide", "hit", "hold", "hurt", "keep", "kneel", "know",
      "lay", "lead", "lean", "leap", "learn", "leave", "lend", "let", "lie",
      "light", "lose", "make", "mean", "meet", "mistake", "overcome", "pay", "prove",
      "put", "quit", "read", "rid", "ride", "ring", "rise", "run", "say",
      "see", "seek", "sell", "send", "set", "sew", "shake", "shed", "shine",
      "shoot", "show", "shrink", "shut", "sing", "sink", "sit", "sleep", "slide",
      "smell", "speak", "speed", "spell", "spend", "spill", "spin", "spit", "split",
      "spoil", "spread", "spring", "stand", "steal", "stick", "sting", "stink", "strike",
      "swear", "sweep", "swim", "swing", "take", "teach", "tear", "tell", "think",
      "throw", "understand", "undertake", "upset", "wake", "wear", "weep", "win", "wind",
      "withdraw", "write",
  });
  return s;
}

const WordSet& IrregularParticiples() {
  static const WordSet s = MakeSet({
      "been", "born", "borne", "beaten", "become", "begun", "bent", "bitten", "blown",
      "broken", "brought", "built", "bought", "caught", "chosen", "come", "done",
      "drawn", "drunk", "driven", "eaten", "fallen", "fed", "felt", "fought", "found",
      "flown", "forbidden", "forgotten", "forgiven", "frozen", "got", "gotten", "given",
      "gone", "grown", "hung", "had", "heard", "hidden", "held", "kept", "known",
      "laid", "led", "left", "lent", "lain", "lost", "made", "meant", "met",
      "paid", "proven", "ridden", "risen", "run", "said", "seen", "sold", "sent",
      "set", "shaken", "shot", "shown", "shut", "sung", "sunk", "sat", "slept",
      "spoken", "spent", "stood", "stolen", "stuck", "struck", "sworn", "swum", "taken",
      "taught", "torn", "told", "thought", "thrown", "understood", "woken", "worn", "won",
      "written", "able", "going", "supposed",
      // irregular simple past forms
      "ate", "began", "bit", "blew", "broke", "came", "chose", "drank", "drew",
      "drove", "flew", "forgot", "gave", "grew", "knew", "ran", "rang", "rode",
      "rose", "sang", "sank", "saw", "spoke", "stole", "swam", "threw", "took",
      "went", "woke", "wore", "wrote",
  });
  return s;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

std::optional<AuxKind> Auxiliary(std::string_view lower) {
  static const std::unordered_map<std::string_view, AuxKind> kAux = {
      {"do", AuxKind::kDo},         {"does", AuxKind::kDo},      {"did", AuxKind::kDo},
      {"don't", AuxKind::kDo},      {"doesn't", AuxKind::kDo},   {"didn't", AuxKind::kDo},
      {"is", AuxKind::kBe},         {"are", AuxKind::kBe},       {"was", AuxKind::kBe},
      {"were", AuxKind::kBe},       {"isn't", AuxKind::kBe},     {"aren't", AuxKind::kBe},
      {"wasn't", AuxKind::kBe},     {"weren't", AuxKind::kBe},   {"has", AuxKind::kHave},
      {"have", AuxKind::kHave},     {"had", AuxKind::kHave},     {"hasn't", AuxKind::kHave},
      {"haven't", AuxKind::kHave},  {"hadn't", AuxKind::kHave},  {"can", AuxKind::kModal},
      {"could", AuxKind::kModal},   {"will", AuxKind::kModal},   {"would", AuxKind::kModal},
      {"shall", AuxKind::kModal},   {"should", AuxKind::kModal}, {"may", AuxKind::kModal},
      {"might", AuxKind::kModal},   {"must", AuxKind::kModal},   {"can't", AuxKind::kModal},
      {"couldn't", AuxKind::kModal}, {"won't", AuxKind::kModal}, {"wouldn't", AuxKind::kModal},
      {"shouldn't", AuxKind::kModal},
  };
  auto it = kAux.find(lower);
  if (it == kAux.end()) return std::nullopt;
  return it->second;
}

bool IsNegatedAuxiliary(std::string_view lower) {
  return lower.size() > 3 && lower.substr(lower.size() - 3) == "n't";
}

bool IsWhWord(std::string_view lower) { return WhWords().contains(lower); }
bool IsPreposition(std::string_view lower) { return Prepositions().contains(lower); }
bool IsDeterminer(std::string_view lower) { return Determiners().contains(lower); }
bool IsSubjectPronoun(std::string_view lower) { return SubjectPronouns().contains(lower); }
bool IsConjunction(std::string_view lower) {
  return lower == "and" || lower == "or" || lower == "but";
}
bool IsPreverbalAdverb(std::string_view lower) { return PreverbalAdverbs().contains(lower); }
bool IsBaseVerb(std::string_view lower) { return BaseVerbs().contains(lower); }
bool IsIrregularVerb(std::string_view lower) { return IrregularVerbs().contains(lower); }
bool IsIrregularVerbForm(std::string_view lower) {
  return IrregularParticiples().contains(lower);
}

std::string ThirdPersonSingular(std::string_view verb) {
  const std::string lower = text::ToLower(verb);
  std::string out(verb);
  if (lower == "have") return out.substr(0, out.size() - 2) + "s";
  if (lower == "be") return out.substr(0, out.size() - 2) + "is";
  if (lower.empty()) return out;
  char last = lower.back();
  auto ends = [&](std::string_view suffix) {
    return lower.size() >= suffix.size() && lower.ends_with(suffix);
  };
  if (ends("s") || ends("sh") || ends("ch") || ends("x") || ends("z") || ends("o")) {
    return out + "es";
  }
  if (last == 'y' && lower.size() > 1 && !IsVowel(lower[lower.size() - 2])) {
    return out.substr(0, out.size() - 1) + "ies";
  }
  return out + "s";
}

std::optional<std::string> RegularPast(std::string_view verb) {
  const std::string lower = text::ToLower(verb);
  if (lower.size() < 2 || IsIrregularVerb(lower)) return std::nullopt;
  for (char c : lower) {
    if (c < 'a' || c > 'z') return std::nullopt;
  }
  std::string out(verb);
  const size_t n = lower.size();
  const char last = lower[n - 1];
  if (last == 'e') return out + "d";
  if (last == 'y') {
    if (IsVowel(lower[n - 2])) return out + "ed";
    return out.substr(0, n - 1) + "ied";
  }
  // consonant-vowel-consonant endings may double the final consonant
  // (stop -> stopped, but visit -> visited); we cannot tell which.
  if (!IsVowel(last) && last != 'w' && last != 'x' && IsVowel(lower[n - 2]) &&
      (n < 3 || !IsVowel(lower[n - 3]))) {
    return std::nullopt;
  }
  return out + "ed";
}

}  // namespace mcnli::lexicon
