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

// Closed-class word lists and a small verb lexicon used by the question
// analyzer and the rule converter. All lookups take lowercase words.

#ifndef MCNLI_SRC_LEXICON_H_
#define MCNLI_SRC_LEXICON_H_

#include <optional>
#include <string>
#include <string_view>

namespace mcnli::lexicon {

enum class AuxKind { kDo, kBe, kHave, kModal };

// do/does/did, is/are/was/were, has/have/had, and the modals. Negative
// contractions ("didn't") are recognized too.
std::optional<AuxKind> Auxiliary(std::string_view lower);
bool IsNegatedAuxiliary(std::string_view lower);

bool IsWhWord(std::string_view lower);
bool IsPreposition(std::string_view lower);
bool IsDeterminer(std::string_view lower);  // articles, possessives, demonstratives, quantifiers
bool IsSubjectPronoun(std::string_view lower);
bool IsConjunction(std::string_view lower);
// Adverbs that may sit between an auxiliary's subject and the main verb.
bool IsPreverbalAdverb(std::string_view lower);

// Base-form verbs from a fixed list of common English verbs.
bool IsBaseVerb(std::string_view lower);
bool IsIrregularVerb(std::string_view lower);
// Irregular past participles and simple pasts: "born", "taken", "went".
bool IsIrregularVerbForm(std::string_view lower);

// Third-person singular present: have -> has, watch -> watches, cry -> cries.
std::string ThirdPersonSingular(std::string_view verb);
// Regular "+ed" past tense, or nullopt when the verb is irregular or the
// spelling (consonant doubling) cannot be derived safely.
std::optional<std::string> RegularPast(std::string_view verb);

}  // namespace mcnli::lexicon

#endif  // MCNLI_SRC_LEXICON_H_
