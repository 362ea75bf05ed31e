// Copyright (c) 2026 The Avanegar Authors
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
//
// Persian letter handling: normalization of raw input to the canonical
// letter set, structural classification (consonant vs written long vowel),
// and the per-letter structural code a word is indexed by.

#ifndef AVANEGAR_PERSIAN_H_
#define AVANEGAR_PERSIAN_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avanegar {

// Written long vowels are the only vowels Persian orthography carries;
// everything else in the supported set is a consonant.
enum class LetterClass {
  kConsonant,
  kLongVowelA,  // ا آ
  kLongVowelI,  // ی
  kLongVowelU,  // و
};

// One normalized letter. `ambiguous` marks و and ی, which act either as a
// long vowel or as a consonant (v/y) depending on the word.
struct Grapheme {
  char32_t codepoint;
  LetterClass cls;  // default (vowel-preferred) class
  bool ambiguous;
};

// A word after normalization, in logical reading order.
struct NormalizedWord {
  std::vector<Grapheme> graphemes;
  std::string surface;  // normalized UTF-8 text

  std::size_t size() const { return graphemes.size(); }
};

// Digit string over {7,1,2,3}, one digit per grapheme: 7 consonant,
// 1 long vowel ا/آ, 2 long vowel ی, 3 long vowel و.
using StructuralCode = std::string;

inline constexpr char kConsonantDigit = '7';

// Cap on ambiguous (و/ی) letters per word when enumerating alternative
// codes; 2^4 = 16 lookups worst case.
inline constexpr int kAmbiguityCapDefault = 4;

struct LetterInfo {
  char32_t codepoint;
  LetterClass cls;
  bool ambiguous;
};

// The canonical post-normalization alphabet.
std::span<const LetterInfo> SupportedLetters();
bool IsSupportedLetter(char32_t cp);

// Normalizes raw text to the supported letter set: folds Arabic variant
// spellings (ي ى→ی, ك→ک, أ إ ٱ→ا, ة→ه), composes combining madda/hamza
// (ا+ٓ →آ, و+ٔ →ؤ, ی+ٔ →ئ), strips short-vowel diacritics, tatweel, ZWNJ
// and other invisible formatting marks, and trims surrounding whitespace.
// Throws G2pError: kEmptyWord when nothing remains, kUnsupportedCharacter
// (with the code point index in the input) for anything outside the set.
NormalizedWord Normalize(std::string_view raw);

// Default structural code: ambiguous letters take their vowel digit.
StructuralCode EncodeStructural(const NormalizedWord& word);

// All codes obtained by letting each ambiguous letter independently take
// its vowel digit or 7. Ordered deterministically with the vowel-preferred
// code first (ambiguous positions left-to-right as mask bits, 0 = vowel,
// masks ascending); always contains EncodeStructural(word). Throws
// kTooManyAmbiguities past the cap.
std::vector<StructuralCode> CandidateCodes(const NormalizedWord& word,
                                           int ambiguity_cap = kAmbiguityCapDefault);

char DigitFor(LetterClass cls);
LetterClass ClassForDigit(char digit);

}  // namespace avanegar

#endif  // AVANEGAR_PERSIAN_H_
