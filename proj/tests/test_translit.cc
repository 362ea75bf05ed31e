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

#include "avanegar/translit.h"

#include "avanegar/errors.h"
#include "doctest.h"

using avanegar::G2pError;
using avanegar::IsShortVowel;
using avanegar::LetterClass;
using avanegar::TranslitTable;

TEST_CASE("built-in table matches the bundled romanization") {
  const TranslitTable& t = TranslitTable::BuiltIn();
  CHECK(t.BasePhoneme(0x06AF, LetterClass::kConsonant) == 'g');   // گ
  CHECK(t.BasePhoneme(0x0631, LetterClass::kConsonant) == 'r');   // ر
  CHECK(t.BasePhoneme(0x0646, LetterClass::kConsonant) == 'n');   // ن
  CHECK(t.BasePhoneme(0x0627, LetterClass::kLongVowelA) == 'A');  // ا
  CHECK(t.BasePhoneme(0x0622, LetterClass::kLongVowelA) == 'A');  // آ
  CHECK(t.BasePhoneme(0x0648, LetterClass::kConsonant) == 'v');   // و
  CHECK(t.BasePhoneme(0x0648, LetterClass::kLongVowelU) == 'u');
  CHECK(t.BasePhoneme(0x06CC, LetterClass::kConsonant) == 'y');   // ی
  CHECK(t.BasePhoneme(0x06CC, LetterClass::kLongVowelI) == 'i');
}

TEST_CASE("built-in table is total over the supported alphabet") {
  const TranslitTable& t = TranslitTable::BuiltIn();
  for (const auto& info : avanegar::SupportedLetters()) {
    if (info.cls == LetterClass::kConsonant || info.ambiguous) {
      const char p = t.BasePhoneme(info.codepoint, LetterClass::kConsonant);
      CHECK_FALSE(IsShortVowel(p));
    }
    if (info.cls != LetterClass::kConsonant) {
      const char p = t.BasePhoneme(info.codepoint, info.cls);
      CHECK_FALSE(IsShortVowel(p));
    }
  }
}

TEST_CASE("roles a letter cannot take are rejected") {
  const TranslitTable& t = TranslitTable::BuiltIn();
  CHECK_THROWS_AS(t.BasePhoneme(0x0628, LetterClass::kLongVowelA),  // ب
                  std::invalid_argument);
  CHECK_THROWS_AS(t.BasePhoneme(0x0627, LetterClass::kConsonant),  // ا
                  std::invalid_argument);
}

TEST_CASE("table parser rejects malformed input") {
  CHECK_THROWS_AS(TranslitTable::FromText("ب\tconsonant\n"), G2pError);
  CHECK_THROWS_AS(TranslitTable::FromText("ب\tvowel\tb\n"), G2pError);
  CHECK_THROWS_AS(TranslitTable::FromText("ب\tconsonant\ta\n"),
                  G2pError);  // short vowel as anchor
  CHECK_THROWS_AS(TranslitTable::FromText("xx\tconsonant\tb\n"), G2pError);
  // A valid row, but an incomplete table.
  CHECK_THROWS_AS(TranslitTable::FromText("ب\tconsonant\tb\n"), G2pError);
}
