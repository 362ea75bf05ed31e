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

#ifndef AVANEGAR_TRANSLIT_H_
#define AVANEGAR_TRANSLIT_H_

#include <string>
#include <string_view>
#include <unordered_map>

#include "avanegar/persian.h"

namespace avanegar {

// Written-out short vowels, the only material an analogy pattern
// transplants into an input word.
inline bool IsShortVowel(char p) { return p == 'a' || p == 'e' || p == 'o'; }

// Letter → base phoneme table. Phoneme symbols are single ASCII characters
// (one symbol per phoneme throughout the engine); anchor symbols may not
// collide with the short vowels a/e/o. The table is data: a TSV with
// columns letter / role / phoneme, role ∈ {consonant, vowel}, '#' comment
// lines. The repo bundles one romanization (data/translit.tsv), compiled
// in as the default; alternates load at runtime.
class TranslitTable {
 public:
  static const TranslitTable& BuiltIn();
  static TranslitTable FromText(std::string_view tsv,
                                std::string_view origin = "<builtin>");
  static TranslitTable FromFile(const std::string& path);

  // Base phoneme of `letter` read in `role`. Role kConsonant selects the
  // consonant reading; any vowel class selects the long-vowel reading.
  // Throws std::invalid_argument for a combination the table cannot have
  // (callers guarantee role-compatibility).
  char BasePhoneme(char32_t letter, LetterClass role) const;

 private:
  std::unordered_map<char32_t, char> consonant_;
  std::unordered_map<char32_t, char> vowel_;
};

}  // namespace avanegar

#endif  // AVANEGAR_TRANSLIT_H_
