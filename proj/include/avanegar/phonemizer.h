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
// Output assembly: transplant the selected pattern's short vowels into the
// input word's own phoneme skeleton, and the end-to-end pipeline.

#ifndef AVANEGAR_PHONEMIZER_H_
#define AVANEGAR_PHONEMIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "avanegar/fraction.h"
#include "avanegar/lexicon.h"
#include "avanegar/persian.h"
#include "avanegar/translit.h"

namespace avanegar {

// pattern.prefix + (input base phoneme_i + pattern.trailing_i) over all
// slots: the pattern contributes only its short vowels, the input word
// contributes every anchor. Requires pattern.code == role_code and equal
// lengths (kLengthMismatch otherwise).
std::string Splice(const NormalizedWord& input, const StructuralCode& role_code,
                   const LexiconEntry& pattern, const TranslitTable& table);

// Base phonemes under the default (vowel-preferred) roles, no short
// vowels; the degraded output used when no pattern matches.
std::string ConsonantSkeleton(const NormalizedWord& word,
                              const TranslitTable& table);

struct PhonemizeOptions {
  bool skeleton_fallback = false;  // degrade instead of NoCandidates
  int ambiguity_cap = kAmbiguityCapDefault;
};

struct PatternAlternative {
  std::string pattern;   // pattern surface
  std::string phonetic;  // input spliced with this pattern
  Fraction s;
};

struct PhonemizationResult {
  std::string word;      // normalized input surface
  std::string phonetic;  // final phoneme string
  std::string pattern;   // chosen pattern surface (empty when degraded)
  std::string pattern_phonetic;
  StructuralCode code;   // role code the selection was made under
  Fraction s;
  bool homograph = false;
  bool degraded = false;  // consonant-skeleton fallback was used
  std::vector<PatternAlternative> alternatives;
};

// normalize → candidate codes → retrieval → scoring → selection → splice.
// Pure function of (lexicon, table, input); safe for concurrent use over
// a shared lexicon.
class Phonemizer {
 public:
  Phonemizer(const Lexicon& lex, const TranslitTable& table)
      : lex_(&lex), table_(&table) {}

  // Throws G2pError: kEmptyWord, kUnsupportedCharacter,
  // kTooManyAmbiguities, kNoCandidates (unless skeleton_fallback).
  PhonemizationResult Phonemize(std::string_view raw,
                                const PhonemizeOptions& opts = {}) const;

  const Lexicon& lexicon() const { return *lex_; }
  const TranslitTable& table() const { return *table_; }

 private:
  const Lexicon* lex_;
  const TranslitTable* table_;
};

}  // namespace avanegar

#endif  // AVANEGAR_PHONEMIZER_H_
