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
// The candidate scorer: positional letter matches weighted so that written
// long vowels dominate (consonant weight 1, long-vowel weight = word
// length), normalized to a similarity in [0,1], plus ranking with
// homograph detection.

#ifndef AVANEGAR_SIMILARITY_H_
#define AVANEGAR_SIMILARITY_H_

#include <cstdint>
#include <vector>

#include "avanegar/fraction.h"
#include "avanegar/lexicon.h"
#include "avanegar/persian.h"

namespace avanegar {

// Positionwise letter-identity indicator, one 0/1 per grapheme. The
// letter comparison is an impulse on the code point difference n:
// ⌊e^{-|n|}⌋, which is 1 exactly when n = 0, i.e. the letters are
// identical after normalization (the equality form is what runs; the
// test suite asserts the equivalence exhaustively).
using MatchVector = std::vector<std::uint8_t>;

// Throws G2pError(kLengthMismatch) when sizes differ.
MatchVector MatchLetters(const NormalizedWord& input,
                         const NormalizedWord& pattern);

struct WeightVector {
  std::vector<std::int64_t> weights;  // 1 for consonant, L for long vowel
  std::int64_t total = 0;
};

// Weights follow `role_code`, not raw orthography, so an ambiguous letter
// weighs according to the role being scored.
WeightVector LetterWeights(const NormalizedWord& input,
                           const StructuralCode& role_code);

struct CandidateScore {
  std::uint32_t entry_id = 0;
  const LexiconEntry* entry = nullptr;
  MatchVector match;
  std::int64_t matched_weight = 0;  // Σ weight_i · match_i
  Fraction s;                       // matched_weight / total weight
};

// Requires entry.code == role_code (retrieval guarantees it).
CandidateScore ScoreCandidate(const NormalizedWord& input,
                              const StructuralCode& role_code,
                              const LexiconEntry& entry,
                              std::uint32_t entry_id);

struct Selection {
  CandidateScore best;
  bool homograph = false;  // top two similarities exactly equal
  std::vector<CandidateScore> alternatives;  // remaining, sorted
};

// Sorts by similarity descending (exact rational comparison), frequency
// descending, surface code point order, phonetic; the result does not
// depend on the input order. Throws G2pError(kNoCandidates) on empty
// input.
Selection RankAndSelect(std::vector<CandidateScore> scored);

}  // namespace avanegar

#endif  // AVANEGAR_SIMILARITY_H_
