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
// The pattern dictionary: loading, phoneme/grapheme alignment, and the
// structural-code index used for retrieval.

#ifndef AVANEGAR_LEXICON_H_
#define AVANEGAR_LEXICON_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "avanegar/persian.h"
#include "avanegar/translit.h"

namespace avanegar {

// One grapheme's slice of a phonetic string: the anchor phoneme the letter
// itself stands for, the role it was read in, and any short vowels written
// after it.
struct AlignedSlot {
  char anchor;
  LetterClass role;
  std::string trailing;  // short vowels only
};

// Per-grapheme decomposition of an entry's phonetic. Reassembling prefix +
// anchor_i + trailing_i in order reproduces the phonetic byte-for-byte.
struct AlignedPhonetic {
  std::string prefix;  // short vowels before the first anchor
  std::vector<AlignedSlot> slots;

  std::string Reassemble() const;
};

// Greedy left-to-right anchoring of `phonetic` against the graphemes of
// `surface`: each grapheme's base phoneme (vowel reading tried first for
// و/ی) must appear in order; everything between anchors must be short
// vowels. Throws G2pError(kAlignmentFailure) naming the surface and the
// failing position.
AlignedPhonetic AlignPhonetic(const NormalizedWord& surface,
                              std::string_view phonetic,
                              const TranslitTable& table);

// Structural code implied by an alignment: و/ی take their vowel digit when
// anchored in vowel role and 7 when anchored as consonants.
StructuralCode CodeFromAlignment(const AlignedPhonetic& aligned);

struct LexiconEntry {
  NormalizedWord surface;
  StructuralCode code;  // derived from the aligned roles
  std::string phonetic;
  AlignedPhonetic aligned;
  std::string gram_kind;  // stored and surfaced, consumed by no operation
  std::uint64_t frequency = 0;
};

struct LoadReport {
  struct Reject {
    std::size_t line;     // 1-based line number in the source
    std::string content;  // the raw row
    std::string reason;
  };
  std::size_t accepted = 0;
  std::vector<Reject> rejected;
};

// Immutable after load; concurrent readers need no synchronization.
class Lexicon {
 public:
  // Reads the TSV format: surface \t phonetic \t gram_kind [\t frequency],
  // '#' comment lines and blank lines ignored, UTF-8 only. Invalid rows
  // are rejected row-by-row (reported via `report`), never fatal; a
  // duplicate (surface, phonetic) keeps the first occurrence. Entries are
  // stored in a stable global order: frequency descending, then surface
  // code point order, then phonetic, which fixes every downstream
  // tie-break.
  static Lexicon Load(std::istream& in, const TranslitTable& table,
                      LoadReport* report = nullptr);
  static Lexicon LoadFile(const std::string& path, const TranslitTable& table,
                          LoadReport* report = nullptr);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Entry ids (indices into entries()) whose code equals `code`, in stable
  // order; empty span when the bucket does not exist.
  std::span<const std::uint32_t> Bucket(const StructuralCode& code) const;

  // Codes with at least one entry, in stable entry order of first use.
  std::vector<StructuralCode> Codes() const;

  // Copy of this lexicon with one entry removed (leave-one-out support).
  Lexicon Without(std::uint32_t entry_id) const;

 private:
  void BuildIndex();

  std::vector<LexiconEntry> entries_;
  std::unordered_map<StructuralCode, std::vector<std::uint32_t>> by_code_;
};

}  // namespace avanegar

#endif  // AVANEGAR_LEXICON_H_
