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

#include "avanegar/phonemizer.h"

#include <stdexcept>

#include "avanegar/errors.h"
#include "avanegar/matcher.h"
#include "avanegar/similarity.h"

namespace avanegar {

std::string Splice(const NormalizedWord& input, const StructuralCode& role_code,
                   const LexiconEntry& pattern, const TranslitTable& table) {
  if (input.size() != role_code.size() || pattern.code != role_code) {
    throw G2pError(Errc::kLengthMismatch,
                   "pattern '" + pattern.surface.surface +
                       "' does not fit role code " + role_code);
  }
  std::string out = pattern.aligned.prefix;
  for (std::size_t i = 0; i < input.size(); ++i) {
    const Grapheme& g = input.graphemes[i];
    const LetterClass role = ClassForDigit(role_code[i]);
    const bool compatible = role == LetterClass::kConsonant
                                ? (g.cls == LetterClass::kConsonant || g.ambiguous)
                                : role == g.cls;
    if (!compatible) {
      throw std::invalid_argument("role digit '" + std::string(1, role_code[i]) +
                                  "' is incompatible with input letter " +
                                  std::to_string(i + 1));
    }
    // Matched positions are rebuilt the same way as unmatched ones; the
    // pattern only ever contributes short vowels.
    out.push_back(table.BasePhoneme(g.codepoint, role));
    out += pattern.aligned.slots[i].trailing;
  }
  return out;
}

std::string ConsonantSkeleton(const NormalizedWord& word,
                              const TranslitTable& table) {
  std::string out;
  out.reserve(word.size());
  for (const Grapheme& g : word.graphemes) {
    out.push_back(table.BasePhoneme(g.codepoint, g.cls));
  }
  return out;
}

PhonemizationResult Phonemizer::Phonemize(std::string_view raw,
                                          const PhonemizeOptions& opts) const {
  const NormalizedWord word = Normalize(raw);
  const std::vector<StructuralCode> codes = CandidateCodes(word, opts.ambiguity_cap);
  const std::vector<std::uint32_t> candidate_ids = Candidates(*lex_, codes);

  PhonemizationResult result;
  result.word = word.surface;

  if (candidate_ids.empty()) {
    if (!opts.skeleton_fallback) {
      throw G2pError(Errc::kNoCandidates,
                     "no lexicon pattern shares a structural code with '" +
                         word.surface + "'");
    }
    result.phonetic = ConsonantSkeleton(word, *table_);
    result.code = EncodeStructural(word);
    result.degraded = true;
    return result;
  }

  // Each candidate is scored under its own code, so an ambiguous input
  // letter weighs according to the role that candidate gives it.
  std::vector<CandidateScore> scored;
  scored.reserve(candidate_ids.size());
  for (std::uint32_t id : candidate_ids) {
    const LexiconEntry& entry = lex_->entries()[id];
    scored.push_back(ScoreCandidate(word, entry.code, entry, id));
  }

  Selection sel = RankAndSelect(std::move(scored));
  const LexiconEntry& best = *sel.best.entry;
  result.phonetic = Splice(word, best.code, best, *table_);
  result.pattern = best.surface.surface;
  result.pattern_phonetic = best.phonetic;
  result.code = best.code;
  result.s = sel.best.s;
  result.homograph = sel.homograph;
  result.alternatives.reserve(sel.alternatives.size());
  for (const CandidateScore& alt : sel.alternatives) {
    result.alternatives.push_back(
        {alt.entry->surface.surface,
         Splice(word, alt.entry->code, *alt.entry, *table_), alt.s});
  }
  return result;
}

}  // namespace avanegar
