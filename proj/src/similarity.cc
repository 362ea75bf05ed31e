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

#include "avanegar/similarity.h"

#include <algorithm>
#include <stdexcept>

#include "avanegar/errors.h"

namespace avanegar {

MatchVector MatchLetters(const NormalizedWord& input,
                         const NormalizedWord& pattern) {
  if (input.size() != pattern.size()) {
    throw G2pError(Errc::kLengthMismatch,
                   "input length " + std::to_string(input.size()) +
                       " != pattern length " + std::to_string(pattern.size()));
  }
  MatchVector match(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    // Impulse on the letter-code difference: 1 iff the difference is 0,
    // i.e. the same normalized letter.
    match[i] = input.graphemes[i].codepoint == pattern.graphemes[i].codepoint;
  }
  return match;
}

WeightVector LetterWeights(const NormalizedWord& input,
                           const StructuralCode& role_code) {
  if (input.size() != role_code.size()) {
    throw G2pError(Errc::kLengthMismatch,
                   "role code length " + std::to_string(role_code.size()) +
                       " != word length " + std::to_string(input.size()));
  }
  const auto length = static_cast<std::int64_t>(input.size());
  WeightVector wv;
  wv.weights.reserve(input.size());
  for (char digit : role_code) {
    wv.weights.push_back(digit == kConsonantDigit ? 1 : length);
    wv.total += wv.weights.back();
  }
  return wv;
}

CandidateScore ScoreCandidate(const NormalizedWord& input,
                              const StructuralCode& role_code,
                              const LexiconEntry& entry,
                              std::uint32_t entry_id) {
  if (entry.code != role_code) {
    throw std::invalid_argument("entry code " + entry.code +
                                " does not match role code " + role_code);
  }
  CandidateScore score;
  score.entry_id = entry_id;
  score.entry = &entry;
  score.match = MatchLetters(input, entry.surface);
  const WeightVector wv = LetterWeights(input, role_code);
  for (std::size_t i = 0; i < score.match.size(); ++i) {
    if (score.match[i]) score.matched_weight += wv.weights[i];
  }
  score.s = Fraction::Of(score.matched_weight, wv.total);
  return score;
}

Selection RankAndSelect(std::vector<CandidateScore> scored) {
  if (scored.empty()) {
    throw G2pError(Errc::kNoCandidates, "no candidates to rank");
  }
  std::sort(scored.begin(), scored.end(),
            [](const CandidateScore& a, const CandidateScore& b) {
              if (a.s != b.s) return a.s > b.s;
              if (a.entry->frequency != b.entry->frequency) {
                return a.entry->frequency > b.entry->frequency;
              }
              if (a.entry->surface.surface != b.entry->surface.surface) {
                return a.entry->surface.surface < b.entry->surface.surface;
              }
              return a.entry->phonetic < b.entry->phonetic;
            });

  Selection sel;
  sel.homograph = scored.size() >= 2 && scored[0].s == scored[1].s;
  sel.best = std::move(scored.front());
  sel.alternatives.assign(std::make_move_iterator(scored.begin() + 1),
                          std::make_move_iterator(scored.end()));
  return sel;
}

}  // namespace avanegar
