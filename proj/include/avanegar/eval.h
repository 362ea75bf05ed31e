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
// Accuracy metrics and the evaluation harness (corpus scoring and
// leave-one-out over the lexicon itself).

#ifndef AVANEGAR_EVAL_H_
#define AVANEGAR_EVAL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avanegar/fraction.h"
#include "avanegar/lexicon.h"
#include "avanegar/translit.h"

namespace avanegar {

// Levenshtein distance over phoneme symbols (one symbol per char).
std::size_t EditDistance(std::string_view a, std::string_view b);

// 1 − edit_distance / max(|predicted|, |gold|), clamped to [0,1].
// Requires gold non-empty.
double LetterAccuracy(std::string_view predicted, std::string_view gold);

struct CorpusItem {
  std::string word;
  std::string gold;
};

struct CorpusSentence {
  std::int64_t id = 0;
  std::vector<CorpusItem> items;
};

using Corpus = std::vector<CorpusSentence>;

// TSV: word \t gold phonetic \t sentence-id (integer); words with equal
// ids form one sentence (grouped in first-appearance order). Throws
// G2pError(kCorpusFormatError) on malformed rows.
Corpus LoadCorpus(std::istream& in);
Corpus LoadCorpusFile(const std::string& path);

struct EvalCounts {
  std::size_t words_total = 0;
  std::size_t words_correct = 0;
  std::size_t words_failed = 0;  // pipeline error, empty prediction
  std::size_t sentences_total = 0;
  std::size_t sentences_correct = 0;
};

struct WordOutcome {
  std::string input;
  std::string gold;
  std::string predicted;  // empty on failure
  Fraction s;             // 0/1 on failure
  std::string error;      // marker, empty when the pipeline succeeded
};

struct EvalReport {
  double letter_accuracy = 0.0;  // mean of per-word letter accuracy
  double word_accuracy = 0.0;    // exact-match fraction
  std::optional<double> sentence_accuracy;
  // Expected word accuracy of picking uniformly among the same candidate
  // sets instead of the similarity ranking; filled by LeaveOneOut.
  std::optional<double> baseline_word_accuracy;
  EvalCounts counts;
  std::vector<WordOutcome> log;  // corpus order
};

// A word is correct iff its prediction equals gold byte-for-byte; a
// sentence is correct iff all its words are. Failed words (no candidates,
// unsupported input, ...) count as incorrect with an empty prediction.
EvalReport Evaluate(const Lexicon& lex, const TranslitTable& table,
                    const Corpus& corpus);

// Phonemizes every lexicon surface against the lexicon with that entry
// removed, gold = the entry's own phonetic. Each word counts as its own
// single-word sentence so the report carries all three metrics. Requires
// at least 2 entries. Deterministic.
EvalReport LeaveOneOut(const Lexicon& lex, const TranslitTable& table);

}  // namespace avanegar

#endif  // AVANEGAR_EVAL_H_
