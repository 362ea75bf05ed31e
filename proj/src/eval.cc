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

#include "avanegar/eval.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "avanegar/errors.h"
#include "avanegar/matcher.h"
#include "avanegar/phonemizer.h"

namespace avanegar {

std::size_t EditDistance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t del = row[j] + 1;
      const std::size_t ins = row[j - 1] + 1;
      const std::size_t sub = diag + (a[i - 1] != b[j - 1] ? 1 : 0);
      diag = row[j];
      row[j] = std::min({del, ins, sub});
    }
  }
  return row[b.size()];
}

double LetterAccuracy(std::string_view predicted, std::string_view gold) {
  if (gold.empty()) throw std::invalid_argument("gold phonetic is empty");
  const std::size_t dist = EditDistance(predicted, gold);
  const std::size_t denom = std::max(predicted.size(), gold.size());
  const double acc = 1.0 - static_cast<double>(dist) / static_cast<double>(denom);
  return std::clamp(acc, 0.0, 1.0);
}

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

struct WordScore {
  WordOutcome outcome;
  bool correct = false;
  bool failed = false;
  double letter_acc = 0.0;
};

WordScore ScoreWord(const Phonemizer& ph, const std::string& word,
                    const std::string& gold) {
  WordScore ws;
  ws.outcome.input = word;
  ws.outcome.gold = gold;
  ws.outcome.s = Fraction{0, 1};
  try {
    PhonemizationResult res = ph.Phonemize(word);
    ws.outcome.predicted = res.phonetic;
    ws.outcome.s = res.s;
  } catch (const G2pError& e) {
    ws.outcome.error = e.marker();
    ws.failed = true;
  }
  ws.correct = !ws.failed && ws.outcome.predicted == gold;
  ws.letter_acc = LetterAccuracy(ws.outcome.predicted, gold);
  return ws;
}

}  // namespace

Corpus LoadCorpus(std::istream& in) {
  Corpus corpus;
  std::unordered_map<std::int64_t, std::size_t> sentence_index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto fail = [&](const std::string& why) {
      throw G2pError(Errc::kCorpusFormatError,
                     "corpus line " + std::to_string(line_no) + ": " + why);
    };

    auto cols = SplitTabs(line);
    if (cols.size() != 3) fail("expected 3 tab-separated columns");
    if (cols[0].empty()) fail("empty word");
    if (cols[1].empty()) fail("empty gold phonetic");

    std::int64_t sid = 0;
    auto [ptr, ec] = std::from_chars(cols[2].data(), cols[2].data() + cols[2].size(), sid);
    if (ec != std::errc() || ptr != cols[2].data() + cols[2].size()) {
      fail("bad sentence id '" + std::string(cols[2]) + "'");
    }

    auto [it, inserted] = sentence_index.emplace(sid, corpus.size());
    if (inserted) corpus.push_back({sid, {}});
    corpus[it->second].items.push_back({std::string(cols[0]), std::string(cols[1])});
  }
  return corpus;
}

Corpus LoadCorpusFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw G2pError(Errc::kIoError, "cannot open corpus " + path);
  return LoadCorpus(in);
}

EvalReport Evaluate(const Lexicon& lex, const TranslitTable& table,
                    const Corpus& corpus) {
  if (corpus.empty()) {
    throw G2pError(Errc::kCorpusFormatError, "corpus is empty");
  }

  const Phonemizer ph(lex, table);
  EvalReport report;
  double letter_sum = 0.0;
  for (const CorpusSentence& sentence : corpus) {
    bool sentence_correct = !sentence.items.empty();
    for (const CorpusItem& item : sentence.items) {
      WordScore ws = ScoreWord(ph, item.word, item.gold);
      ++report.counts.words_total;
      if (ws.correct) ++report.counts.words_correct;
      if (ws.failed) ++report.counts.words_failed;
      if (!ws.correct) sentence_correct = false;
      letter_sum += ws.letter_acc;
      report.log.push_back(std::move(ws.outcome));
    }
    ++report.counts.sentences_total;
    if (sentence_correct) ++report.counts.sentences_correct;
  }

  const auto words = static_cast<double>(report.counts.words_total);
  report.word_accuracy =
      words == 0 ? 0.0 : static_cast<double>(report.counts.words_correct) / words;
  report.letter_accuracy = words == 0 ? 0.0 : letter_sum / words;
  report.sentence_accuracy =
      static_cast<double>(report.counts.sentences_correct) /
      static_cast<double>(report.counts.sentences_total);
  return report;
}

EvalReport LeaveOneOut(const Lexicon& lex, const TranslitTable& table) {
  if (lex.size() < 2) {
    throw G2pError(Errc::kCorpusFormatError,
                   "leave-one-out needs at least 2 lexicon entries");
  }

  EvalReport report;
  double letter_sum = 0.0;
  double baseline_sum = 0.0;
  for (std::uint32_t i = 0; i < lex.size(); ++i) {
    const LexiconEntry& held_out = lex.entries()[i];
    const Lexicon sub = lex.Without(i);
    const Phonemizer ph(sub, table);

    WordScore ws = ScoreWord(ph, held_out.surface.surface, held_out.phonetic);
    ++report.counts.words_total;
    if (ws.correct) ++report.counts.words_correct;
    if (ws.failed) ++report.counts.words_failed;
    letter_sum += ws.letter_acc;
    // Each held-out word stands as its own single-word sentence.
    ++report.counts.sentences_total;
    if (ws.correct) ++report.counts.sentences_correct;
    report.log.push_back(std::move(ws.outcome));

    // Chance of a uniformly random candidate producing the gold phonetic:
    // the reference point the similarity ranking has to beat.
    try {
      const std::vector<StructuralCode> codes = CandidateCodes(held_out.surface);
      const std::vector<std::uint32_t> cands = Candidates(sub, codes);
      if (!cands.empty()) {
        std::size_t hits = 0;
        for (std::uint32_t id : cands) {
          const LexiconEntry& cand = sub.entries()[id];
          if (Splice(held_out.surface, cand.code, cand, table) == held_out.phonetic) {
            ++hits;
          }
        }
        baseline_sum += static_cast<double>(hits) / static_cast<double>(cands.size());
      }
    } catch (const G2pError&) {
      // No candidate set (e.g. ambiguity cap): baseline contribution 0.
    }
  }

  const auto words = static_cast<double>(report.counts.words_total);
  report.word_accuracy = static_cast<double>(report.counts.words_correct) / words;
  report.letter_accuracy = letter_sum / words;
  report.sentence_accuracy = report.word_accuracy;
  report.baseline_word_accuracy = baseline_sum / words;
  return report;
}

}  // namespace avanegar
