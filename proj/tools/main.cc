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
// avanegar CLI: phonemize | batch | eval | lexicon-check.
//
// Exit codes: 0 success, 1 usage error, 2 lexicon/translit/I-O failure,
// 3 word-level failure in `phonemize` (empty word, unsupported character,
// no candidates, too many ambiguities), 4 lexicon-check found bad rows.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "avanegar/errors.h"
#include "avanegar/eval.h"
#include "avanegar/lexicon.h"
#include "avanegar/phonemizer.h"
#include "avanegar/translit.h"

namespace {

using avanegar::Errc;
using avanegar::EvalReport;
using avanegar::Fraction;
using avanegar::G2pError;
using avanegar::Lexicon;
using avanegar::LoadReport;
using avanegar::PhonemizationResult;
using avanegar::Phonemizer;
using avanegar::TranslitTable;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitLoadFailure = 2;
constexpr int kExitWordFailure = 3;
constexpr int kExitLexiconInvalid = 4;

std::string FormatDecimal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

json FractionJson(const Fraction& s) {
  return json{{"num", s.num}, {"den", s.den}, {"value", s.Value()}};
}

json ResultJson(const PhonemizationResult& res) {
  json alts = json::array();
  for (const auto& alt : res.alternatives) {
    alts.push_back({{"pattern", alt.pattern},
                    {"phonetic", alt.phonetic},
                    {"s", FractionJson(alt.s)}});
  }
  return json{{"word", res.word},
              {"phonetic", res.phonetic},
              {"pattern", res.pattern},
              {"pattern_phonetic", res.pattern_phonetic},
              {"code", res.code},
              {"s", FractionJson(res.s)},
              {"homograph", res.homograph},
              {"degraded", res.degraded},
              {"alternatives", alts}};
}

struct CommonOptions {
  std::string lexicon_path;
  std::string translit_path;
};

void AddCommonOptions(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--lexicon", opts->lexicon_path, "Lexicon TSV file")
      ->envname("AVANEGAR_LEXICON");
  cmd->add_option("--translit", opts->translit_path,
                  "Alternate letter-to-phoneme table (TSV); defaults to the "
                  "built-in romanization");
}

// Loads table + lexicon; exits with code 2 on failure.
struct Engine {
  TranslitTable table;
  Lexicon lexicon;
  LoadReport report;
};

Engine LoadEngine(const CommonOptions& opts) {
  Engine engine;
  if (opts.lexicon_path.empty()) {
    throw G2pError(Errc::kIoError,
                   "no lexicon given (use --lexicon or AVANEGAR_LEXICON)");
  }
  engine.table = opts.translit_path.empty()
                     ? TranslitTable::BuiltIn()
                     : TranslitTable::FromFile(opts.translit_path);
  engine.lexicon =
      Lexicon::LoadFile(opts.lexicon_path, engine.table, &engine.report);
  return engine;
}

void WarnRejects(const LoadReport& report) {
  if (!report.rejected.empty()) {
    std::cerr << "warning: " << report.rejected.size()
              << " lexicon row(s) rejected; run lexicon-check for details\n";
  }
}

int RunPhonemize(const CommonOptions& common, const std::string& word,
                 bool verbose, bool as_json, bool skeleton_fallback) {
  Engine engine = LoadEngine(common);
  WarnRejects(engine.report);
  const Phonemizer ph(engine.lexicon, engine.table);

  PhonemizationResult res;
  try {
    res = ph.Phonemize(word, {.skeleton_fallback = skeleton_fallback});
  } catch (const G2pError& e) {
    switch (e.code()) {
      case Errc::kEmptyWord:
      case Errc::kUnsupportedCharacter:
      case Errc::kTooManyAmbiguities:
      case Errc::kNoCandidates:
        std::cerr << "error: " << e.marker() << ": " << e.what() << "\n";
        return kExitWordFailure;
      default:
        throw;
    }
  }

  if (as_json) {
    std::cout << ResultJson(res).dump() << "\n";
    return 0;
  }
  std::cout << res.phonetic << "\n";
  if (verbose) {
    if (res.degraded) {
      std::cout << "degraded: consonant skeleton (no candidates)\n";
      return 0;
    }
    std::cout << "pattern:    " << res.pattern << " (" << res.pattern_phonetic
              << ")\n"
              << "code:       " << res.code << "\n"
              << "s:          " << FormatDecimal(res.s.Value()) << " ("
              << res.s.ToString() << ")\n"
              << "homograph:  " << (res.homograph ? "yes" : "no") << "\n";
    if (!res.alternatives.empty()) {
      // Full list in --json; here the top of the ranking is what matters.
      const std::size_t shown = std::min<std::size_t>(res.alternatives.size(), 10);
      std::cout << "alternatives:\n";
      for (std::size_t i = 0; i < shown; ++i) {
        const auto& alt = res.alternatives[i];
        std::cout << "  " << alt.pattern << "\t" << alt.phonetic << "\t"
                  << FormatDecimal(alt.s.Value()) << " (" << alt.s.ToString()
                  << ")\n";
      }
      if (shown < res.alternatives.size()) {
        std::cout << "  ... " << (res.alternatives.size() - shown)
                  << " more (use --json for the full list)\n";
      }
    }
  }
  return 0;
}

int RunBatch(const CommonOptions& common, const std::string& input_path,
             const std::string& output_path, const std::string& format,
             bool skeleton_fallback) {
  Engine engine = LoadEngine(common);
  WarnRejects(engine.report);
  const Phonemizer ph(engine.lexicon, engine.table);

  std::istream* in = &std::cin;
  std::ifstream in_file;
  if (input_path != "-") {
    in_file.open(input_path, std::ios::binary);
    if (!in_file) {
      std::cerr << "error: cannot open input " << input_path << "\n";
      return kExitLoadFailure;
    }
    in = &in_file;
  }
  std::ostream* out = &std::cout;
  std::ofstream out_file;
  if (output_path != "-") {
    out_file.open(output_path, std::ios::binary);
    if (!out_file) {
      std::cerr << "error: cannot open output " << output_path << "\n";
      return kExitLoadFailure;
    }
    out = &out_file;
  }

  std::size_t total = 0;
  std::size_t failed = 0;
  std::string line;
  while (std::getline(*in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++total;
    std::string error;
    PhonemizationResult res;
    try {
      res = ph.Phonemize(line, {.skeleton_fallback = skeleton_fallback});
      if (res.degraded) error = G2pError::Marker(Errc::kNoCandidates);
    } catch (const G2pError& e) {
      error = e.marker();
      ++failed;
    }
    const bool usable = error.empty() || (skeleton_fallback && res.degraded);
    if (format == "json") {
      json rec = usable ? ResultJson(res) : json{{"word", line}};
      rec["error"] = error;
      *out << rec.dump() << "\n";
    } else {
      // word, phonetic, s, homograph, pattern, error
      *out << line << "\t" << (usable ? res.phonetic : "") << "\t"
           << (usable && !res.degraded ? FormatDecimal(res.s.Value()) : "")
           << "\t"
           << (usable && !res.degraded ? (res.homograph ? "true" : "false") : "")
           << "\t" << (usable ? res.pattern : "") << "\t" << error << "\n";
    }
  }
  out->flush();
  if (out_file.is_open() && !out_file) {
    std::cerr << "error: write failure on " << output_path << "\n";
    return kExitLoadFailure;
  }
  std::cerr << "processed " << total << " word(s): " << (total - failed)
            << " ok, " << failed << " failed\n";
  return 0;
}

void PrintReportHuman(const EvalReport& report, std::ostream& out) {
  out << "words total:       " << report.counts.words_total << "\n"
      << "words correct:     " << report.counts.words_correct << "\n"
      << "words failed:      " << report.counts.words_failed << "\n"
      << "sentences total:   " << report.counts.sentences_total << "\n"
      << "sentences correct: " << report.counts.sentences_correct << "\n"
      << "letter accuracy:   " << FormatDecimal(report.letter_accuracy) << "\n"
      << "word accuracy:     " << FormatDecimal(report.word_accuracy) << "\n"
      << "sentence accuracy: "
      << (report.sentence_accuracy ? FormatDecimal(*report.sentence_accuracy)
                                   : std::string("n/a"))
      << "\n";
  if (report.baseline_word_accuracy) {
    out << "random-candidate baseline word accuracy: "
        << FormatDecimal(*report.baseline_word_accuracy) << "\n";
  }
}

json ReportJson(const EvalReport& report) {
  json log = json::array();
  for (const auto& w : report.log) {
    log.push_back({{"word", w.input},
                   {"gold", w.gold},
                   {"predicted", w.predicted},
                   {"s", FractionJson(w.s)},
                   {"error", w.error}});
  }
  json j{{"words_total", report.counts.words_total},
         {"words_correct", report.counts.words_correct},
         {"words_failed", report.counts.words_failed},
         {"sentences_total", report.counts.sentences_total},
         {"sentences_correct", report.counts.sentences_correct},
         {"letter_accuracy", report.letter_accuracy},
         {"word_accuracy", report.word_accuracy},
         {"sentence_accuracy", report.sentence_accuracy
                                   ? json(*report.sentence_accuracy)
                                   : json(nullptr)},
         {"baseline_word_accuracy",
          report.baseline_word_accuracy ? json(*report.baseline_word_accuracy)
                                        : json(nullptr)}};
  j["log"] = std::move(log);
  return j;
}

int RunEval(const CommonOptions& common, const std::string& corpus_path,
            bool leave_one_out, bool as_json) {
  Engine engine = LoadEngine(common);
  WarnRejects(engine.report);

  EvalReport report;
  if (leave_one_out) {
    report = avanegar::LeaveOneOut(engine.lexicon, engine.table);
  } else {
    const avanegar::Corpus corpus = avanegar::LoadCorpusFile(corpus_path);
    report = avanegar::Evaluate(engine.lexicon, engine.table, corpus);
  }

  if (as_json) {
    std::cout << ReportJson(report).dump() << "\n";
  } else {
    if (leave_one_out) {
      std::cout << "mode: leave-one-out (each word scored against the "
                   "lexicon without its own entry)\n";
    }
    PrintReportHuman(report, std::cout);
  }
  return 0;
}

int RunLexiconCheck(const CommonOptions& common) {
  Engine engine = LoadEngine(common);
  const LoadReport& report = engine.report;

  std::cout << "accepted: " << report.accepted << "\n"
            << "rejected: " << report.rejected.size() << "\n";
  for (const auto& reject : report.rejected) {
    std::cout << "  line " << reject.line << ": " << reject.reason << "\n";
  }

  const std::vector<avanegar::StructuralCode> codes = engine.lexicon.Codes();
  std::cout << "distinct codes: " << codes.size() << "\n";

  // Bucket-size histogram plus the biggest buckets.
  std::map<std::size_t, std::size_t> histogram;
  std::vector<std::pair<std::size_t, avanegar::StructuralCode>> sized;
  for (const auto& code : codes) {
    const std::size_t n = engine.lexicon.Bucket(code).size();
    ++histogram[n];
    sized.emplace_back(n, code);
  }
  std::cout << "bucket sizes:";
  for (const auto& [size, count] : histogram) {
    std::cout << " " << size << "x" << count;
  }
  std::cout << "\n";
  std::sort(sized.begin(), sized.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::cout << "largest buckets:\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(sized.size(), 10); ++i) {
    std::cout << "  " << sized[i].second << "\t" << sized[i].first << "\n";
  }
  return report.rejected.empty() ? 0 : kExitLexiconInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persian grapheme-to-phoneme engine (pattern analogy)"};
  app.require_subcommand(1);

  CommonOptions common;

  auto* phonemize = app.add_subcommand("phonemize", "Phonemize one word");
  std::string word;
  bool verbose = false;
  bool as_json = false;
  bool skeleton = false;
  phonemize->add_option("word", word, "Persian word (UTF-8)")->required();
  phonemize->add_flag("--verbose", verbose, "Show pattern, score, alternatives");
  phonemize->add_flag("--json", as_json, "Emit one JSON record");
  phonemize->add_flag("--skeleton-fallback", skeleton,
                      "Emit the consonant skeleton when no pattern matches");
  AddCommonOptions(phonemize, &common);

  auto* batch = app.add_subcommand("batch", "Phonemize one word per input line");
  std::string input_path;
  std::string output_path = "-";
  std::string format = "tsv";
  batch->add_option("input", input_path, "Input file, '-' for stdin")->required();
  batch->add_option("output", output_path, "Output file, '-' for stdout");
  batch->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "json"}));
  batch->add_flag("--skeleton-fallback", skeleton,
                  "Emit consonant skeletons for words with no pattern");
  AddCommonOptions(batch, &common);

  auto* eval = app.add_subcommand("eval", "Accuracy report against a corpus");
  std::string corpus_path;
  bool leave_one_out = false;
  auto* corpus_opt =
      eval->add_option("--corpus", corpus_path,
                       "Corpus TSV: word, gold phonetic, sentence id");
  auto* loo_flag = eval->add_flag("--leave-one-out", leave_one_out,
                                  "Evaluate each lexicon entry against the "
                                  "lexicon without it");
  corpus_opt->excludes(loo_flag);
  eval->add_flag("--json", as_json, "Emit the full report as JSON");
  AddCommonOptions(eval, &common);

  auto* check = app.add_subcommand("lexicon-check", "Validate a lexicon file");
  AddCommonOptions(check, &common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (phonemize->parsed()) {
      return RunPhonemize(common, word, verbose, as_json, skeleton);
    }
    if (batch->parsed()) {
      return RunBatch(common, input_path, output_path, format, skeleton);
    }
    if (eval->parsed()) {
      if (!leave_one_out && corpus_path.empty()) {
        std::cerr << "error: eval needs --corpus PATH or --leave-one-out\n";
        return kExitUsage;
      }
      return RunEval(common, corpus_path, leave_one_out, as_json);
    }
    if (check->parsed()) {
      return RunLexiconCheck(common);
    }
  } catch (const G2pError& e) {
    std::cerr << "error: " << e.marker() << ": " << e.what() << "\n";
    return kExitLoadFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLoadFailure;
  }
  return kExitUsage;
}
