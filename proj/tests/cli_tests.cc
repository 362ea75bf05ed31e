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
// End-to-end tests of the installed command line. Each test drives the
// real binary through a shell, captures exit code / stdout / stderr, and
// checks the documented contracts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string ShellQuote(const std::string& s) {
  std::string quoted = "'";
  for (char c : s) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted.push_back(c);
    }
  }
  quoted.push_back('\'');
  return quoted;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

fs::path TempDir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "avanegar_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// env: extra "NAME=value" assignments placed before the command.
CliResult RunCli(const std::vector<std::string>& args,
                 const std::string& env = "") {
  const fs::path out_path = TempDir() / "stdout.txt";
  const fs::path err_path = TempDir() / "stderr.txt";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += ShellQuote(AVANEGAR_CLI_BIN);
  for (const auto& arg : args) cmd += " " + ShellQuote(arg);
  cmd += " >" + ShellQuote(out_path.string()) + " 2>" +
         ShellQuote(err_path.string());
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = ReadFile(out_path);
  result.err = ReadFile(err_path);
  return result;
}

const std::string kWorkedExampleTsv =
    "ونک\tvanak\tname\t4\n"
    "ترک\ttork\tnoun\t3\n"
    "سنگ\tsang\tnoun\t2\n"
    "خرس\txers\tnoun\t1\n";

fs::path WorkedExamplePath() {
  static const fs::path path = [] {
    const fs::path p = TempDir() / "worked_example.tsv";
    WriteFile(p, kWorkedExampleTsv);
    return p;
  }();
  return path;
}

fs::path BundledLexicon() {
  return fs::path(AVANEGAR_DATA_DIR) / "lexicon.tsv";
}

}  // namespace

TEST_CASE("phonemize prints the phonetic and exits 0") {
  const auto res =
      RunCli({"phonemize", "رنگ", "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out == "rang\n");
}

TEST_CASE("phonemize --verbose shows score and alternatives") {
  const auto res = RunCli({"phonemize", "رنگ", "--verbose", "--lexicon",
                           WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("rang") != std::string::npos);
  CHECK(res.out.find("سنگ") != std::string::npos);
  CHECK(res.out.find("0.667 (2/3)") != std::string::npos);
  CHECK(res.out.find("homograph:  no") != std::string::npos);
}

TEST_CASE("phonemize --json emits one structured record") {
  const auto res = RunCli({"phonemize", "رنگ", "--json", "--lexicon",
                           WorkedExamplePath().string()});
  REQUIRE(res.exit_code == 0);
  const json record = json::parse(res.out);
  CHECK(record["phonetic"] == "rang");
  CHECK(record["pattern"] == "سنگ");
  CHECK(record["s"]["num"] == 2);
  CHECK(record["s"]["den"] == 3);
  CHECK(record["homograph"] == false);
  CHECK(record["alternatives"].size() == 3);
}

TEST_CASE("phonemize failure exit codes") {
  // empty word → 3
  auto res = RunCli({"phonemize", "", "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 3);
  CHECK(res.err.find("EMPTY_WORD") != std::string::npos);

  // no candidates → 3
  const fs::path empty_lex = TempDir() / "empty.tsv";
  WriteFile(empty_lex, "");
  res = RunCli({"phonemize", "رنگ", "--lexicon", empty_lex.string()});
  CHECK(res.exit_code == 3);
  CHECK(res.err.find("NO_CANDIDATES") != std::string::npos);

  // unreadable lexicon → 2
  res = RunCli({"phonemize", "رنگ", "--lexicon", "/nonexistent/lex.tsv"});
  CHECK(res.exit_code == 2);

  // missing lexicon entirely → 2
  res = RunCli({"phonemize", "رنگ"});
  CHECK(res.exit_code == 2);

  // usage error → 1
  res = RunCli({"phonemize"});
  CHECK(res.exit_code == 1);
  res = RunCli({"nonsense"});
  CHECK(res.exit_code == 1);
}

TEST_CASE("phonemize --skeleton-fallback degrades gracefully") {
  const fs::path empty_lex = TempDir() / "empty2.tsv";
  WriteFile(empty_lex, "");
  const auto res = RunCli({"phonemize", "رنگ", "--skeleton-fallback",
                           "--lexicon", empty_lex.string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out.substr(0, 4) == "rng\n");
}

TEST_CASE("lexicon path comes from the environment unless the flag wins") {
  const auto res = RunCli({"phonemize", "رنگ"},
                          "AVANEGAR_LEXICON=" +
                              ShellQuote(WorkedExamplePath().string()));
  CHECK(res.exit_code == 0);
  CHECK(res.out == "rang\n");

  const fs::path empty_lex = TempDir() / "empty3.tsv";
  WriteFile(empty_lex, "");
  const auto flag_wins =
      RunCli({"phonemize", "رنگ", "--lexicon", empty_lex.string()},
             "AVANEGAR_LEXICON=" + ShellQuote(WorkedExamplePath().string()));
  CHECK(flag_wins.exit_code == 3);  // the (empty) flag lexicon was used
}

TEST_CASE("batch preserves line order and marks failures") {
  const fs::path input = TempDir() / "batch_in.txt";
  WriteFile(input, "رنگ\nqqq\nسنگ\n");
  const fs::path output = TempDir() / "batch_out.tsv";
  const auto res = RunCli({"batch", input.string(), output.string(),
                           "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  const std::string out = ReadFile(output);
  std::istringstream lines(out);
  std::string l1, l2, l3;
  std::getline(lines, l1);
  std::getline(lines, l2);
  std::getline(lines, l3);
  CHECK(l1 == "رنگ\trang\t0.667\tfalse\tسنگ\t");
  CHECK(l2 == "qqq\t\t\t\t\tUNSUPPORTED_CHARACTER");
  CHECK(l3 == "سنگ\tsang\t1.000\tfalse\tسنگ\t");
  CHECK(res.err.find("3 word(s): 2 ok, 1 failed") != std::string::npos);
}

TEST_CASE("batch json format emits one record per line") {
  const fs::path input = TempDir() / "batch_in2.txt";
  WriteFile(input, "رنگ\nzzz\n");
  const fs::path output = TempDir() / "batch_out2.jsonl";
  const auto res = RunCli({"batch", input.string(), output.string(),
                           "--format", "json", "--lexicon",
                           WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  std::istringstream lines(ReadFile(output));
  std::string line;
  std::getline(lines, line);
  CHECK(json::parse(line)["phonetic"] == "rang");
  std::getline(lines, line);
  CHECK(json::parse(line)["error"] == "UNSUPPORTED_CHARACTER");
}

TEST_CASE("batch of an empty file produces an empty output") {
  const fs::path input = TempDir() / "batch_empty.txt";
  WriteFile(input, "");
  const fs::path output = TempDir() / "batch_empty_out.tsv";
  const auto res = RunCli({"batch", input.string(), output.string(),
                           "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  CHECK(ReadFile(output).empty());
}

TEST_CASE("batch I/O failures exit 2") {
  const auto res = RunCli({"batch", "/nonexistent/input.txt", "-",
                           "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 2);
}

TEST_CASE("repeat batch runs are byte-identical") {
  const fs::path input = TempDir() / "batch_det.txt";
  std::string words;
  for (int i = 0; i < 50; ++i) {
    words += "رنگ\nدرس\nونک\nxx\nسیب\n";
  }
  WriteFile(input, words);
  const fs::path out1 = TempDir() / "det1.tsv";
  const fs::path out2 = TempDir() / "det2.tsv";
  const auto res1 = RunCli({"batch", input.string(), out1.string(),
                            "--lexicon", BundledLexicon().string()});
  const auto res2 = RunCli({"batch", input.string(), out2.string(),
                            "--lexicon", BundledLexicon().string()});
  CHECK(res1.exit_code == 0);
  CHECK(res2.exit_code == 0);
  const std::string a = ReadFile(out1);
  CHECK_FALSE(a.empty());
  CHECK(a == ReadFile(out2));
}

TEST_CASE("batch round-trips the bundled lexicon's own surfaces") {
  // Every surface of the bundled lexicon must phonemize to its stored
  // phonetic (self-splice identity end to end). Homograph surfaces map to
  // their highest-frequency reading, so keep first occurrences only.
  std::ifstream lex_in(BundledLexicon());
  REQUIRE(lex_in.good());
  std::string line;
  std::map<std::string, unsigned long long> best_freq;
  std::map<std::string, std::string> best_phon;
  while (std::getline(lex_in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string surface, phonetic, kind, freq;
    std::getline(row, surface, '\t');
    std::getline(row, phonetic, '\t');
    std::getline(row, kind, '\t');
    std::getline(row, freq, '\t');
    const unsigned long long f = freq.empty() ? 0 : std::stoull(freq);
    if (!best_freq.count(surface) || f > best_freq[surface]) {
      best_freq[surface] = f;
      best_phon[surface] = phonetic;
    }
  }
  REQUIRE(best_phon.size() >= 250);

  const fs::path input = TempDir() / "roundtrip_in.txt";
  std::string words;
  for (const auto& [surface, phonetic] : best_phon) words += surface + "\n";
  WriteFile(input, words);
  const fs::path output = TempDir() / "roundtrip_out.tsv";
  const auto res = RunCli({"batch", input.string(), output.string(),
                           "--lexicon", BundledLexicon().string()});
  REQUIRE(res.exit_code == 0);

  std::istringstream out_lines(ReadFile(output));
  std::size_t mismatches = 0;
  for (const auto& [surface, phonetic] : best_phon) {
    std::string out_line;
    REQUIRE(std::getline(out_lines, out_line));
    std::istringstream cols(out_line);
    std::string word, predicted;
    std::getline(cols, word, '\t');
    std::getline(cols, predicted, '\t');
    CHECK(word == surface);
    if (predicted != phonetic) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("eval --leave-one-out prints the three accuracies") {
  const auto res = RunCli({"eval", "--leave-one-out", "--lexicon",
                           WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("letter accuracy:") != std::string::npos);
  CHECK(res.out.find("word accuracy:") != std::string::npos);
  CHECK(res.out.find("sentence accuracy:") != std::string::npos);
  CHECK(res.out.find("baseline") != std::string::npos);
}

TEST_CASE("eval with a corpus file, human and json output") {
  const fs::path corpus = TempDir() / "corpus.tsv";
  WriteFile(corpus,
            "سنگ\tsang\t1\n"
            "رنگ\trang\t1\n"
            "درس\tdars\t2\n");
  auto res = RunCli({"eval", "--corpus", corpus.string(), "--lexicon",
                     WorkedExamplePath().string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("words total:       3") != std::string::npos);

  res = RunCli({"eval", "--corpus", corpus.string(), "--json", "--lexicon",
                WorkedExamplePath().string()});
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(res.out);
  CHECK(report["words_total"] == 3);
  CHECK(report["words_correct"] == 2);
  CHECK(report["log"].size() == 3);
  CHECK(report["log"][2]["predicted"] == "ders");

  // --corpus and --leave-one-out are mutually exclusive; neither is also
  // an error.
  res = RunCli({"eval", "--corpus", corpus.string(), "--leave-one-out",
                "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 1);
  res = RunCli({"eval", "--lexicon", WorkedExamplePath().string()});
  CHECK(res.exit_code == 1);
}

TEST_CASE("lexicon-check reports buckets and flags bad rows") {
  auto res = RunCli({"lexicon-check", "--lexicon", BundledLexicon().string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("rejected: 0") != std::string::npos);
  CHECK(res.out.find("distinct codes:") != std::string::npos);
  CHECK(res.out.find("largest buckets:") != std::string::npos);

  const fs::path bad_lex = TempDir() / "bad.tsv";
  WriteFile(bad_lex, kWorkedExampleTsv + "سنگ\txyz\tnoun\t1\n");
  res = RunCli({"lexicon-check", "--lexicon", bad_lex.string()});
  CHECK(res.exit_code == 4);
  CHECK(res.out.find("rejected: 1") != std::string::npos);
}

TEST_CASE("an alternate transliteration table can be swapped in") {
  // Same table text as the built-in default, loaded from a file.
  const auto res =
      RunCli({"phonemize", "رنگ", "--lexicon", WorkedExamplePath().string(),
              "--translit", (fs::path(AVANEGAR_DATA_DIR) / "translit.tsv").string()});
  CHECK(res.exit_code == 0);
  CHECK(res.out == "rang\n");
}
