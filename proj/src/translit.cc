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

#include "avanegar/translit.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "avanegar/errors.h"
#include "avanegar/utf8.h"

#include "translit_default.inc"

namespace avanegar {

namespace {

[[noreturn]] void Fail(std::string_view origin, std::size_t line,
                       const std::string& why) {
  throw G2pError(Errc::kFormatError, std::string(origin) + ":" +
                                         std::to_string(line) +
                                         ": " + why);
}

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

}  // namespace

const TranslitTable& TranslitTable::BuiltIn() {
  static const TranslitTable table = FromText(kDefaultTranslitTsv);
  return table;
}

TranslitTable TranslitTable::FromText(std::string_view tsv,
                                      std::string_view origin) {
  TranslitTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= tsv.size()) {
    std::size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto cols = SplitTabs(line);
    if (cols.size() != 3) Fail(origin, line_no, "expected 3 tab-separated columns");

    const std::u32string letter = utf8::Decode(cols[0]);
    if (letter.size() != 1 || !IsSupportedLetter(letter[0])) {
      Fail(origin, line_no, "first column must be one supported letter");
    }
    const char32_t cp = letter[0];
    const LetterInfo* info = nullptr;
    for (const auto& li : SupportedLetters()) {
      if (li.codepoint == cp) info = &li;
    }

    if (cols[2].size() != 1 || !std::isgraph(static_cast<unsigned char>(cols[2][0]))) {
      Fail(origin, line_no, "phoneme must be one printable ASCII character");
    }
    const char phoneme = cols[2][0];
    if (IsShortVowel(phoneme)) {
      Fail(origin, line_no, "phoneme collides with a short vowel symbol");
    }

    if (cols[1] == "consonant") {
      if (info->cls != LetterClass::kConsonant && !info->ambiguous) {
        Fail(origin, line_no, "letter has no consonant role");
      }
      if (!table.consonant_.emplace(cp, phoneme).second) {
        Fail(origin, line_no, "duplicate consonant entry");
      }
    } else if (cols[1] == "vowel") {
      if (info->cls == LetterClass::kConsonant) {
        Fail(origin, line_no, "letter has no long-vowel role");
      }
      if (!table.vowel_.emplace(cp, phoneme).second) {
        Fail(origin, line_no, "duplicate vowel entry");
      }
    } else {
      Fail(origin, line_no, "role must be 'consonant' or 'vowel'");
    }
  }

  // The table must be total over the alphabet: every role a letter can
  // take needs a phoneme.
  for (const auto& li : SupportedLetters()) {
    const bool needs_consonant = li.cls == LetterClass::kConsonant || li.ambiguous;
    const bool needs_vowel = li.cls != LetterClass::kConsonant;
    if (needs_consonant && !table.consonant_.count(li.codepoint)) {
      Fail(origin, 0, "missing consonant entry for " + utf8::Encode({&li.codepoint, 1}));
    }
    if (needs_vowel && !table.vowel_.count(li.codepoint)) {
      Fail(origin, 0, "missing vowel entry for " + utf8::Encode({&li.codepoint, 1}));
    }
  }
  return table;
}

TranslitTable TranslitTable::FromFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw G2pError(Errc::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return FromText(buf.str(), path);
}

char TranslitTable::BasePhoneme(char32_t letter, LetterClass role) const {
  const auto& map = role == LetterClass::kConsonant ? consonant_ : vowel_;
  auto it = map.find(letter);
  if (it == map.end()) {
    throw std::invalid_argument("letter " + utf8::Encode({&letter, 1}) +
                                " has no phoneme in the requested role");
  }
  return it->second;
}

}  // namespace avanegar
