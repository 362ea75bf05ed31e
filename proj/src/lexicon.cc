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

#include "avanegar/lexicon.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <string>
#include <unordered_set>

#include "avanegar/errors.h"

namespace avanegar {

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

[[noreturn]] void AlignFail(const NormalizedWord& surface, std::size_t pos,
                            const std::string& why) {
  throw G2pError(Errc::kAlignmentFailure,
                 "cannot align '" + surface.surface + "': " + why +
                     " (phonetic position " + std::to_string(pos) + ")");
}

}  // namespace

std::string AlignedPhonetic::Reassemble() const {
  std::string out = prefix;
  for (const AlignedSlot& slot : slots) {
    out.push_back(slot.anchor);
    out += slot.trailing;
  }
  return out;
}

AlignedPhonetic AlignPhonetic(const NormalizedWord& surface,
                              std::string_view phonetic,
                              const TranslitTable& table) {
  for (std::size_t i = 0; i < phonetic.size(); ++i) {
    if (!std::isgraph(static_cast<unsigned char>(phonetic[i]))) {
      AlignFail(surface, i, "phonetic contains a non-ASCII phoneme symbol");
    }
  }

  AlignedPhonetic out;
  out.slots.reserve(surface.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < surface.size(); ++i) {
    const Grapheme& g = surface.graphemes[i];
    std::size_t scan = pos;
    while (scan < phonetic.size() && IsShortVowel(phonetic[scan])) ++scan;
    if (scan == phonetic.size()) {
      AlignFail(surface, pos,
                "no anchor left for letter " + std::to_string(i + 1));
    }
    const char sym = phonetic[scan];

    // Vowel reading first; و/ی fall back to their consonant reading.
    LetterClass role;
    if (g.cls != LetterClass::kConsonant && table.BasePhoneme(g.codepoint, g.cls) == sym) {
      role = g.cls;
    } else if ((g.cls == LetterClass::kConsonant || g.ambiguous) &&
               table.BasePhoneme(g.codepoint, LetterClass::kConsonant) == sym) {
      role = LetterClass::kConsonant;
    } else {
      AlignFail(surface, scan,
                std::string("symbol '") + sym + "' does not anchor letter " +
                    std::to_string(i + 1));
    }

    std::string between(phonetic.substr(pos, scan - pos));
    if (i == 0) {
      out.prefix = std::move(between);
    } else {
      out.slots.back().trailing = std::move(between);
    }
    out.slots.push_back({sym, role, ""});
    pos = scan + 1;
  }

  std::string rest(phonetic.substr(pos));
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (!IsShortVowel(rest[k])) {
      AlignFail(surface, pos + k, "leftover symbols after the last anchor");
    }
  }
  out.slots.back().trailing = std::move(rest);
  return out;
}

StructuralCode CodeFromAlignment(const AlignedPhonetic& aligned) {
  StructuralCode code;
  code.reserve(aligned.slots.size());
  for (const AlignedSlot& slot : aligned.slots) code.push_back(DigitFor(slot.role));
  return code;
}

Lexicon Lexicon::Load(std::istream& in, const TranslitTable& table,
                      LoadReport* report) {
  LoadReport local;
  LoadReport* rep = report ? report : &local;

  std::vector<LexiconEntry> entries;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto reject = [&](std::string reason) {
      rep->rejected.push_back({line_no, line, std::move(reason)});
    };

    auto cols = SplitTabs(line);
    if (cols.size() < 3 || cols.size() > 4) {
      reject("expected 3 or 4 tab-separated columns, got " +
             std::to_string(cols.size()));
      continue;
    }

    LexiconEntry entry;
    try {
      entry.surface = Normalize(cols[0]);
    } catch (const G2pError& e) {
      reject(e.what());
      continue;
    }

    entry.phonetic = std::string(cols[1]);
    if (entry.phonetic.empty()) {
      reject("empty phonetic");
      continue;
    }
    entry.gram_kind = std::string(cols[2]);

    if (cols.size() == 4) {
      const std::string_view f = cols[3];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(),
                                       entry.frequency);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        reject("bad frequency '" + std::string(f) + "'");
        continue;
      }
    }

    try {
      entry.aligned = AlignPhonetic(entry.surface, entry.phonetic, table);
    } catch (const G2pError& e) {
      reject(e.what());
      continue;
    }
    entry.code = CodeFromAlignment(entry.aligned);

    const std::string key = entry.surface.surface + '\t' + entry.phonetic;
    if (!seen.insert(key).second) {
      reject("duplicate (surface, phonetic); first occurrence kept");
      continue;
    }
    entries.push_back(std::move(entry));
  }

  rep->accepted = entries.size();

  Lexicon lex;
  lex.entries_ = std::move(entries);
  // One global stable order fixes bucket order and every later tie-break:
  // frequency descending, surface code point order, then phonetic (needed
  // for same-surface homographs with equal frequency).
  std::sort(lex.entries_.begin(), lex.entries_.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              if (a.frequency != b.frequency) return a.frequency > b.frequency;
              if (a.surface.surface != b.surface.surface) {
                return a.surface.surface < b.surface.surface;
              }
              return a.phonetic < b.phonetic;
            });
  lex.BuildIndex();
  return lex;
}

Lexicon Lexicon::LoadFile(const std::string& path, const TranslitTable& table,
                          LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw G2pError(Errc::kIoError, "cannot open lexicon " + path);
  return Load(in, table, report);
}

void Lexicon::BuildIndex() {
  by_code_.clear();
  for (std::uint32_t i = 0; i < entries_.size(); ++i) {
    by_code_[entries_[i].code].push_back(i);
  }
}

std::span<const std::uint32_t> Lexicon::Bucket(const StructuralCode& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) return {};
  return it->second;
}

std::vector<StructuralCode> Lexicon::Codes() const {
  std::vector<StructuralCode> codes;
  std::unordered_set<std::string_view> seen;
  for (const LexiconEntry& e : entries_) {
    if (seen.insert(e.code).second) codes.push_back(e.code);
  }
  return codes;
}

Lexicon Lexicon::Without(std::uint32_t entry_id) const {
  Lexicon out;
  out.entries_.reserve(entries_.size() - 1);
  for (std::uint32_t i = 0; i < entries_.size(); ++i) {
    if (i != entry_id) out.entries_.push_back(entries_[i]);
  }
  out.BuildIndex();
  return out;
}

}  // namespace avanegar
