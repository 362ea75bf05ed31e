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

#include "avanegar/persian.h"

#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "avanegar/errors.h"
#include "avanegar/utf8.h"

namespace avanegar {

namespace {

constexpr LetterInfo kAlphabet[] = {
    {0x0621, LetterClass::kConsonant, false},   // ء
    {0x0622, LetterClass::kLongVowelA, false},  // آ
    {0x0624, LetterClass::kConsonant, false},   // ؤ
    {0x0626, LetterClass::kConsonant, false},   // ئ
    {0x0627, LetterClass::kLongVowelA, false},  // ا
    {0x0628, LetterClass::kConsonant, false},   // ب
    {0x062A, LetterClass::kConsonant, false},   // ت
    {0x062B, LetterClass::kConsonant, false},   // ث
    {0x062C, LetterClass::kConsonant, false},   // ج
    {0x062D, LetterClass::kConsonant, false},   // ح
    {0x062E, LetterClass::kConsonant, false},   // خ
    {0x062F, LetterClass::kConsonant, false},   // د
    {0x0630, LetterClass::kConsonant, false},   // ذ
    {0x0631, LetterClass::kConsonant, false},   // ر
    {0x0632, LetterClass::kConsonant, false},   // ز
    {0x0633, LetterClass::kConsonant, false},   // س
    {0x0634, LetterClass::kConsonant, false},   // ش
    {0x0635, LetterClass::kConsonant, false},   // ص
    {0x0636, LetterClass::kConsonant, false},   // ض
    {0x0637, LetterClass::kConsonant, false},   // ط
    {0x0638, LetterClass::kConsonant, false},   // ظ
    {0x0639, LetterClass::kConsonant, false},   // ع
    {0x063A, LetterClass::kConsonant, false},   // غ
    {0x0641, LetterClass::kConsonant, false},   // ف
    {0x0642, LetterClass::kConsonant, false},   // ق
    {0x0644, LetterClass::kConsonant, false},   // ل
    {0x0645, LetterClass::kConsonant, false},   // م
    {0x0646, LetterClass::kConsonant, false},   // ن
    {0x0647, LetterClass::kConsonant, false},   // ه
    {0x0648, LetterClass::kLongVowelU, true},   // و
    {0x067E, LetterClass::kConsonant, false},   // پ
    {0x0686, LetterClass::kConsonant, false},   // چ
    {0x0698, LetterClass::kConsonant, false},   // ژ
    {0x06A9, LetterClass::kConsonant, false},   // ک
    {0x06AF, LetterClass::kConsonant, false},   // گ
    {0x06CC, LetterClass::kLongVowelI, true},   // ی
};

// Arabic variant spellings folded to the Persian canonical letter.
constexpr std::pair<char32_t, char32_t> kFolds[] = {
    {0x064A, 0x06CC},  // ي → ی
    {0x0649, 0x06CC},  // ى → ی
    {0x0643, 0x06A9},  // ك → ک
    {0x0623, 0x0627},  // أ → ا
    {0x0625, 0x0627},  // إ → ا
    {0x0671, 0x0627},  // ٱ → ا
    {0x0629, 0x0647},  // ة → ه
};

const LetterInfo* Lookup(char32_t cp) {
  static const auto* map = [] {
    auto* m = new std::unordered_map<char32_t, const LetterInfo*>();
    for (const auto& info : kAlphabet) m->emplace(info.codepoint, &info);
    return m;
  }();
  auto it = map->find(cp);
  return it == map->end() ? nullptr : it->second;
}

char32_t FoldLetter(char32_t cp) {
  for (const auto& [from, to] : kFolds) {
    if (cp == from) return to;
  }
  return cp;
}

bool IsStripped(char32_t cp) {
  switch (cp) {
    case 0x0640:  // tatweel
    case 0x061C:  // Arabic letter mark
    case 0x200B:  // zero-width space
    case 0x200C:  // ZWNJ
    case 0x200D:  // ZWJ
    case 0x200E:  // LRM
    case 0x200F:  // RLM
    case 0xFEFF:  // BOM
      return true;
    default:
      return (cp >= 0x202A && cp <= 0x202E) || (cp >= 0x2066 && cp <= 0x2069);
  }
}

// Short-vowel and other pronunciation diacritics; the method assumes they
// are absent from written text, so present ones are discarded.
bool IsDiacritic(char32_t cp) {
  return (cp >= 0x064B && cp <= 0x0652) || cp == 0x0670;
}

bool IsSpace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0x00A0;
}

[[noreturn]] void ThrowUnsupported(char32_t cp, std::size_t pos) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
  throw G2pError(Errc::kUnsupportedCharacter,
                 std::string("unsupported character ") + buf +
                     " at position " + std::to_string(pos));
}

}  // namespace

std::span<const LetterInfo> SupportedLetters() { return kAlphabet; }

bool IsSupportedLetter(char32_t cp) { return Lookup(cp) != nullptr; }

NormalizedWord Normalize(std::string_view raw) {
  const std::u32string decoded = utf8::Decode(raw);

  std::size_t first = 0;
  std::size_t last = decoded.size();
  while (first < last && IsSpace(decoded[first])) ++first;
  while (last > first && IsSpace(decoded[last - 1])) --last;
  if (first == last) throw G2pError(Errc::kEmptyWord, "empty word");

  std::u32string letters;
  letters.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    char32_t cp = decoded[i];
    if (IsSpace(cp)) ThrowUnsupported(cp, i);
    if (IsStripped(cp)) continue;
    // Combining madda / hamza compose with a preceding carrier letter;
    // anywhere else they are pronunciation marks and are dropped.
    if (cp == 0x0653) {  // madda above
      if (!letters.empty() && letters.back() == 0x0627) letters.back() = 0x0622;
      continue;
    }
    if (cp == 0x0654) {  // hamza above
      if (!letters.empty() && letters.back() == 0x0648) letters.back() = 0x0624;
      if (!letters.empty() && letters.back() == 0x06CC) letters.back() = 0x0626;
      continue;  // on ا the hamza folds away (أ → ا)
    }
    if (cp == 0x0655) continue;  // hamza below (إ → ا)
    if (IsDiacritic(cp)) continue;
    cp = FoldLetter(cp);
    if (!IsSupportedLetter(cp)) ThrowUnsupported(decoded[i], i);
    letters.push_back(cp);
  }
  if (letters.empty()) throw G2pError(Errc::kEmptyWord, "empty word");

  NormalizedWord word;
  word.graphemes.reserve(letters.size());
  for (char32_t cp : letters) {
    const LetterInfo* info = Lookup(cp);
    word.graphemes.push_back({cp, info->cls, info->ambiguous});
  }
  word.surface = utf8::Encode(letters);
  return word;
}

char DigitFor(LetterClass cls) {
  switch (cls) {
    case LetterClass::kConsonant:
      return '7';
    case LetterClass::kLongVowelA:
      return '1';
    case LetterClass::kLongVowelI:
      return '2';
    case LetterClass::kLongVowelU:
      return '3';
  }
  throw std::invalid_argument("bad letter class");
}

LetterClass ClassForDigit(char digit) {
  switch (digit) {
    case '7':
      return LetterClass::kConsonant;
    case '1':
      return LetterClass::kLongVowelA;
    case '2':
      return LetterClass::kLongVowelI;
    case '3':
      return LetterClass::kLongVowelU;
    default:
      throw std::invalid_argument(std::string("bad structural digit '") +
                                  digit + "'");
  }
}

StructuralCode EncodeStructural(const NormalizedWord& word) {
  StructuralCode code;
  code.reserve(word.size());
  for (const Grapheme& g : word.graphemes) code.push_back(DigitFor(g.cls));
  return code;
}

std::vector<StructuralCode> CandidateCodes(const NormalizedWord& word,
                                           int ambiguity_cap) {
  std::vector<std::size_t> ambiguous;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word.graphemes[i].ambiguous) ambiguous.push_back(i);
  }
  if (ambiguous.size() > static_cast<std::size_t>(ambiguity_cap)) {
    throw G2pError(Errc::kTooManyAmbiguities,
                   "word has " + std::to_string(ambiguous.size()) +
                       " ambiguous letters, cap is " +
                       std::to_string(ambiguity_cap));
  }

  const StructuralCode base = EncodeStructural(word);
  std::vector<StructuralCode> codes;
  codes.reserve(std::size_t{1} << ambiguous.size());
  for (std::uint32_t mask = 0; mask < (1u << ambiguous.size()); ++mask) {
    StructuralCode code = base;
    for (std::size_t j = 0; j < ambiguous.size(); ++j) {
      if (mask & (1u << j)) code[ambiguous[j]] = kConsonantDigit;
    }
    codes.push_back(std::move(code));
  }
  return codes;
}

}  // namespace avanegar
