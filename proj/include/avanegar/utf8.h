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

#ifndef AVANEGAR_UTF8_H_
#define AVANEGAR_UTF8_H_

#include <string>
#include <string_view>

namespace avanegar::utf8 {

// Strict UTF-8 decoding; rejects truncated sequences, overlong encodings
// and surrogate code points. Throws G2pError(kUnsupportedCharacter) with
// the byte offset of the offending sequence.
std::u32string Decode(std::string_view text);

void Append(std::string& out, char32_t cp);
std::string Encode(std::u32string_view text);

}  // namespace avanegar::utf8

#endif  // AVANEGAR_UTF8_H_
