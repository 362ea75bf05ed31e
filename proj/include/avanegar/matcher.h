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

#ifndef AVANEGAR_MATCHER_H_
#define AVANEGAR_MATCHER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "avanegar/lexicon.h"
#include "avanegar/persian.h"

namespace avanegar {

// Exact-code retrieval: the union of the lexicon buckets for `codes`,
// deduplicated, buckets visited in the given order and each bucket kept in
// its stable order. Empty result is valid (the caller decides whether
// that is an error).
std::vector<std::uint32_t> Candidates(const Lexicon& lex,
                                      std::span<const StructuralCode> codes);

}  // namespace avanegar

#endif  // AVANEGAR_MATCHER_H_
