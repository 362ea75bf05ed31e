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

#include "avanegar/matcher.h"

#include <unordered_set>

namespace avanegar {

std::vector<std::uint32_t> Candidates(const Lexicon& lex,
                                      std::span<const StructuralCode> codes) {
  std::vector<std::uint32_t> out;
  std::unordered_set<std::uint32_t> seen;
  for (const StructuralCode& code : codes) {
    for (std::uint32_t id : lex.Bucket(code)) {
      if (seen.insert(id).second) out.push_back(id);
    }
  }
  return out;
}

}  // namespace avanegar
