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

#ifndef AVANEGAR_ERRORS_H_
#define AVANEGAR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace avanegar {

enum class Errc {
  kEmptyWord,
  kUnsupportedCharacter,
  kTooManyAmbiguities,
  kLengthMismatch,
  kAlignmentFailure,
  kFormatError,
  kNoCandidates,
  kCorpusFormatError,
  kIoError,
};

// Single exception type for all recoverable pipeline errors. The code
// distinguishes the failure classes that callers (CLI exit codes, batch
// error markers, loader reject reasons) need to tell apart.
class G2pError : public std::runtime_error {
 public:
  G2pError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* marker() const noexcept { return Marker(code_); }

  // Stable machine-readable marker, e.g. "NO_CANDIDATES".
  static const char* Marker(Errc code) noexcept;

 private:
  Errc code_;
};

}  // namespace avanegar

#endif  // AVANEGAR_ERRORS_H_
