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

#include "avanegar/errors.h"

namespace avanegar {

const char* G2pError::Marker(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyWord:
      return "EMPTY_WORD";
    case Errc::kUnsupportedCharacter:
      return "UNSUPPORTED_CHARACTER";
    case Errc::kTooManyAmbiguities:
      return "TOO_MANY_AMBIGUITIES";
    case Errc::kLengthMismatch:
      return "LENGTH_MISMATCH";
    case Errc::kAlignmentFailure:
      return "ALIGNMENT_FAILURE";
    case Errc::kFormatError:
      return "FORMAT_ERROR";
    case Errc::kNoCandidates:
      return "NO_CANDIDATES";
    case Errc::kCorpusFormatError:
      return "CORPUS_FORMAT_ERROR";
    case Errc::kIoError:
      return "IO_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace avanegar
