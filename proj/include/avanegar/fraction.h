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

#ifndef AVANEGAR_FRACTION_H_
#define AVANEGAR_FRACTION_H_

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace avanegar {

// Exact rational similarity value. Similarity scores are compared and
// tested for equality (the homograph test) as rationals, never as floats;
// magnitudes stay tiny (numerator/denominator bounded by L + L^2 for word
// length L), so no overflow handling is needed.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, reduced

  static Fraction Of(std::int64_t num, std::int64_t den) {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    if (den < 0) g = -g;
    return {num / g, den / g};
  }

  double Value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string ToString() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

}  // namespace avanegar

#endif  // AVANEGAR_FRACTION_H_
