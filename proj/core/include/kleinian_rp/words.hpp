// Copyright 2026 The kleinian-rp Authors
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

// Free-group words stored as syllables (letter, exponent). Reduction is
// free cancellation only.

#ifndef KLEINIAN_RP_WORDS_HPP_
#define KLEINIAN_RP_WORDS_HPP_

#include <string>
#include <vector>

#include "kleinian_rp/algebra.hpp"

namespace kleinian_rp {

struct Syllable {
  int letter = 0;
  long exponent = 1;
  bool operator==(const Syllable& other) const = default;
};

class Word {
 public:
  Word() = default;
  static Word Letter(int letter, long exponent = 1);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  // Sum of |exponent| over syllables.
  long Length() const;

  Word Inverse() const;
  Word Power(long k) const;
  // Replaces every letter by its inverse.
  Word Bar() const;

  Word operator*(const Word& other) const;
  bool operator==(const Word& other) const = default;

  // Concatenated syllables, e.g. "fg^-1f^2"; "1" for the empty word.
  std::string ToString(const std::vector<std::string>& names) const;

  // images[letter] is the matrix of each letter.
  Moebius Evaluate(const std::vector<Moebius>& images) const;

 private:
  void Append(Syllable s);
  std::vector<Syllable> syllables_;
};

Word Commutator(const Word& a, const Word& b);

// The two-letter alphabet {f, g} of the group generators.
inline constexpr int kLetterF = 0;
inline constexpr int kLetterG = 1;
Word WordF(long exponent = 1);
Word WordG(long exponent = 1);
const std::vector<std::string>& FgNames();

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_WORDS_HPP_
