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

#include "kleinian_rp/words.hpp"

#include <cstdlib>

namespace kleinian_rp {

Word Word::Letter(int letter, long exponent) {
  Word w;
  w.Append({letter, exponent});
  return w;
}

long Word::Length() const {
  long n = 0;
  for (const auto& s : syllables_) n += std::labs(s.exponent);
  return n;
}

void Word::Append(Syllable s) {
  if (s.exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().letter == s.letter) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back(s);
}

Word Word::Inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.Append({it->letter, -it->exponent});
  }
  return w;
}

Word Word::Power(long k) const {
  Word base = k < 0 ? Inverse() : *this;
  Word w;
  for (long i = 0; i < std::labs(k); ++i) w = w * base;
  return w;
}

Word Word::Bar() const {
  Word w;
  for (const auto& s : syllables_) w.Append({s.letter, -s.exponent});
  return w;
}

Word Word::operator*(const Word& other) const {
  Word w = *this;
  for (const auto& s : other.syllables_) w.Append(s);
  return w;
}

std::string Word::ToString(const std::vector<std::string>& names) const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const auto& s : syllables_) {
    out += names.at(static_cast<std::size_t>(s.letter));
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

Moebius Word::Evaluate(const std::vector<Moebius>& images) const {
  Moebius m;
  int products = 0;
  for (const auto& s : syllables_) {
    m = m * images.at(static_cast<std::size_t>(s.letter)).Power(s.exponent);
    if (++products >= 16) {
      m = m.Renormalized();
      products = 0;
    }
  }
  return m;
}

Word Commutator(const Word& a, const Word& b) {
  return a * b * a.Inverse() * b.Inverse();
}

Word WordF(long exponent) { return Word::Letter(kLetterF, exponent); }
Word WordG(long exponent) { return Word::Letter(kLetterG, exponent); }

const std::vector<std::string>& FgNames() {
  static const std::vector<std::string> names = {"f", "g"};
  return names;
}

}  // namespace kleinian_rp
