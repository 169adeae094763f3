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

// Presentation schemas and the family -> presentation map, with words in
// f, g for the presentation generators where they are known.

#ifndef KLEINIAN_RP_PRESENTATIONS_HPP_
#define KLEINIAN_RP_PRESENTATIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "kleinian_rp/classifier.hpp"
#include "kleinian_rp/words.hpp"

namespace kleinian_rp {

enum class Schema { kGT, kPH, kH, kP, kTet6, kTet3, kGTet1, kGTet2, kS2, kS3, kR };

std::string ToString(Schema schema);

// Kleinian keeps exponent-inf relators as parabolic markers; abstract drops
// them. Exponent-inf_bar relators are always dropped.
enum class PresentationForm { kKleinian, kAbstract };

struct Relator {
  Word word;
  ExtIndex exponent = ExtIndex::Finite(1);
};

struct PresentationInstance {
  Schema schema = Schema::kGT;
  std::vector<ExtIndex> exponents;  // schema order
  std::vector<std::string> generators;
  std::vector<Relator> relators;
  PresentationForm form = PresentationForm::kKleinian;

  // e.g. "GT[3,inf_bar;4]", "Tet[2,2,3;2,5,3]", "Tet[3,inf_bar;3]".
  std::string Name() const;
  // "NAME = < gens | relators >".
  std::string ToText() const;
  std::string RelatorText(const Relator& relator) const;
};

// Builds the schema instance; Tet3 takes (n, m, q). Raises
// Error("InvalidRange") on a wrong exponent count.
PresentationInstance MakePresentation(Schema schema,
                                      const std::vector<ExtIndex>& exponents,
                                      PresentationForm form);

// The generator list of Tet3 and Tet6 coincide; Tet3[n,m;q] = Tet6[2,2,n;2,q,m].
PresentationInstance ExpandTet3(const PresentationInstance& tet3);

PresentationInstance PresentationOf(const FamilyMatch& match,
                                    PresentationForm form = PresentationForm::kKleinian,
                                    const Config& config = {});

struct GeneratorWordTable {
  std::vector<std::string> generators;
  std::vector<std::optional<Word>> words;  // over {f, g}
  bool total() const;
  std::vector<std::string> missing() const;
};

// Raises Error("InvalidRange") when the match parity does not support the
// half-exponent words.
GeneratorWordTable GeneratorWords(const FamilyMatch& match, const Config& config = {});

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_PRESENTATIONS_HPP_
