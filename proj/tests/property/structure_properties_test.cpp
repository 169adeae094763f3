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

#include <gtest/gtest.h>

#include "family_grid.hpp"
#include "kleinian_rp/orbifolds.hpp"
#include "kleinian_rp/verify.hpp"

namespace kleinian_rp {
namespace {

using testing::FullGrid;

TEST(StructureProperty, PresentationConventions) {
  for (const auto& p : FullGrid()) {
    PresentationInstance k = PresentationOf(p.match, PresentationForm::kKleinian);
    PresentationInstance a = PresentationOf(p.match, PresentationForm::kAbstract);
    for (const auto& r : k.relators) EXPECT_FALSE(r.exponent.is_inf_bar()) << k.Name();
    for (const auto& r : a.relators) {
      EXPECT_FALSE(r.exponent.is_inf_bar()) << a.Name();
      EXPECT_FALSE(r.exponent.is_inf()) << a.Name();
    }
    EXPECT_NO_THROW(GeneratorWords(p.match)) << k.Name();
  }
}

TEST(StructureProperty, OrbifoldRulesOnGrid) {
  for (const auto& p : FullGrid()) {
    for (auto form : {PresentationForm::kKleinian, PresentationForm::kAbstract}) {
      PresentationInstance pres = PresentationOf(p.match, form);
      OrbifoldDescriptor o = OrbifoldOf(pres);
      EXPECT_TRUE(StructuralViolations(o.graph).empty()) << pres.Name();
      EXPECT_EQ(o.vertex_decodings.size(), o.graph.vertices.size());
      EXPECT_EQ(o.edge_decodings.size(), o.graph.edges.size());
    }
  }
}

TEST(StructureProperty, RealizeThenClassify) {
  for (const auto& p : FullGrid()) {
    RealizedPair pair = Realize(p.triple);
    Verdict v = Classify(pair.achieved);
    bool found = false;
    for (const auto& m : v.matches) found = found || testing::SameMatch(m, p.match);
    EXPECT_TRUE(found) << ToString(p.match.family) << " n=" << p.match.n;
  }
}

TEST(StructureProperty, CertificatesOnGrid) {
  for (const auto& p : FullGrid()) {
    RealizedPair pair = Realize(p.triple);
    GeneratorWordTable words = GeneratorWords(p.match);
    PresentationInstance pres = PresentationOf(p.match);
    Certificate c = CertifyPresentation(pair, pres, words);
    EXPECT_TRUE(c.pass) << pres.Name();
    EXPECT_EQ(c.partial, !words.total()) << pres.Name();
    Certificate g = CertifyGeometry(pair, p.match);
    EXPECT_TRUE(g.pass) << ToString(p.match.family) << " " << pres.Name();
  }
}

}  // namespace
}  // namespace kleinian_rp
