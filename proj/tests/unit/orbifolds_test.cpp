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

#include "kleinian_rp/orbifolds.hpp"

namespace kleinian_rp {
namespace {

using VK = VertexDecoding::Kind;
using EK = EdgeDecoding::Kind;

ExtIndex F(long k) { return ExtIndex::Finite(k); }

std::vector<std::string> Labels(const SingularGraph& g) {
  std::vector<std::string> out;
  for (const auto& e : g.edges) out.push_back(e.label.ToString());
  return out;
}

TEST(DecodeVertex, LocalGroups) {
  EXPECT_EQ(DecodeVertex(F(2), F(3), F(5)).kind, VK::kSingularPoint);
  EXPECT_EQ(DecodeVertex(F(2), F(3), F(5)).detail, "A5");
  EXPECT_EQ(DecodeVertex(F(2), F(3), F(4)).detail, "S4");
  EXPECT_EQ(DecodeVertex(F(2), F(3), F(3)).detail, "A4");
  EXPECT_EQ(DecodeVertex(F(2), F(2), F(7)).detail, "D14");
}

TEST(DecodeVertex, CuspsAndBoundary) {
  VertexDecoding c = DecodeVertex(F(2), F(4), F(4));
  EXPECT_EQ(c.kind, VK::kCusp);
  EXPECT_EQ(c.detail, "(2,4,4)");
  EXPECT_EQ(DecodeVertex(F(3), F(3), F(3)).kind, VK::kCusp);
  EXPECT_EQ(DecodeVertex(F(2), F(3), F(7)).kind, VK::kBoundary);
  EXPECT_EQ(DecodeVertex(F(2), F(3), ExtIndex::InfBar()).kind, VK::kBoundary);
}

TEST(DecodeEdge, Kinds) {
  EdgeDecoding e = DecodeEdge(F(4));
  EXPECT_EQ(e.kind, EK::kConePoints);
  EXPECT_EQ(e.order, 4);
  EXPECT_EQ(DecodeEdge(ExtIndex::Inf()).kind, EK::kCuspAnnulus);
  EXPECT_EQ(DecodeEdge(ExtIndex::InfBar()).kind, EK::kRemoved);
}

TEST(OrbifoldOf, ThetaGraphWithRemovedEdge) {
  auto p = MakePresentation(Schema::kGT, {F(3), ExtIndex::InfBar(), F(4)},
                            PresentationForm::kKleinian);
  OrbifoldDescriptor o = OrbifoldOf(p);
  EXPECT_EQ(o.graph.ambient.kind, AmbientKind::kSphere3);
  EXPECT_EQ(Labels(o.graph), (std::vector<std::string>{"3", "inf_bar", "4"}));
  ASSERT_EQ(o.edge_decodings.size(), 3u);
  EXPECT_EQ(o.edge_decodings[1].kind, EK::kRemoved);
  EXPECT_TRUE(StructuralViolations(o.graph).empty());
}

TEST(OrbifoldOf, SeifertFiberPlacement) {
  auto p = MakePresentation(Schema::kS2, {F(4), F(3), F(3)}, PresentationForm::kKleinian);
  OrbifoldDescriptor o = OrbifoldOf(p);
  EXPECT_EQ(o.graph.ambient.kind, AmbientKind::kSeifert);
  ASSERT_GE(o.graph.edges.size(), 2u);
  EXPECT_EQ(o.graph.edges[0].label, F(4));
  EXPECT_EQ(o.graph.edges[0].fiber, "regular");
  EXPECT_EQ(o.graph.edges[1].label, F(3));
  EXPECT_EQ(o.graph.edges[1].fiber, "critical");
}

TEST(OrbifoldOf, ProjectiveSpaceMinusBall) {
  auto p = MakePresentation(Schema::kR, {F(5), F(2), F(2)}, PresentationForm::kKleinian);
  OrbifoldDescriptor o = OrbifoldOf(p);
  EXPECT_EQ(o.graph.ambient.kind, AmbientKind::kRP3MinusBall);
  EXPECT_EQ(o.graph.ambient.ToString(), "RP3-B3");
  EXPECT_EQ(Labels(o.graph), (std::vector<std::string>{"5", "2", "5", "2"}));
  EXPECT_TRUE(StructuralViolations(o.graph).empty());
}

TEST(StructuralViolations, DetectsEachRule) {
  SingularGraph g;
  g.vertices = {{"A", false}, {"B", false}};
  g.edges = {{0, 1, F(2), false, ""}, {0, 1, F(3), false, ""}, {0, 1, F(7), false, ""}};
  auto v = StructuralViolations(g);
  EXPECT_FALSE(v.empty());  // thin vertices with a hyperbolic triple

  g.vertices = {{"A", true}, {"B", true}};
  EXPECT_TRUE(StructuralViolations(g).empty());

  g.edges.pop_back();
  EXPECT_FALSE(StructuralViolations(g).empty());  // not 3-regular

  g.edges.push_back({0, 1, F(1), false, ""});
  EXPECT_FALSE(StructuralViolations(g).empty());  // label below 2

  g.edges.back() = {0, 1, F(5), true, ""};
  g.vertices[1].fat = false;
  EXPECT_FALSE(StructuralViolations(g).empty());  // fat edge at thin vertex
}

TEST(ToEdgeList, Format) {
  auto p = MakePresentation(Schema::kGT, {F(3), ExtIndex::InfBar(), F(4)},
                            PresentationForm::kKleinian);
  EXPECT_EQ(ToEdgeList(OrbifoldOf(p).graph), "A-B 3\nA-B inf_bar fat\nA-B 4\n");
}

TEST(ToJson, HasTemplateAndDecodings) {
  auto p = MakePresentation(Schema::kR, {F(5), F(2), F(2)}, PresentationForm::kKleinian);
  auto j = ToJson(OrbifoldOf(p));
  EXPECT_EQ(j["template"], "R");
  EXPECT_EQ(j["ambient"], "RP3-B3");
  EXPECT_TRUE(j.contains("vertices"));
  EXPECT_TRUE(j.contains("edges"));
}

}  // namespace
}  // namespace kleinian_rp
