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

// Labelled singular-set graphs of the quotient orbifolds and the local
// decoding of their vertices and edges.

#ifndef KLEINIAN_RP_ORBIFOLDS_HPP_
#define KLEINIAN_RP_ORBIFOLDS_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kleinian_rp/presentations.hpp"

namespace kleinian_rp {

enum class AmbientKind { kSphere3, kS2xS1, kSeifert, kRP3MinusBall };

struct Ambient {
  AmbientKind kind = AmbientKind::kSphere3;
  long seifert_p = 0;  // kSeifert only
  std::string ToString() const;
};

struct GraphVertex {
  std::string name;
  bool fat = false;
};

// from == to == -1 marks a closed circle with no vertices.
struct GraphEdge {
  int from = -1;
  int to = -1;
  ExtIndex label = ExtIndex::Finite(2);
  bool fat = false;
  std::string fiber;  // "regular", "critical" or empty
};

struct SingularGraph {
  std::string template_name;
  Ambient ambient;
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  // Labels of the edges at a vertex, a loop counted twice.
  std::vector<ExtIndex> IncidentLabels(int vertex) const;
};

struct VertexDecoding {
  enum class Kind { kSingularPoint, kCusp, kBoundary, kPuncture };
  Kind kind = Kind::kBoundary;
  // Local group ("D4", "A4", "S4", "A5") or cusp triangle ("(2,4,4)").
  std::string detail;
};

struct EdgeDecoding {
  enum class Kind { kConePoints, kCuspAnnulus, kRemoved };
  Kind kind = Kind::kConePoints;
  long order = 0;  // cone points only
};

std::string ToString(VertexDecoding::Kind kind);
std::string ToString(EdgeDecoding::Kind kind);

VertexDecoding DecodeVertex(const ExtIndex& p, const ExtIndex& q, const ExtIndex& r);
EdgeDecoding DecodeEdge(const ExtIndex& label);

struct OrbifoldDescriptor {
  SingularGraph graph;
  std::vector<VertexDecoding> vertex_decodings;
  std::vector<EdgeDecoding> edge_decodings;
};

// Raises Error("UnmappedSchema") for a schema without a template.
OrbifoldDescriptor OrbifoldOf(const PresentationInstance& presentation);

// Messages for every violated structural rule; empty when the graph is
// 3-regular, every label is at least 2, fat edges end at fat vertices and
// thin vertices have spherical label triples.
std::vector<std::string> StructuralViolations(const SingularGraph& graph);

// One line per edge: "<from>-<to> <label> [fat] [fiber]".
std::string ToEdgeList(const SingularGraph& graph);
nlohmann::ordered_json ToJson(const OrbifoldDescriptor& orbifold);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_ORBIFOLDS_HPP_
