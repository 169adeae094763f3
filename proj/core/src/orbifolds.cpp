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

#include "kleinian_rp/orbifolds.hpp"

#include <algorithm>
#include <array>

namespace kleinian_rp {

namespace {

using Exps = std::vector<ExtIndex>;

ExtIndex Two() { return ExtIndex::Finite(2); }

// Sign of 1/p + 1/q + 1/r - 1 for finite labels.
int SphericalSign(long p, long q, long r) {
  long lhs = q * r + p * r + p * q;
  long rhs = p * q * r;
  return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
}

bool IsFatEdge(const ExtIndex& label) { return !label.is_finite(); }

struct Builder {
  SingularGraph g;

  int Vertex(std::string name) {
    g.vertices.push_back({std::move(name), false});
    return static_cast<int>(g.vertices.size()) - 1;
  }
  void Edge(int a, int b, const ExtIndex& label, std::string fiber = {}) {
    g.edges.push_back({a, b, label, IsFatEdge(label), std::move(fiber)});
  }
  void Theta(const ExtIndex& a, const ExtIndex& b, const ExtIndex& c,
             std::array<std::string, 3> fibers = {}) {
    int u = Vertex("A");
    int v = Vertex("B");
    Edge(u, v, a, fibers[0]);
    Edge(u, v, b, fibers[1]);
    Edge(u, v, c, fibers[2]);
  }
  void Circle(const ExtIndex& label, std::string fiber = {}) {
    Edge(-1, -1, label, std::move(fiber));
  }
};

// Tetrahedron 1-skeleton; face-pair labels in (p1,p2,p3;q1,q2,q3) order.
void Tetrahedron(Builder& b, const Exps& e) {
  int v[4];
  for (int i = 0; i < 4; ++i) v[i] = b.Vertex(std::string(1, static_cast<char>('A' + i)));
  // face pair -> label index; the edge joins the vertices opposite the
  // two remaining faces.
  const std::array<std::array<int, 3>, 6> pairs = {{{0, 3, 0},
                                                   {1, 3, 1},
                                                   {2, 3, 2},
                                                   {1, 2, 3},
                                                   {0, 2, 4},
                                                   {0, 1, 5}}};
  for (const auto& [i, j, slot] : pairs) {
    int others[2], k = 0;
    for (int f = 0; f < 4; ++f) {
      if (f != i && f != j) others[k++] = f;
    }
    b.Edge(v[others[0]], v[others[1]], e[static_cast<std::size_t>(slot)]);
  }
}

SingularGraph Template(const PresentationInstance& pres) {
  const Exps& e = pres.exponents;
  Builder b;
  b.g.template_name = ToString(pres.schema);
  switch (pres.schema) {
    case Schema::kGT:
      b.Theta(e[0], e[1], e[2]);
      break;
    case Schema::kPH: {
      int a = b.Vertex("A"), bb = b.Vertex("B"), c = b.Vertex("C"), d = b.Vertex("D");
      b.Edge(a, bb, e[0]);
      b.Edge(bb, d, e[1]);
      b.Edge(c, d, e[2]);
      b.Edge(a, c, Two());
      b.Edge(a, d, Two());
      b.Edge(bb, c, Two());
      break;
    }
    case Schema::kH: {  // H[p;n,m;q]
      int a = b.Vertex("A"), bb = b.Vertex("B"), c = b.Vertex("C"), d = b.Vertex("D");
      b.Edge(a, bb, e[0]);
      b.Edge(a, c, e[1]);
      b.Edge(a, d, e[2]);
      b.Edge(c, d, e[3]);
      b.Edge(bb, c, Two());
      b.Edge(bb, d, Two());
      break;
    }
    case Schema::kTet6:
      Tetrahedron(b, e);
      break;
    case Schema::kTet3:
      Tetrahedron(b, {Two(), Two(), e[0], Two(), e[2], e[1]});
      break;
    case Schema::kP: {
      int top[3], bot[3];
      for (int i = 0; i < 3; ++i) {
        top[i] = b.Vertex("T" + std::to_string(i + 1));
        bot[i] = b.Vertex("B" + std::to_string(i + 1));
      }
      for (int i = 0; i < 3; ++i) {
        b.Edge(top[i], top[(i + 1) % 3], Two());
        b.Edge(bot[i], bot[(i + 1) % 3], Two());
        b.Edge(top[i], bot[i], e[static_cast<std::size_t>(i)]);
      }
      break;
    }
    case Schema::kS2:
      b.g.ambient = {AmbientKind::kSeifert, 2};
      b.Theta(e[0], e[1], e[2], {"regular", "critical", ""});
      break;
    case Schema::kS3:
      b.g.ambient = {AmbientKind::kSeifert, 3};
      b.Theta(e[0], e[1], e[2], {"", "regular", ""});
      break;
    case Schema::kGTet2:
      b.g.ambient = {AmbientKind::kSeifert, 2};
      b.Theta(e[1], Two(), e[2], {"regular", "regular", ""});
      b.Circle(e[0], "critical");
      break;
    case Schema::kGTet1:
      b.g.ambient = {AmbientKind::kS2xS1, 0};
      b.Theta(e[0], Two(), e[1]);
      b.Circle(e[2]);
      break;
    case Schema::kR:
      b.g.ambient = {AmbientKind::kRP3MinusBall, 0};
      b.Theta(e[0], e[1], e[0]);
      b.Circle(e[2]);
      break;
  }
  if (b.g.vertices.empty() && b.g.edges.empty()) {
    throw Error("UnmappedSchema", "no orbifold template for " + ToString(pres.schema));
  }
  // Fat vertices: an incident fat edge or a non-spherical label triple.
  for (std::size_t i = 0; i < b.g.vertices.size(); ++i) {
    auto labels = b.g.IncidentLabels(static_cast<int>(i));
    bool fat = std::any_of(labels.begin(), labels.end(),
                           [](const ExtIndex& t) { return !t.is_finite(); });
    if (!fat && labels.size() == 3) {
      fat = SphericalSign(labels[0].value(), labels[1].value(), labels[2].value()) <= 0;
    }
    b.g.vertices[i].fat = fat;
  }
  return b.g;
}

}  // namespace

std::string Ambient::ToString() const {
  switch (kind) {
    case AmbientKind::kSphere3:
      return "S3";
    case AmbientKind::kS2xS1:
      return "S2xS1";
    case AmbientKind::kSeifert:
      return "Seifert(" + std::to_string(seifert_p) + ")";
    case AmbientKind::kRP3MinusBall:
      return "RP3-B3";
  }
  return {};
}

std::vector<ExtIndex> SingularGraph::IncidentLabels(int vertex) const {
  std::vector<ExtIndex> out;
  for (const auto& e : edges) {
    if (e.from == vertex) out.push_back(e.label);
    if (e.to == vertex) out.push_back(e.label);
  }
  return out;
}

std::string ToString(VertexDecoding::Kind kind) {
  switch (kind) {
    case VertexDecoding::Kind::kSingularPoint:
      return "singular_point";
    case VertexDecoding::Kind::kCusp:
      return "cusp";
    case VertexDecoding::Kind::kBoundary:
      return "boundary";
    case VertexDecoding::Kind::kPuncture:
      return "puncture";
  }
  return {};
}

std::string ToString(EdgeDecoding::Kind kind) {
  switch (kind) {
    case EdgeDecoding::Kind::kConePoints:
      return "cone_points";
    case EdgeDecoding::Kind::kCuspAnnulus:
      return "cusp_annulus";
    case EdgeDecoding::Kind::kRemoved:
      return "removed";
  }
  return {};
}

VertexDecoding DecodeVertex(const ExtIndex& p, const ExtIndex& q, const ExtIndex& r) {
  using Kind = VertexDecoding::Kind;
  std::array<ExtIndex, 3> t = {p, q, r};
  std::sort(t.begin(), t.end());
  if (t[2].is_inf_bar()) return {Kind::kBoundary, ""};
  if (t[2].is_inf()) {
    if (t[1].is_finite() && t[0] == Two() && t[1] == Two()) return {Kind::kPuncture, ""};
    return {Kind::kBoundary, ""};
  }
  long a = t[0].value(), b = t[1].value(), c = t[2].value();
  std::string triple = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ")";
  int sign = SphericalSign(a, b, c);
  if (sign < 0) return {Kind::kBoundary, ""};
  if (sign == 0) return {Kind::kCusp, triple};
  if (a == 1 || b == 1) return {Kind::kSingularPoint, "C" + std::to_string(c)};
  if (a == 2 && b == 2) return {Kind::kSingularPoint, "D" + std::to_string(2 * c)};
  if (c == 3) return {Kind::kSingularPoint, "A4"};
  if (c == 4) return {Kind::kSingularPoint, "S4"};
  return {Kind::kSingularPoint, "A5"};
}

EdgeDecoding DecodeEdge(const ExtIndex& label) {
  if (label.is_inf()) return {EdgeDecoding::Kind::kCuspAnnulus, 0};
  if (label.is_inf_bar()) return {EdgeDecoding::Kind::kRemoved, 0};
  return {EdgeDecoding::Kind::kConePoints, label.value()};
}

OrbifoldDescriptor OrbifoldOf(const PresentationInstance& presentation) {
  OrbifoldDescriptor out;
  out.graph = Template(presentation);
  for (std::size_t i = 0; i < out.graph.vertices.size(); ++i) {
    auto l = out.graph.IncidentLabels(static_cast<int>(i));
    if (l.size() != 3) {
      throw Error("UnmappedSchema", "template vertex is not trivalent");
    }
    out.vertex_decodings.push_back(DecodeVertex(l[0], l[1], l[2]));
  }
  for (const auto& e : out.graph.edges) out.edge_decodings.push_back(DecodeEdge(e.label));
  return out;
}

std::vector<std::string> StructuralViolations(const SingularGraph& graph) {
  std::vector<std::string> out;
  const int nv = static_cast<int>(graph.vertices.size());
  for (std::size_t i = 0; i < graph.edges.size(); ++i) {
    const auto& e = graph.edges[i];
    const std::string tag = "edge " + std::to_string(i);
    if ((e.from < 0) != (e.to < 0) || e.from >= nv || e.to >= nv) {
      out.push_back(tag + " has a dangling endpoint");
      continue;
    }
    if (e.label.is_finite() && e.label.value() < 2) {
      out.push_back(tag + " has label below 2");
    }
    if (e.fat != IsFatEdge(e.label)) out.push_back(tag + " fatness disagrees with label");
    if (e.fat && e.from >= 0 &&
        (!graph.vertices[static_cast<std::size_t>(e.from)].fat ||
         !graph.vertices[static_cast<std::size_t>(e.to)].fat)) {
      out.push_back(tag + " is fat but has a thin endpoint");
    }
  }
  for (int v = 0; v < nv; ++v) {
    const auto& vert = graph.vertices[static_cast<std::size_t>(v)];
    auto l = graph.IncidentLabels(v);
    if (l.size() != 3) {
      out.push_back("vertex " + vert.name + " has degree " + std::to_string(l.size()));
      continue;
    }
    if (!vert.fat) {
      bool finite = l[0].is_finite() && l[1].is_finite() && l[2].is_finite();
      if (!finite || SphericalSign(l[0].value(), l[1].value(), l[2].value()) <= 0) {
        out.push_back("thin vertex " + vert.name + " is not spherical");
      }
    }
  }
  return out;
}

std::string ToEdgeList(const SingularGraph& graph) {
  std::string out;
  auto name = [&](int v) {
    return v < 0 ? std::string("o") : graph.vertices[static_cast<std::size_t>(v)].name;
  };
  for (const auto& e : graph.edges) {
    out += name(e.from) + "-" + name(e.to) + " " + e.label.ToString();
    if (e.fat) out += " fat";
    if (!e.fiber.empty()) out += " " + e.fiber;
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json ToJson(const OrbifoldDescriptor& orbifold) {
  const SingularGraph& g = orbifold.graph;
  nlohmann::ordered_json j;
  j["template"] = g.template_name;
  j["ambient"] = g.ambient.ToString();
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    nlohmann::ordered_json v;
    v["id"] = g.vertices[i].name;
    v["fat"] = g.vertices[i].fat;
    const auto& d = orbifold.vertex_decodings[i];
    v["decoding"] = ToString(d.kind);
    if (!d.detail.empty()) v["detail"] = d.detail;
    vertices.push_back(v);
  }
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    nlohmann::ordered_json r;
    if (e.from < 0) {
      r["circle"] = true;
    } else {
      r["from"] = g.vertices[static_cast<std::size_t>(e.from)].name;
      r["to"] = g.vertices[static_cast<std::size_t>(e.to)].name;
    }
    r["label"] = e.label.ToString();
    r["fat"] = e.fat;
    if (!e.fiber.empty()) r["fiber"] = e.fiber;
    const auto& d = orbifold.edge_decodings[i];
    r["decoding"] = ToString(d.kind);
    if (d.kind == EdgeDecoding::Kind::kConePoints) r["order"] = d.order;
    edges.push_back(r);
  }
  j["vertices"] = vertices;
  j["edges"] = edges;
  return j;
}

}  // namespace kleinian_rp
