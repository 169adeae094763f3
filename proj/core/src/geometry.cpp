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

#include "kleinian_rp/geometry.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace kleinian_rp {

namespace {

using Mat4 = Eigen::Matrix<Real, 4, 4>;
using Mat3 = Eigen::Matrix<Real, 3, 3>;

// Face pair of each schema slot.
constexpr std::array<std::array<int, 2>, 6> kSlotFaces = {
    {{0, 3}, {1, 3}, {2, 3}, {1, 2}, {0, 2}, {0, 1}}};

Real Entry(const TetAngle& a) {
  if (a.index.is_inf()) return -1.0L;
  if (a.index.is_inf_bar()) {
    if (!a.distance) throw Error("MissingDistance", "inf_bar angle needs a distance");
    return -std::cosh(*a.distance);
  }
  return -std::cos(kPi / static_cast<Real>(a.index.value()));
}

Real Param(const std::map<std::string, Real>& params, const char* key) {
  auto it = params.find(key);
  if (it == params.end()) throw Error("InvalidRange", std::string("missing parameter ") + key);
  return it->second;
}

// cosh T from the triangle chain, for 3 <= n <= 5.
Real CoshT(Real n, Real q) {
  Real sn = std::sin(kPi / n);
  if (!(4.0L * sn * sn > 1.0L)) throw Error("InvalidRange", "chain needs n <= 5");
  Real cos_abe = std::cos(2.0L * kPi / n) / sn;
  Real sin_abe = std::sqrt(1.0L - cos_abe * cos_abe);
  Real cos_abc = 1.0L / (2.0L * sn);
  Real sin_abc = std::sqrt(1.0L - cos_abc * cos_abc);
  Real cosh_ab = std::cos(kPi / q) / sin_abc;
  return sin_abe * cosh_ab;
}

}  // namespace

TetSchema TetSchema::Of(long p1, long p2, long p3, long q1, long q2, long q3) {
  TetSchema s;
  const long v[6] = {p1, p2, p3, q1, q2, q3};
  for (int i = 0; i < 6; ++i) s.angles[static_cast<std::size_t>(i)].index = ExtIndex::Finite(v[i]);
  return s;
}

std::string TetSchema::Name() const {
  std::string out = "T[";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) out += i == 3 ? ";" : ",";
    out += angles[i].index.ToString();
  }
  return out + "]";
}

GramMatrix GramOf(const TetSchema& schema) {
  GramMatrix g{};
  for (int i = 0; i < 4; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0L;
  for (std::size_t s = 0; s < 6; ++s) {
    auto [i, j] = kSlotFaces[s];
    Real e = Entry(schema.angles[s]);
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
  }
  return g;
}

Signature SignatureOf(const GramMatrix& gram, Real eps) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Eigen::SelfAdjointEigenSolver<Mat4> solver(m, Eigen::EigenvaluesOnly);
  Signature sig;
  for (int i = 0; i < 4; ++i) {
    Real ev = solver.eigenvalues()(i);
    if (ev > eps) {
      ++sig.positive;
    } else if (ev < -eps) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

std::string ToString(Hyperbolicity h) {
  switch (h) {
    case Hyperbolicity::kHyperbolic:
      return "hyperbolic";
    case Hyperbolicity::kDegenerate:
      return "degenerate";
    case Hyperbolicity::kNonRealizable:
      return "non_realizable";
  }
  return {};
}

Hyperbolicity HyperbolicityOf(const GramMatrix& gram, Real eps) {
  Signature s = SignatureOf(gram, eps);
  if (s.zero > 0) return Hyperbolicity::kDegenerate;
  if (s.positive == 3 && s.negative == 1) return Hyperbolicity::kHyperbolic;
  return Hyperbolicity::kNonRealizable;
}

std::string ToString(VertexKind kind) {
  switch (kind) {
    case VertexKind::kFinite:
      return "finite";
    case VertexKind::kIdeal:
      return "ideal";
    case VertexKind::kHyperideal:
      return "hyperideal";
  }
  return {};
}

VertexKind VertexKindOf(const GramMatrix& gram, std::array<int, 3> faces, Real eps) {
  Mat3 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = gram[static_cast<std::size_t>(faces[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(faces[static_cast<std::size_t>(j)])];
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat3> solver(m, Eigen::EigenvaluesOnly);
  Real lo = solver.eigenvalues()(0);
  if (lo > eps) return VertexKind::kFinite;
  if (lo >= -eps) return VertexKind::kIdeal;
  return VertexKind::kHyperideal;
}

Real ProofIdentityResidual(std::string_view id, const std::map<std::string, Real>& params) {
  if (id == "eq1") {
    Real d = Param(params, "d");
    Real c = std::cosh(d);
    return std::fabs(-2.0L * std::cosh(2.0L * d) - 2.0L + 4.0L * c * c);
  }
  if (id == "eq2") {
    Real p = Param(params, "p");
    Real c = std::cos(kPi / p);
    return std::fabs(-2.0L * std::cos(2.0L * kPi / p) - 2.0L + 4.0L * c * c);
  }
  if (id == "cosh2T" || id == "cosh2T_beta" || id == "beta_prime_T") {
    Real n = Param(params, "n");
    Real q = Param(params, "q");
    Real ct = CoshT(n, q);
    Real cn = std::cos(kPi / n);
    Real cq = std::cos(kPi / q);
    Real sn = std::sin(kPi / n);
    Real beta = -4.0L * sn * sn;
    if (id == "cosh2T") return std::fabs(ct * ct - 4.0L * cn * cn * cq * cq);
    if (id == "cosh2T_beta") return std::fabs(ct * ct - (beta + 4.0L) * cq * cq);
    return std::fabs(4.0L * (ct * ct - 1.0L) - (4.0L * (beta + 4.0L) * cq * cq - 4.0L));
  }
  throw Error("UnknownIdentity", "unknown identity '" + std::string(id) + "'");
}

}  // namespace kleinian_rp
