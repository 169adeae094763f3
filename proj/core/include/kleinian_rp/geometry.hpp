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

#ifndef KLEINIAN_RP_GEOMETRY_HPP_
#define KLEINIAN_RP_GEOMETRY_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "kleinian_rp/indices.hpp"

namespace kleinian_rp {

// Dihedral angle pi/k between two faces; inf = parallel planes, inf_bar =
// disjoint planes at distance d.
struct TetAngle {
  ExtIndex index = ExtIndex::Finite(2);
  std::optional<Real> distance;
};

// T[p1,p2,p3;q1,q2,q3]: p1..p3 are the angles between face 3 and faces
// 0..2; q_i is the angle on the edge opposite p_i.
struct TetSchema {
  std::array<TetAngle, 6> angles;  // p1, p2, p3, q1, q2, q3

  static TetSchema Of(long p1, long p2, long p3, long q1, long q2, long q3);
  std::string Name() const;
};

using GramMatrix = std::array<std::array<Real, 4>, 4>;

// Raises Error("MissingDistance") for an inf_bar angle without distance.
GramMatrix GramOf(const TetSchema& schema);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

Signature SignatureOf(const GramMatrix& gram, Real eps = 1e-9L);

enum class Hyperbolicity { kHyperbolic, kDegenerate, kNonRealizable };
std::string ToString(Hyperbolicity h);

// (3,1) -> hyperbolic; any zero eigenvalue -> degenerate.
Hyperbolicity HyperbolicityOf(const GramMatrix& gram, Real eps = 1e-9L);

enum class VertexKind { kFinite, kIdeal, kHyperideal };
std::string ToString(VertexKind kind);

// The vertex where the three given faces meet.
VertexKind VertexKindOf(const GramMatrix& gram, std::array<int, 3> faces,
                        Real eps = 1e-9L);

// |lhs - rhs| of a named identity. Ids: "eq1" (d), "eq2" (p), "cosh2T",
// "cosh2T_beta" and "beta_prime_T" (n, q). Raises Error("UnknownIdentity")
// or Error("InvalidRange") outside the identity's domain.
Real ProofIdentityResidual(std::string_view id, const std::map<std::string, Real>& params);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_GEOMETRY_HPP_
