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

#include "rows.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace kleinian_rp {

namespace {

constexpr std::array<const char*, kFamilyCount> kNames = {
    "D1",  "D2",  "D3",  "P1",  "P2",  "P3",  "P4",  "P5",
    "P6",  "P7",  "P8",  "P9",  "P10", "P11", "P12", "P13",
    "P14", "P15", "P16", "P17", "P18", "P19"};

// 1/n + 1/t < 1/2 in exact integer arithmetic.
bool BelowHalf(long n, const ExtIndex& t) {
  if (!t.is_finite()) return n > 2;
  long k = t.value();
  return 2 * (n + k) < n * k;
}

bool AtLeast(const ExtIndex& t, long k) { return !(t < ExtIndex::Finite(k)); }

Real Cos2Pi(long m) { return std::cos(2.0L * kPi / static_cast<Real>(m)); }

const UPoint& Need(const std::optional<UPoint>& p, const char* what) {
  if (!p) throw Error("InvalidRange", std::string("missing ") + what);
  return *p;
}

ExtIndex NeedIndex(const FamilyMatch& match, const char* name) {
  auto idx = match.Index(name);
  if (!idx) throw Error("InvalidRange", std::string("missing index ") + name);
  return *idx;
}

}  // namespace

namespace rows {

Real BetaOfOrder(long n) {
  Real s = std::sin(kPi / static_cast<Real>(n));
  return -4.0L * s * s;
}

Real Sqrt5() { return std::sqrt(5.0L); }

Real RowS(Real beta, Real gamma, long n) {
  Real c = std::cos(kPi / static_cast<Real>(n));
  Real gb = gamma - beta;
  return -2.0L * (gb * gb * c + gamma * (gamma + beta)) / (gamma * beta);
}

Real RowT(Real beta, long n) {
  Real c = std::cos(kPi / static_cast<Real>(n));
  Real b2 = beta + 2.0L;
  return -2.0L * b2 * b2 * c / (beta + 1.0L) -
         2.0L * (beta * beta + 6.0L * beta + 4.0L) / beta;
}

long FixedOrder(Family family) {
  switch (family) {
    case Family::kD3:
    case Family::kP9:
    case Family::kP10:
    case Family::kP11:
    case Family::kP12:
    case Family::kP13:
    case Family::kP14:
      return 3;
    case Family::kP3:
      return 4;
    case Family::kP15:
    case Family::kP16:
    case Family::kP17:
    case Family::kP18:
    case Family::kP19:
      return 5;
    default:
      return 0;
  }
}

FamilyMatch Make(Family family, long n, std::optional<UPoint> u,
                 std::optional<UPoint> v, std::optional<ExtIndex> m,
                 Real free_beta_prime) {
  FamilyMatch match;
  match.family = family;
  match.n = n;
  match.u = u;
  match.v = v;
  match.free_beta_prime = free_beta_prime;
  if (u) match.indices.push_back({"t_u", TOf(*u)});
  if (v) match.indices.push_back({"t_v", TOf(*v)});
  if (m) match.indices.push_back({"m", *m});
  return match;
}

Real TripleDistance(const ParameterTriple& a, const ParameterTriple& b) {
  return std::max({std::fabs(a.beta - b.beta),
                   std::fabs(a.beta_prime - b.beta_prime),
                   std::fabs(a.gamma - b.gamma)});
}

}  // namespace rows

std::string ToString(Family family) {
  return kNames[static_cast<std::size_t>(family)];
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (name == kNames[i]) return static_cast<Family>(i);
  }
  return std::nullopt;
}

std::vector<Family> AllFamilies() {
  std::vector<Family> out;
  for (int i = 0; i < kFamilyCount; ++i) out.push_back(static_cast<Family>(i));
  return out;
}

bool IsDisjointFamily(Family family) {
  return family == Family::kD1 || family == Family::kD2 ||
         family == Family::kD3;
}

std::optional<ExtIndex> FamilyMatch::Index(std::string_view name) const {
  for (const auto& idx : indices) {
    if (idx.name == name) return idx.value;
  }
  return std::nullopt;
}

bool RowAdmits(const FamilyMatch& match) {
  const long n = match.n;
  const long fixed = rows::FixedOrder(match.family);
  if (fixed != 0 && n != fixed) return false;
  if (n < 3) return false;
  const bool odd = n % 2 == 1;
  auto t_u = match.Index("t_u");
  auto t_v = match.Index("t_v");
  auto m = match.Index("m");
  switch (match.family) {
    case Family::kD1:
      return t_u && AtLeast(*t_u, 3);
    case Family::kD2:
      return odd && n >= 5 && t_u && AtLeast(*t_u, 4);
    case Family::kD3:
      return t_u && AtLeast(*t_u, 3);
    case Family::kP1:
    case Family::kP2: {
      if (odd || n < 4 || !t_u || !t_v) return false;
      Parity parity = match.family == Family::kP1 ? Parity::kEven : Parity::kOdd;
      return ParityAdmits(parity, *t_u) && BelowHalf(n, *t_u) &&
             AtLeast(*t_v, 3);
    }
    case Family::kP3:
      return m && m->is_finite() && m->value() >= 5 && m->value() % 2 == 1;
    case Family::kP4:
    case Family::kP5: {
      if (!odd || !t_u || !t_v) return false;
      Parity parity = match.family == Family::kP4 ? Parity::kEven : Parity::kOdd;
      return ParityAdmits(parity, *t_u) && BelowHalf(n, *t_u) &&
             AtLeast(*t_v, 2);
    }
    case Family::kP6:
      return odd && n >= 7 && t_v && AtLeast(*t_v, 2);
    case Family::kP7:
    case Family::kP8:
      return odd && n >= 5 && n % 3 != 0;
    case Family::kP9:
      return m && m->is_finite() && m->value() >= 7 && Gcd(*m, 2) == 1;
    case Family::kP10:
      return m && m->is_finite() && m->value() >= 8 && Gcd(*m, 6) == 2;
    case Family::kP11:
      return m && m->is_finite() && m->value() >= 7 && Gcd(*m, 4) <= 2;
    default:
      return true;
  }
}

ParameterTriple RowTriple(const FamilyMatch& match) {
  if (!RowAdmits(match)) {
    throw Error("InvalidRange",
                "index tuple violates the conditions of " + ToString(match.family));
  }
  const long n = match.n;
  const Real s5 = rows::Sqrt5();
  const Real beta = rows::BetaOfOrder(n);
  const Real cn = std::cos(kPi / static_cast<Real>(n));
  ParameterTriple t;
  t.beta = beta;
  switch (match.family) {
    case Family::kD1:
      t.gamma = -4.0L * Need(match.u, "u").Cosh2();
      t.beta_prime = match.free_beta_prime;
      break;
    case Family::kD2:
      t.gamma = -(beta + 2.0L) * (beta + 2.0L);
      t.beta_prime = 4.0L * (beta + 4.0L) * Need(match.u, "u").Cosh2() - 4.0L;
      break;
    case Family::kD3:
      t.beta = -3.0L;
      t.gamma = (s5 - 3.0L) / 2.0L;
      t.beta_prime =
          2.0L * (7.0L + 3.0L * s5) * Need(match.u, "u").Cosh2() - 4.0L;
      break;
    case Family::kP1:
    case Family::kP2: {
      Real g = 4.0L * Need(match.u, "u").Cosh2() + beta;
      Real cv2 = Need(match.v, "v").Cosh2();
      Real coeff = match.family == Family::kP1 ? 4.0L / g : 4.0L * (g - beta) / g;
      t.gamma = g;
      t.beta_prime = coeff * cv2 - 4.0L * g / beta;
      break;
    }
    case Family::kP3: {
      Real g = 2.0L * Cos2Pi(NeedIndex(match, "m").value());
      t.beta = -2.0L;
      t.gamma = g;
      t.beta_prime = g * g + 4.0L * g;
      break;
    }
    case Family::kP4:
    case Family::kP5: {
      Real g = 4.0L * Need(match.u, "u").Cosh2() + beta;
      Real cv = Need(match.v, "v").Cosh();
      Real s = rows::RowS(beta, g, n);
      t.gamma = g;
      t.beta_prime = match.family == Family::kP4
                         ? 2.0L / g * (cv - cn) + s
                         : 2.0L * (g - beta) / g * cv + s;
      break;
    }
    case Family::kP6: {
      Real b2 = beta + 2.0L;
      t.gamma = (beta + 4.0L) * (beta + 1.0L);
      t.beta_prime = 2.0L * b2 * b2 / (beta + 1.0L) * Need(match.v, "v").Cosh() +
                     rows::RowT(beta, n);
      break;
    }
    case Family::kP7:
      t.gamma = beta + 3.0L;
      t.beta_prime = 2.0L / beta * ((beta - 3.0L) * cn - 2.0L * beta - 3.0L);
      break;
    case Family::kP8:
      t.gamma = 2.0L * (beta + 3.0L);
      t.beta_prime = -6.0L / beta * (2.0L * cn + beta + 2.0L);
      break;
    case Family::kP9:
    case Family::kP10: {
      Real g = 2.0L * Cos2Pi(NeedIndex(match, "m").value()) - 1.0L;
      t.beta = -3.0L;
      t.gamma = g;
      t.beta_prime = match.family == Family::kP9
                         ? 2.0L / g * (g * g + 2.0L * g + 2.0L)
                         : g * g + 4.0L * g;
      break;
    }
    case Family::kP11: {
      Real g = 2.0L * Cos2Pi(NeedIndex(match, "m").value());
      t.beta = -3.0L;
      t.gamma = g;
      t.beta_prime = 2.0L * g;
      break;
    }
    case Family::kP12:
      t = {-3.0L, s5, (s5 + 1.0L) / 2.0L, {}};
      break;
    case Family::kP13:
      t = {-3.0L, s5, (s5 - 1.0L) / 2.0L, {}};
      break;
    case Family::kP14:
      t = {-3.0L, s5 - 1.0L, (s5 - 1.0L) / 2.0L, {}};
      break;
    case Family::kP15:
      t = {(s5 - 5.0L) / 2.0L, s5, (s5 - 1.0L) / 2.0L, {}};
      break;
    case Family::kP16:
      t = {(s5 - 5.0L) / 2.0L, (3.0L * s5 - 1.0L) / 2.0L, (s5 - 1.0L) / 2.0L, {}};
      break;
    case Family::kP17:
      t = {(s5 - 5.0L) / 2.0L, 3.0L * (s5 + 1.0L) / 2.0L, (s5 - 1.0L) / 2.0L, {}};
      break;
    case Family::kP18:
      t = {(s5 - 5.0L) / 2.0L, 3.0L * (s5 + 1.0L) / 2.0L, (s5 + 1.0L) / 2.0L, {}};
      break;
    case Family::kP19:
      t = {(s5 - 5.0L) / 2.0L, (5.0L * s5 + 9.0L) / 2.0L, s5 + 2.0L, {}};
      break;
  }
  return t;
}

}  // namespace kleinian_rp
