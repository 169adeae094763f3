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

// Extended indices {2,3,...} plus two infinite markers, and the
// encoding of intersect / parallel / disjoint by a point u.

#ifndef KLEINIAN_RP_INDICES_HPP_
#define KLEINIAN_RP_INDICES_HPP_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "kleinian_rp/config.hpp"

namespace kleinian_rp {

class ExtIndex {
 public:
  enum class Kind { kFinite, kInf, kInfBar };

  // Finite indices must be >= 1; 1 appears only as an intermediate
  // quotient and is rejected by Parse.
  static ExtIndex Finite(long k);
  static ExtIndex Inf() { return ExtIndex(Kind::kInf, 0); }
  static ExtIndex InfBar() { return ExtIndex(Kind::kInfBar, 0); }

  // Accepts "k", "inf", "inf_bar" (the report strings).
  static std::optional<ExtIndex> Parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_inf() const { return kind_ == Kind::kInf; }
  bool is_inf_bar() const { return kind_ == Kind::kInfBar; }
  // Precondition: is_finite().
  long value() const;

  // 1/k for finite k, 0 otherwise.
  Real Reciprocal() const;

  std::string ToString() const;

  // InfBar > Inf > every finite index.
  std::strong_ordering operator<=>(const ExtIndex& other) const;
  bool operator==(const ExtIndex& other) const = default;

 private:
  ExtIndex(Kind kind, long value) : kind_(kind), value_(value) {}
  Kind kind_;
  long value_;
};

// gcd(Inf, k) = gcd(InfBar, k) = k.
long Gcd(const ExtIndex& a, long k);

// Inf/k = Inf, InfBar/k = InfBar, Finite(m)/k only when k divides m.
std::optional<ExtIndex> Divide(const ExtIndex& a, long k);

class UPoint {
 public:
  enum class Kind { kAngle, kZero, kPositive };

  static UPoint Angle(long p);
  static UPoint Zero() { return UPoint(Kind::kZero, 0, 0); }
  static UPoint Positive(Real d);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  Real d() const { return d_; }

  // cos(pi/p), 1 or cosh(d).
  Real Cosh() const;
  Real Cosh2() const;

  bool operator==(const UPoint& other) const = default;

 private:
  UPoint(Kind kind, long p, Real d) : kind_(kind), p_(p), d_(d) {}
  Kind kind_;
  long p_;
  Real d_;
};

ExtIndex TOf(const UPoint& u);

// Inverse of TOf for the canonical point: Angle(p), Zero, Positive(d).
UPoint UPointOf(const ExtIndex& t, Real d_if_inf_bar);

enum class Parity { kAny, kEven, kOdd };

// True when gcd(t, 2) matches the constraint (even means gcd = 2).
bool ParityAdmits(Parity parity, const ExtIndex& t);

struct Cosh2Match {
  UPoint u;
  ExtIndex t;
};

// Recovers u from w = cosh^2(u). Returns nullopt when no admissible
// index is found. Raises Error("NegativeSquare") for w < -tol.
std::optional<Cosh2Match> MatchCosh2(Real w, Parity parity, ExtIndex min_t,
                                     Real tol, long p_max = 1000);

// Same for w = cosh(u), which must be >= 0 on the admissible set.
std::optional<Cosh2Match> MatchCosh(Real w, Parity parity, ExtIndex min_t,
                                    Real tol, long p_max = 1000);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_INDICES_HPP_
