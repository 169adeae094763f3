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

#include "kleinian_rp/indices.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace kleinian_rp {

namespace {

// Relative window for accepting p-hat as an integer.
constexpr Real kIntegerWindow = 1e-6L;

}  // namespace

ExtIndex ExtIndex::Finite(long k) {
  if (k < 1) throw Error("InvalidIndex", "finite index must be >= 1");
  return ExtIndex(Kind::kFinite, k);
}

std::optional<ExtIndex> ExtIndex::Parse(std::string_view text) {
  if (text == "inf") return Inf();
  if (text == "inf_bar") return InfBar();
  long k = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, k);
  if (ec != std::errc() || ptr != end || k < 2) return std::nullopt;
  return Finite(k);
}

long ExtIndex::value() const {
  if (!is_finite()) throw Error("InvalidIndex", "index is not finite");
  return value_;
}

Real ExtIndex::Reciprocal() const {
  return is_finite() ? 1.0L / static_cast<Real>(value_) : 0.0L;
}

std::string ExtIndex::ToString() const {
  switch (kind_) {
    case Kind::kFinite:
      return std::to_string(value_);
    case Kind::kInf:
      return "inf";
    case Kind::kInfBar:
      return "inf_bar";
  }
  return {};
}

std::strong_ordering ExtIndex::operator<=>(const ExtIndex& other) const {
  if (kind_ != other.kind_) {
    return static_cast<int>(kind_) <=> static_cast<int>(other.kind_);
  }
  return value_ <=> other.value_;
}

long Gcd(const ExtIndex& a, long k) {
  if (!a.is_finite()) return k;
  return std::gcd(a.value(), k);
}

std::optional<ExtIndex> Divide(const ExtIndex& a, long k) {
  if (k <= 0) return std::nullopt;
  if (!a.is_finite()) return a;
  if (a.value() % k != 0) return std::nullopt;
  return ExtIndex::Finite(a.value() / k);
}

UPoint UPoint::Angle(long p) {
  if (p < 2) throw Error("InvalidIndex", "angle index must be >= 2");
  return UPoint(Kind::kAngle, p, 0);
}

UPoint UPoint::Positive(Real d) {
  if (!(d > 0)) throw Error("InvalidIndex", "distance must be positive");
  return UPoint(Kind::kPositive, 0, d);
}

Real UPoint::Cosh() const {
  switch (kind_) {
    case Kind::kAngle:
      return std::cos(kPi / static_cast<Real>(p_));
    case Kind::kZero:
      return 1.0L;
    case Kind::kPositive:
      return std::cosh(d_);
  }
  return 0;
}

Real UPoint::Cosh2() const {
  Real c = Cosh();
  return c * c;
}

ExtIndex TOf(const UPoint& u) {
  switch (u.kind()) {
    case UPoint::Kind::kAngle:
      return ExtIndex::Finite(u.p());
    case UPoint::Kind::kZero:
      return ExtIndex::Inf();
    case UPoint::Kind::kPositive:
      return ExtIndex::InfBar();
  }
  return ExtIndex::Inf();
}

UPoint UPointOf(const ExtIndex& t, Real d_if_inf_bar) {
  if (t.is_finite()) return UPoint::Angle(t.value());
  if (t.is_inf()) return UPoint::Zero();
  return UPoint::Positive(d_if_inf_bar);
}

bool ParityAdmits(Parity parity, const ExtIndex& t) {
  switch (parity) {
    case Parity::kAny:
      return true;
    case Parity::kEven:
      return Gcd(t, 2) == 2;
    case Parity::kOdd:
      return t.is_finite() && Gcd(t, 2) == 1;
  }
  return false;
}

std::optional<Cosh2Match> MatchCosh2(Real w, Parity parity, ExtIndex min_t,
                                     Real tol, long p_max) {
  if (!std::isfinite(w)) return std::nullopt;
  if (w < -tol) throw Error("NegativeSquare", "cosh^2 target is negative");
  auto accept = [&](UPoint u) -> std::optional<Cosh2Match> {
    ExtIndex t = TOf(u);
    if (!ParityAdmits(parity, t) || t < min_t) return std::nullopt;
    return Cosh2Match{u, t};
  };
  if (std::fabs(w - 1.0L) < tol) return accept(UPoint::Zero());
  if (w > 1.0L) return accept(UPoint::Positive(std::acosh(std::sqrt(w))));
  Real angle = std::acos(std::sqrt(std::max(w, 0.0L)));
  if (!(angle > 0)) return std::nullopt;
  Real p_hat = kPi / angle;
  Real p_round = std::round(p_hat);
  if (std::fabs(p_hat - p_round) >= kIntegerWindow * p_hat) return std::nullopt;
  long p = static_cast<long>(p_round);
  if (p < 2 || p > p_max) return std::nullopt;
  return accept(UPoint::Angle(p));
}

std::optional<Cosh2Match> MatchCosh(Real w, Parity parity, ExtIndex min_t,
                                    Real tol, long p_max) {
  if (!std::isfinite(w) || w < -tol) return std::nullopt;
  Real c = std::max(w, 0.0L);
  // Near w = 1 the squared form halves the distance; test the linear one.
  if (std::fabs(c - 1.0L) < tol) {
    return MatchCosh2(1.0L, parity, min_t, tol, p_max);
  }
  return MatchCosh2(c * c, parity, min_t, tol, p_max);
}

}  // namespace kleinian_rp
