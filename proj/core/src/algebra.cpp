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

#include "kleinian_rp/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace kleinian_rp {

namespace {

Real RowNorm(Complex a, Complex b, Complex c, Complex d) {
  return std::max(std::abs(a) + std::abs(b), std::abs(c) + std::abs(d));
}

Real Beta(long q, long n) {
  Real s = std::sin(kPi * static_cast<Real>(q) / static_cast<Real>(n));
  return -4.0L * s * s;
}

}  // namespace

Moebius::Moebius(Complex a, Complex b, Complex c, Complex d, Real det_tol)
    : a_(a), b_(b), c_(c), d_(d) {
  if (std::abs(Det() - Complex(1)) >= det_tol) {
    throw Error("DeterminantDrift", "matrix does not have unit determinant");
  }
}

Moebius Moebius::Normalized(Complex a, Complex b, Complex c, Complex d) {
  Complex det = a * d - b * c;
  if (std::abs(det) == 0) throw Error("DegenerateInput", "singular matrix");
  Complex s = std::sqrt(det);
  return Moebius(Raw{}, a / s, b / s, c / s, d / s);
}

Moebius Moebius::Inverse() const { return Moebius(Raw{}, d_, -b_, -c_, a_); }

Moebius Moebius::Renormalized() const { return Normalized(a_, b_, c_, d_); }

Moebius Moebius::operator*(const Moebius& o) const {
  return Moebius(Raw{}, a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                 c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Moebius Moebius::Power(long k) const {
  Moebius base = k < 0 ? Inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k)
                          : static_cast<unsigned long>(k);
  Moebius result;
  int products = 0;
  while (e != 0) {
    if (e & 1UL) {
      result = result * base;
      ++products;
    }
    e >>= 1UL;
    if (e != 0) {
      base = base * base;
      ++products;
    }
    if (products >= 16) {
      result = result.Renormalized();
      base = base.Renormalized();
      products = 0;
    }
  }
  return result;
}

Real Moebius::DistanceTo(const Moebius& o, int sign) const {
  Real s = sign >= 0 ? 1.0L : -1.0L;
  return RowNorm(a_ - s * o.a_, b_ - s * o.b_, c_ - s * o.c_, d_ - s * o.d_);
}

Real ResidualToIdentity(const Moebius& w) {
  Moebius id;
  return std::min(w.DistanceTo(id, 1), w.DistanceTo(id, -1));
}

bool ApproxEqual(const Moebius& m, const Moebius& n, Real eps) {
  return std::min(m.DistanceTo(n, 1), m.DistanceTo(n, -1)) < eps;
}

PairParameters ParamsOfPair(const Moebius& f, const Moebius& g,
                            const Config& config) {
  if (ResidualToIdentity(f) < config.tol.eq ||
      ResidualToIdentity(g) < config.tol.eq) {
    throw Error("DegenerateInput", "F or G is the identity");
  }
  Complex tf = f.Trace();
  Complex tg = g.Trace();
  Complex tk = (f * g * f.Inverse() * g.Inverse()).Trace();
  Complex beta = tf * tf - Complex(4);
  Complex beta_prime = tg * tg - Complex(4);
  Complex gamma = tk - Complex(2);
  PairParameters out;
  out.triple.beta = beta.real();
  out.triple.beta_prime = beta_prime.real();
  out.triple.gamma = gamma.real();
  out.im_beta = beta.imag();
  out.im_beta_prime = beta_prime.imag();
  out.im_gamma = gamma.imag();
  out.is_real = std::fabs(out.im_beta) < config.tol.im &&
                std::fabs(out.im_beta_prime) < config.tol.im &&
                std::fabs(out.im_gamma) < config.tol.im;
  return out;
}

std::string ToString(ElementClass::Kind kind) {
  switch (kind) {
    case ElementClass::Kind::kElliptic:
      return "elliptic";
    case ElementClass::Kind::kParabolic:
      return "parabolic";
    case ElementClass::Kind::kHyperbolic:
      return "hyperbolic";
    case ElementClass::Kind::kPiLoxodromic:
      return "pi_loxodromic";
    case ElementClass::Kind::kStrictlyLoxodromic:
      return "strictly_loxodromic";
    case ElementClass::Kind::kInfiniteOrderElliptic:
      return "infinite_order_elliptic";
  }
  return {};
}

ElementClass ClassifyElement(Real beta, const Config& config) {
  using Kind = ElementClass::Kind;
  const Real tol = config.tol.rotation;
  ElementClass out;
  if (!std::isfinite(beta)) {
    out.kind = Kind::kStrictlyLoxodromic;
    return out;
  }
  if (std::fabs(beta) < tol) {
    out.kind = Kind::kParabolic;
    return out;
  }
  if (beta > 0) {
    out.kind = Kind::kHyperbolic;
    return out;
  }
  if (std::fabs(beta + 4.0L) < tol) {
    out.kind = Kind::kElliptic;
    out.n = 2;
    out.q = 1;
    return out;
  }
  if (beta < -4.0L) {
    out.kind = Kind::kPiLoxodromic;
    return out;
  }
  // theta = q/n in (0, 1/2); walk the continued-fraction convergents.
  Real theta = std::asin(std::sqrt(-beta / 4.0L)) / kPi;
  long h_prev = 1, h_prev2 = 0;
  long k_prev = 0, k_prev2 = 1;
  Real x = theta;
  for (int step = 0; step < 64; ++step) {
    Real a_real = std::floor(x);
    if (a_real > static_cast<Real>(config.n_max)) break;
    long a = static_cast<long>(a_real);
    long h = a * h_prev + h_prev2;
    long k = a * k_prev + k_prev2;
    if (k > config.n_max) break;
    if (k >= 3 && 2 * h < k && h >= 1 && std::fabs(Beta(h, k) - beta) < tol) {
      out.kind = Kind::kElliptic;
      out.n = k;
      out.q = h;
      return out;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Real frac = x - a_real;
    if (frac < 1e-30L) break;
    x = 1.0L / frac;
  }
  out.kind = Kind::kInfiniteOrderElliptic;
  return out;
}

ParameterTriple NormalizePrimitive(const ParameterTriple& triple,
                                   const Config& config) {
  ElementClass cls = ClassifyElement(triple.beta, config);
  if (cls.kind != ElementClass::Kind::kElliptic) {
    throw Error("NotElliptic", "f is not an elliptic element of finite order");
  }
  if (cls.n == 2) throw Error("HalfTurn", "f is a half-turn");
  if (cls.q == 1) return triple;
  ParameterTriple out = triple;
  Real beta_primitive = Beta(1, cls.n);
  out.gamma = triple.gamma * beta_primitive / triple.beta;
  out.beta = beta_primitive;
  out.provenance[0] = "primitive power of order " + std::to_string(cls.n);
  return out;
}

std::string ToString(AxisRegime regime) {
  switch (regime) {
    case AxisRegime::kDisjointCoplanar:
      return "disjoint_coplanar";
    case AxisRegime::kIntersectingNonOrthogonal:
      return "intersecting_non_orthogonal";
    case AxisRegime::kOutOfScope:
      return "out_of_scope";
  }
  return {};
}

RegimeResult ClassifyAxisRegime(const ParameterTriple& t, const Config& config) {
  const Real tol = config.tol.match;
  if (!(t.beta > -4.0L && t.beta < 0.0L)) {
    return {AxisRegime::kOutOfScope, "f is not a non-half-turn elliptic"};
  }
  if (!(t.beta_prime > 0.0L)) {
    return {AxisRegime::kOutOfScope, "g is not hyperbolic"};
  }
  if (std::fabs(t.gamma) < tol) {
    return {AxisRegime::kOutOfScope,
            "elementary; f and g have a common fixed point"};
  }
  if (t.gamma < 0) return {AxisRegime::kDisjointCoplanar, ""};
  if (t.gamma < -t.beta * t.beta_prime / 4.0L - tol) {
    return {AxisRegime::kIntersectingNonOrthogonal, ""};
  }
  return {AxisRegime::kOutOfScope, "outside the truly-spatial coplanar regime"};
}

}  // namespace kleinian_rp
