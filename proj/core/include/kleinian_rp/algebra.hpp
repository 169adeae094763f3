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

#ifndef KLEINIAN_RP_ALGEBRA_HPP_
#define KLEINIAN_RP_ALGEBRA_HPP_

#include <array>
#include <string>

#include "kleinian_rp/config.hpp"

namespace kleinian_rp {

// Unit-determinant 2x2 complex matrix, read as an element of PSL(2,C).
class Moebius {
 public:
  Moebius() : a_(1), b_(0), c_(0), d_(1) {}
  // Raises Error("DeterminantDrift") if |det - 1| >= det_tol.
  Moebius(Complex a, Complex b, Complex c, Complex d, Real det_tol = 1e-10L);

  static Moebius Identity() { return Moebius(); }
  // Scales any invertible matrix to unit determinant.
  static Moebius Normalized(Complex a, Complex b, Complex c, Complex d);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex Trace() const { return a_ + d_; }
  Complex Det() const { return a_ * d_ - b_ * c_; }
  Moebius Inverse() const;
  // Binary powering; determinant drift is removed every 16 products.
  Moebius Power(long k) const;
  Moebius Renormalized() const;

  Moebius operator*(const Moebius& other) const;

  // Max-row-sum norm of (this - sign * other).
  Real DistanceTo(const Moebius& other, int sign) const;

 private:
  struct Raw {};
  Moebius(Raw, Complex a, Complex b, Complex c, Complex d)
      : a_(a), b_(b), c_(c), d_(d) {}
  Complex a_, b_, c_, d_;
};

// min(||W - I||, ||W + I||).
Real ResidualToIdentity(const Moebius& w);

// Equality in PSL(2,C).
bool ApproxEqual(const Moebius& m, const Moebius& n, Real eps);

struct ParameterTriple {
  Real beta = 0;
  Real beta_prime = 0;
  Real gamma = 0;
  // Optional symbolic origin of each component, e.g. "sin2:n=5".
  std::array<std::string, 3> provenance;
};

struct PairParameters {
  ParameterTriple triple;  // real parts
  Real im_beta = 0;
  Real im_beta_prime = 0;
  Real im_gamma = 0;
  bool is_real = false;
};

// Raises Error("DegenerateInput") when F or G is +-identity.
PairParameters ParamsOfPair(const Moebius& f, const Moebius& g,
                            const Config& config = {});

struct ElementClass {
  enum class Kind {
    kElliptic,
    kParabolic,
    kHyperbolic,
    kPiLoxodromic,
    kStrictlyLoxodromic,
    kInfiniteOrderElliptic
  };
  Kind kind = Kind::kHyperbolic;
  long n = 0;  // order, elliptic only
  long q = 0;  // rotation index, elliptic only
  bool primitive() const { return kind == Kind::kElliptic && q == 1; }
};

std::string ToString(ElementClass::Kind kind);

// For beta in (-4, 0) recognizes beta = -4 sin^2(q pi / n) with
// gcd(q, n) = 1, q < n/2, n <= config.n_max.
ElementClass ClassifyElement(Real beta, const Config& config = {});

// Replaces f by the primitive power of the same order.
// Raises Error("HalfTurn") for n = 2, Error("NotElliptic") otherwise.
ParameterTriple NormalizePrimitive(const ParameterTriple& triple,
                                   const Config& config = {});

enum class AxisRegime { kDisjointCoplanar, kIntersectingNonOrthogonal, kOutOfScope };

struct RegimeResult {
  AxisRegime regime = AxisRegime::kOutOfScope;
  std::string reason;
};

std::string ToString(AxisRegime regime);

// Precondition: beta in (-4, 0), beta' > 0. Tolerance guards gamma = 0.
RegimeResult ClassifyAxisRegime(const ParameterTriple& triple,
                                const Config& config = {});

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_ALGEBRA_HPP_
