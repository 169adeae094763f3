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

// Matrix realization of parameter triples and numerical certificates.
//
// Normal form: F = [[l, 1], [0, 1/l]] with l = exp(i pi / n), and
// G = [[v, 0], [c, 1/v]] with v + 1/v = sqrt(beta' + 4). Then
// gamma = c^2 + k c with k = (l - 1/l)(v - 1/v), solved for c.

#ifndef KLEINIAN_RP_VERIFY_HPP_
#define KLEINIAN_RP_VERIFY_HPP_

#include <array>
#include <string>
#include <vector>

#include "kleinian_rp/classifier.hpp"
#include "kleinian_rp/presentations.hpp"

namespace kleinian_rp {

struct RealizedPair {
  Moebius f;
  Moebius g;
  ParameterTriple target;
  ParameterTriple achieved;
  std::array<Real, 3> residuals{};  // |beta|, |beta'|, |gamma| mismatch
};

// Errors: GammaZero, NotPrimitiveElliptic, NotHyperbolic, and
// RealizationDrift when the achieved triple misses by tol.realize.
RealizedPair Realize(const ParameterTriple& triple, const Config& config = {});

// H with H^2 = +-[F,G] and (HG)^2 = +-I. Raises Error("NoAdmissibleRoot").
Moebius SqrtCommutator(const RealizedPair& pair, const Config& config = {});

struct CertificateEntry {
  std::string label;
  std::string kind;  // "identity", "parabolic" or "trace"
  Real residual = 0;
  bool pass = false;
  Real value = 0;     // trace checks: measured |tr|/2
  Real expected = 0;  // trace checks: predicted |tr|/2
};

struct Certificate {
  std::string subject;
  std::vector<CertificateEntry> entries;
  std::vector<std::string> notes;  // uncovered relators, missing words
  bool pass = true;
  bool partial = false;
};

Certificate CertifyPresentation(const RealizedPair& pair,
                                const PresentationInstance& presentation,
                                const GeneratorWordTable& words,
                                const Config& config = {});

// Intersecting families: |tr(G F G^-1 F)| / 2 against the family constant.
// Disjoint families: the square-root certificate.
Certificate CertifyGeometry(const RealizedPair& pair, const FamilyMatch& match,
                            const Config& config = {});

// H^2 = [F,G], (HG)^2 = 1 and the element type recorded by t(u).
Certificate CertifySquareRoot(const RealizedPair& pair, const FamilyMatch& match,
                              const Config& config = {});

// Predicted |tr(G F G^-1 F)| / 2 for an intersecting family match.
Real ExpectedHalfTrace(const FamilyMatch& match);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_VERIFY_HPP_
