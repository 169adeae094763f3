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

#include "kleinian_rp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kleinian_rp {

namespace {

Real HalfTrace(const Moebius& m) { return std::abs(m.Trace()) / 2.0L; }

void Add(Certificate& cert, CertificateEntry entry, Real tol) {
  entry.pass = std::isfinite(entry.residual) && entry.residual < tol;
  cert.pass = cert.pass && entry.pass;
  cert.entries.push_back(std::move(entry));
}

void AddTrace(Certificate& cert, std::string label, Real value, Real expected,
              Real tol) {
  CertificateEntry e;
  e.label = std::move(label);
  e.kind = "trace";
  e.value = value;
  e.expected = expected;
  e.residual = std::fabs(value - expected);
  Add(cert, std::move(e), tol);
}

// |tr W| = 2 and W != +-I.
void AddParabolic(Certificate& cert, std::string label, const Moebius& w, Real tol) {
  CertificateEntry e;
  e.label = std::move(label);
  e.kind = "parabolic";
  e.value = HalfTrace(w);
  e.expected = 1;
  e.residual = std::fabs(e.value - 1.0L);
  if (!(ResidualToIdentity(w) > tol)) e.residual = std::numeric_limits<Real>::infinity();
  Add(cert, std::move(e), tol);
}

void AddIdentity(Certificate& cert, std::string label, const Moebius& w, Real tol) {
  CertificateEntry e;
  e.label = std::move(label);
  e.kind = "identity";
  e.residual = ResidualToIdentity(w);
  Add(cert, std::move(e), tol);
}

}  // namespace

RealizedPair Realize(const ParameterTriple& triple, const Config& config) {
  ElementClass cls = ClassifyElement(triple.beta, config);
  if (cls.kind != ElementClass::Kind::kElliptic || cls.q != 1 || cls.n < 3) {
    throw Error("NotPrimitiveElliptic", "beta is not -4 sin^2(pi/n) with n >= 3");
  }
  if (!(triple.beta_prime > 0)) throw Error("NotHyperbolic", "beta' must be positive");
  if (std::fabs(triple.gamma) < config.tol.eq) throw Error("GammaZero", "gamma is zero");

  const Real angle = kPi / static_cast<Real>(cls.n);
  const Complex lambda = std::polar(1.0L, angle);
  const Real nu = (std::sqrt(triple.beta_prime + 4.0L) + std::sqrt(triple.beta_prime)) / 2.0L;
  const Complex kappa = (lambda - 1.0L / lambda) * (nu - 1.0L / nu);
  const Complex s = std::sqrt(kappa * kappa + 4.0L * triple.gamma);
  // The root formula that avoids cancellation.
  const Complex c = std::abs(kappa + s) >= std::abs(s - kappa)
                        ? 2.0L * triple.gamma / (kappa + s)
                        : (s - kappa) / 2.0L;

  RealizedPair pair;
  pair.f = Moebius::Normalized(lambda, 1.0L, 0.0L, 1.0L / lambda);
  pair.g = Moebius::Normalized(nu, 0.0L, c, 1.0L / nu);
  pair.target = triple;
  PairParameters p = ParamsOfPair(pair.f, pair.g, config);
  pair.achieved = p.triple;
  pair.achieved.provenance = triple.provenance;
  pair.residuals = {
      std::max(std::fabs(p.triple.beta - triple.beta), std::fabs(p.im_beta)),
      std::max(std::fabs(p.triple.beta_prime - triple.beta_prime),
               std::fabs(p.im_beta_prime)),
      std::max(std::fabs(p.triple.gamma - triple.gamma), std::fabs(p.im_gamma))};
  Real worst = *std::max_element(pair.residuals.begin(), pair.residuals.end());
  if (!(worst < config.tol.realize)) {
    throw Error("RealizationDrift", "realized parameters miss the target");
  }
  return pair;
}

Moebius SqrtCommutator(const RealizedPair& pair, const Config& config) {
  const Moebius& f = pair.f;
  const Moebius& g = pair.g;
  Moebius k = f * g * f.Inverse() * g.Inverse();
  Real best = std::numeric_limits<Real>::infinity();
  Moebius best_h;
  for (Real sign : {1.0L, -1.0L}) {
    Complex rad = sign * k.Trace() + 2.0L;
    if (std::abs(rad) < config.tol.eq) continue;
    Moebius h = Moebius::Normalized(sign * k.a() + 1.0L, sign * k.b(), sign * k.c(),
                                    sign * k.d() + 1.0L);
    Moebius hg = h * g;
    Real r = ResidualToIdentity(hg * hg);
    if (r < best) {
      best = r;
      best_h = h;
    }
  }
  if (!(best < config.tol.cert)) {
    throw Error("NoAdmissibleRoot", "no square root of [f,g] with (hg)^2 = 1");
  }
  return best_h;
}

Certificate CertifyPresentation(const RealizedPair& pair,
                                const PresentationInstance& presentation,
                                const GeneratorWordTable& words, const Config& config) {
  Certificate cert;
  cert.subject = presentation.Name();
  const Real tol = config.tol.cert;
  std::vector<Moebius> images(presentation.generators.size());
  std::vector<bool> known(presentation.generators.size(), false);
  for (std::size_t i = 0; i < presentation.generators.size(); ++i) {
    if (i < words.words.size() && words.words[i]) {
      images[i] = words.words[i]->Evaluate({pair.f, pair.g});
      known[i] = true;
    } else {
      cert.notes.push_back("generator " + presentation.generators[i] +
                           " has no word in f, g");
    }
  }
  for (const Relator& r : presentation.relators) {
    const std::string label = presentation.RelatorText(r);
    bool covered = std::all_of(r.word.syllables().begin(), r.word.syllables().end(),
                               [&](const Syllable& s) {
                                 return known[static_cast<std::size_t>(s.letter)];
                               });
    if (!covered) {
      cert.partial = true;
      cert.notes.push_back("relator " + label + " not covered");
      continue;
    }
    Moebius w = r.word.Evaluate(images);
    if (r.exponent.is_inf()) {
      AddParabolic(cert, label, w, tol);
    } else if (r.exponent.is_finite()) {
      AddIdentity(cert, label, w.Power(r.exponent.value()), tol);
    }
  }
  return cert;
}

Real ExpectedHalfTrace(const FamilyMatch& match) {
  const Real s5 = std::sqrt(5.0L);
  auto cos2pi = [](Real m) { return std::cos(2.0L * kPi / m); };
  auto m_value = [&]() {
    auto m = match.Index("m");
    if (!m || !m->is_finite()) throw Error("InvalidRange", "family needs a finite m");
    return static_cast<Real>(m->value());
  };
  const Real n = static_cast<Real>(match.n);
  switch (match.family) {
    case Family::kP1:
    case Family::kP2:
    case Family::kP4:
    case Family::kP5: {
      if (!match.u) throw Error("InvalidRange", "family needs u");
      return std::fabs(2.0L * match.u->Cosh2() - 1.0L);
    }
    case Family::kP3:
      return cos2pi(m_value());
    case Family::kP6:
      return std::fabs(std::cos(4.0L * kPi / n));
    case Family::kP7:
    case Family::kP18:
      return 0.5L;
    case Family::kP8: {
      Real c = std::cos(kPi / n);
      return 2.0L * c * c;
    }
    case Family::kP9:
    case Family::kP10:
      return std::fabs(cos2pi(m_value()));
    case Family::kP11: {
      Real c = std::cos(kPi / m_value());
      return 2.0L * c * c - 0.5L;
    }
    case Family::kP12:
      return (3.0L + s5) / 4.0L;
    case Family::kP13:
    case Family::kP14:
      return (1.0L + s5) / 4.0L;
    case Family::kP15:
    case Family::kP16:
    case Family::kP17:
      return 0;
    case Family::kP19:
      return (5.0L + s5) / 4.0L;
    default:
      throw Error("Precondition", "not an intersecting-axes family");
  }
}

Certificate CertifySquareRoot(const RealizedPair& pair, const FamilyMatch& match,
                              const Config& config) {
  if (!IsDisjointFamily(match.family)) {
    throw Error("Precondition", "square-root certificate needs a disjoint-axes family");
  }
  Certificate cert;
  cert.subject = ToString(match.family) + " square root";
  const Real tol = config.tol.cert;
  const Moebius& f = pair.f;
  const Moebius& g = pair.g;
  Moebius h = SqrtCommutator(pair, config);
  Moebius k = f * g * f.Inverse() * g.Inverse();
  CertificateEntry sq;
  sq.label = "h^2 = [f,g]";
  sq.kind = "identity";
  sq.residual = std::min((h * h).DistanceTo(k, 1), (h * h).DistanceTo(k, -1));
  Add(cert, sq, tol);
  Moebius hg = h * g;
  AddIdentity(cert, "(hg)^2 = 1", hg * hg, tol);
  if (!match.u) throw Error("InvalidRange", "match lacks u");
  const UPoint& u = *match.u;
  Moebius typed = h;
  std::string label = "|tr h|/2";
  if (match.family != Family::kD1) {
    GeneratorWordTable words = GeneratorWords(match, config);
    Moebius x = words.words.at(0)->Evaluate({f, g});
    Moebius y = words.words.at(1)->Evaluate({f, g});
    typed = x * y.Inverse();
    label = "|tr xy^-1|/2";
  }
  if (u.kind() == UPoint::Kind::kZero) {
    AddParabolic(cert, label, typed, tol);
  } else {
    AddTrace(cert, label, HalfTrace(typed), u.Cosh(), tol);
  }
  return cert;
}

Certificate CertifyGeometry(const RealizedPair& pair, const FamilyMatch& match,
                            const Config& config) {
  if (IsDisjointFamily(match.family)) return CertifySquareRoot(pair, match, config);
  Certificate cert;
  cert.subject = ToString(match.family) + " geometry";
  const Moebius& f = pair.f;
  const Moebius& g = pair.g;
  Moebius w = g * f * g.Inverse() * f;
  const Real expected = ExpectedHalfTrace(match);
  AddTrace(cert, "|tr gfg^-1f|/2", HalfTrace(w), expected, config.tol.cert);
  if (std::fabs(expected - 1.0L) < config.tol.cert) {
    AddParabolic(cert, "gfg^-1f parabolic", w, config.tol.cert);
  }
  return cert;
}

}  // namespace kleinian_rp
