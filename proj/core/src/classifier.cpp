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

#include "kleinian_rp/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "rows.hpp"

namespace kleinian_rp {

namespace {

// Strict candidates come from MatchCosh2; loose ones snap to the nearest
// admissible index and only feed the near-miss diagnostics.
struct Snapper {
  const Config& config;
  bool strict;

  std::vector<UPoint> Cosh2(Real w, Parity parity, long min_t) const {
    if (strict) {
      try {
        auto m = MatchCosh2(w, parity, ExtIndex::Finite(min_t),
                            config.tol.cosh2, config.p_max);
        if (m) return {m->u};
      } catch (const Error&) {
      }
      return {};
    }
    return Loose(w, parity, min_t);
  }

  std::vector<UPoint> Cosh(Real w, Parity parity, long min_t) const {
    if (strict) {
      auto m = MatchCosh(w, parity, ExtIndex::Finite(min_t), config.tol.cosh2,
                         config.p_max);
      if (m) return {m->u};
      return {};
    }
    if (!std::isfinite(w)) return {};
    Real c = std::max(w, 0.0L);
    return Loose(c * c, parity, min_t);
  }

  std::vector<UPoint> Loose(Real w, Parity parity, long min_t) const {
    std::vector<UPoint> out;
    if (!std::isfinite(w)) return out;
    auto admit = [&](const UPoint& u) {
      ExtIndex t = TOf(u);
      if (ParityAdmits(parity, t) && !(t < ExtIndex::Finite(min_t))) {
        out.push_back(u);
      }
    };
    if (w >= 1.0L) {
      admit(w > 1.0L ? UPoint::Positive(std::acosh(std::sqrt(w)))
                     : UPoint::Zero());
      admit(UPoint::Zero());
    }
    Real angle = std::acos(std::sqrt(std::clamp(w, 0.0L, 1.0L)));
    Real p_hat = angle > 0 ? kPi / angle : static_cast<Real>(config.p_max);
    p_hat = std::min(p_hat, static_cast<Real>(config.p_max));
    long lo = static_cast<long>(std::floor(p_hat));
    for (long p = lo - 1; p <= lo + 2; ++p) {
      if (p >= 2 && p <= config.p_max) admit(UPoint::Angle(p));
    }
    return out;
  }
};

class Collector {
 public:
  Collector(const ParameterTriple& target, const Config& config, bool strict)
      : target_(target), config_(config), strict_(strict) {}

  void Offer(FamilyMatch match) {
    if (!RowAdmits(match)) return;
    match.residual = rows::TripleDistance(RowTriple(match), target_);
    if (!std::isfinite(match.residual)) return;
    if (strict_) {
      if (match.residual < config_.tol.match) matches_.push_back(match);
      return;
    }
    if (!best_ || match.residual < best_->residual) best_ = match;
  }

  std::vector<FamilyMatch>& matches() { return matches_; }
  std::optional<FamilyMatch>& best() { return best_; }

 private:
  const ParameterTriple& target_;
  const Config& config_;
  bool strict_;
  std::vector<FamilyMatch> matches_;
  std::optional<FamilyMatch> best_;
};

void ScanDisjoint(const ParameterTriple& t, long n, const Snapper& snap,
                  Collector& out) {
  const Real s5 = rows::Sqrt5();
  for (const UPoint& u : snap.Cosh2(-t.gamma / 4.0L, Parity::kAny, 3)) {
    out.Offer(rows::Make(Family::kD1, n, u, std::nullopt, std::nullopt,
                         t.beta_prime));
  }
  if (n >= 5 && n % 2 == 1) {
    Real w = (t.beta_prime + 4.0L) / (4.0L * (t.beta + 4.0L));
    for (const UPoint& u : snap.Cosh2(w, Parity::kAny, 4)) {
      out.Offer(rows::Make(Family::kD2, n, u, std::nullopt, std::nullopt));
    }
  }
  if (n == 3) {
    Real w = (t.beta_prime + 4.0L) / (2.0L * (7.0L + 3.0L * s5));
    for (const UPoint& u : snap.Cosh2(w, Parity::kAny, 3)) {
      out.Offer(rows::Make(Family::kD3, n, u, std::nullopt, std::nullopt));
    }
  }
}

void ScanEven(const ParameterTriple& t, long n, const Snapper& snap,
              Collector& out) {
  const Real b = t.beta, g = t.gamma, bp = t.beta_prime;
  const Real wu = (g - b) / 4.0L;
  for (const UPoint& u : snap.Cosh2(wu, Parity::kEven, 3)) {
    Real wv = (bp + 4.0L * g / b) * g / 4.0L;
    for (const UPoint& v : snap.Cosh2(wv, Parity::kAny, 3)) {
      out.Offer(rows::Make(Family::kP1, n, u, v, std::nullopt));
    }
  }
  for (const UPoint& u : snap.Cosh2(wu, Parity::kOdd, 3)) {
    Real wv = (bp + 4.0L * g / b) * g / (4.0L * (g - b));
    for (const UPoint& v : snap.Cosh2(wv, Parity::kAny, 3)) {
      out.Offer(rows::Make(Family::kP2, n, u, v, std::nullopt));
    }
  }
  if (n == 4) {
    for (const UPoint& m : snap.Cosh2((g + 2.0L) / 4.0L, Parity::kOdd, 5)) {
      out.Offer(rows::Make(Family::kP3, n, std::nullopt, std::nullopt, TOf(m)));
    }
  }
}

void ScanOdd(const ParameterTriple& t, long n, const Snapper& snap,
             Collector& out) {
  const Real b = t.beta, g = t.gamma, bp = t.beta_prime;
  const Real cn = std::cos(kPi / static_cast<Real>(n));
  const Real wu = (g - b) / 4.0L;
  const Real s = rows::RowS(b, g, n);
  for (const UPoint& u : snap.Cosh2(wu, Parity::kEven, 3)) {
    Real cv = (bp - s) * g / 2.0L + cn;
    for (const UPoint& v : snap.Cosh(cv, Parity::kAny, 2)) {
      out.Offer(rows::Make(Family::kP4, n, u, v, std::nullopt));
    }
  }
  for (const UPoint& u : snap.Cosh2(wu, Parity::kOdd, 3)) {
    Real cv = (bp - s) * g / (2.0L * (g - b));
    for (const UPoint& v : snap.Cosh(cv, Parity::kAny, 2)) {
      out.Offer(rows::Make(Family::kP5, n, u, v, std::nullopt));
    }
  }
  if (n >= 7) {
    Real b2 = b + 2.0L;
    Real cv = (bp - rows::RowT(b, n)) * (b + 1.0L) / (2.0L * b2 * b2);
    for (const UPoint& v : snap.Cosh(cv, Parity::kAny, 2)) {
      out.Offer(rows::Make(Family::kP6, n, std::nullopt, v, std::nullopt));
    }
  }
  out.Offer(rows::Make(Family::kP7, n, std::nullopt, std::nullopt, std::nullopt));
  out.Offer(rows::Make(Family::kP8, n, std::nullopt, std::nullopt, std::nullopt));
  if (n == 3) {
    for (const UPoint& m : snap.Cosh2((g + 3.0L) / 4.0L, Parity::kAny, 7)) {
      out.Offer(rows::Make(Family::kP9, n, std::nullopt, std::nullopt, TOf(m)));
      out.Offer(rows::Make(Family::kP10, n, std::nullopt, std::nullopt, TOf(m)));
    }
    for (const UPoint& m : snap.Cosh2((g + 2.0L) / 4.0L, Parity::kAny, 7)) {
      out.Offer(rows::Make(Family::kP11, n, std::nullopt, std::nullopt, TOf(m)));
    }
  }
  for (Family f : {Family::kP12, Family::kP13, Family::kP14, Family::kP15,
                   Family::kP16, Family::kP17, Family::kP18, Family::kP19}) {
    out.Offer(rows::Make(f, n, std::nullopt, std::nullopt, std::nullopt));
  }
}

using Scan = std::function<void(const ParameterTriple&, long, const Snapper&,
                                Collector&)>;

Verdict RunScan(const ParameterTriple& t, long n, const Config& config,
                const Scan& scan) {
  Verdict verdict;
  verdict.normalized = t;
  Collector strict(t, config, true);
  scan(t, n, Snapper{config, true}, strict);
  if (!strict.matches().empty()) {
    auto& ms = strict.matches();
    std::stable_sort(ms.begin(), ms.end(),
                     [](const FamilyMatch& a, const FamilyMatch& b) {
                       return a.family < b.family;
                     });
    verdict.kind = Verdict::Kind::kDiscrete;
    verdict.matches = ms;
    return verdict;
  }
  verdict.kind = Verdict::Kind::kNotDiscrete;
  verdict.reason = "no family matches within tolerance";
  Collector loose(t, config, false);
  scan(t, n, Snapper{config, false}, loose);
  if (loose.best() && loose.best()->residual < config.tol.report) {
    verdict.nearest = loose.best();
  }
  return verdict;
}

}  // namespace

std::string ToString(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kDiscrete:
      return "discrete";
    case Verdict::Kind::kNotDiscrete:
      return "not_discrete";
    case Verdict::Kind::kOutOfScope:
      return "out_of_scope";
  }
  return {};
}

Verdict ClassifyDisjoint(const ParameterTriple& triple, long n,
                         const Config& config) {
  if (!(triple.gamma < 0)) throw Error("Precondition", "gamma must be negative");
  Verdict v = RunScan(triple, n, config, ScanDisjoint);
  v.regime = {AxisRegime::kDisjointCoplanar, ""};
  return v;
}

Verdict ClassifyIntersecting(const ParameterTriple& triple, long n,
                             const Config& config) {
  if (!(triple.gamma > 0)) throw Error("Precondition", "gamma must be positive");
  if (n < 3) throw Error("Precondition", "order of f must be at least 3");
  Verdict v = RunScan(triple, n, config, n % 2 == 0 ? Scan(ScanEven) : Scan(ScanOdd));
  v.regime = {AxisRegime::kIntersectingNonOrthogonal, ""};
  return v;
}

Verdict Classify(const ParameterTriple& triple, const Config& config) {
  Verdict out;
  out.normalized = triple;
  auto out_of_scope = [&](std::string reason) {
    out.kind = Verdict::Kind::kOutOfScope;
    out.reason = std::move(reason);
    out.regime = {AxisRegime::kOutOfScope, out.reason};
    return out;
  };
  if (!std::isfinite(triple.beta) || !std::isfinite(triple.beta_prime) ||
      !std::isfinite(triple.gamma)) {
    return out_of_scope("parameters must be finite reals");
  }
  ElementClass cls = ClassifyElement(triple.beta, config);
  if (cls.kind == ElementClass::Kind::kInfiniteOrderElliptic) {
    out.kind = Verdict::Kind::kNotDiscrete;
    out.reason = "irrational rotation";
    out.regime = ClassifyAxisRegime(triple, config);
    return out;
  }
  if (cls.kind != ElementClass::Kind::kElliptic) {
    return out_of_scope("f is " + ToString(cls.kind) + ", not elliptic");
  }
  if (cls.n == 2) return out_of_scope("f is a half-turn");
  ParameterTriple normalized = NormalizePrimitive(triple, config);
  out.normalized = normalized;
  RegimeResult regime = ClassifyAxisRegime(normalized, config);
  if (regime.regime == AxisRegime::kOutOfScope) {
    return out_of_scope(regime.reason);
  }
  Verdict v = regime.regime == AxisRegime::kDisjointCoplanar
                  ? ClassifyDisjoint(normalized, cls.n, config)
                  : ClassifyIntersecting(normalized, cls.n, config);
  v.normalized = normalized;
  return v;
}

}  // namespace kleinian_rp
