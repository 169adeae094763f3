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

// Prints one PASS/FAIL line per acceptance criterion. With
// --allow-known-failures the exit status ignores failures listed in
// kKnownFailures; the printed lines are unchanged.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "family_grid.hpp"
#include "kleinian_rp/geometry.hpp"
#include "kleinian_rp/orbifolds.hpp"
#include "kleinian_rp/report.hpp"
#include "kleinian_rp/verify.hpp"

namespace kleinian_rp {
namespace {

using testing::FullGrid;
using testing::GridPoints;

struct Outcome {
  std::set<std::string> failing;
  std::string summary;
};

// criterion -> labels whose failure is documented and expected.
const std::map<int, std::set<std::string>> kKnownFailures = {
    {1, {"P19"}},
    {3, {"P19"}},
};

const Real kSqrt5 = std::sqrt(5.0L);

std::string Join(const std::set<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::string Fmt(const char* format, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

bool IsFixedRow(Family f) { return f >= Family::kP12; }

FamilyMatch FixedRow(Family f) {
  FamilyMatch m;
  m.family = f;
  m.n = f <= Family::kP14 ? 3 : 5;
  return m;
}

Real HalfTraceW(const RealizedPair& p) {
  Moebius w = p.g * p.f * p.g.Inverse() * p.f;
  return std::abs(w.Trace()) / 2;
}

Moebius Commutator(const RealizedPair& p) {
  return p.f * p.g * p.f.Inverse() * p.g.Inverse();
}

// Fixed rows are classified from the row triple so that rows skipped by
// enumeration still count.
std::vector<EnumeratedPoint> RoundTripPoints(Family f) {
  if (IsFixedRow(f)) {
    FamilyMatch m = FixedRow(f);
    return {{RowTriple(m), m}};
  }
  return GridPoints(f);
}

Outcome TableRoundTrip() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::size_t total = 0;
  for (Family f : AllFamilies()) {
    auto pts = RoundTripPoints(f);
    std::size_t need = IsFixedRow(f) ? 1 : 5;
    bool ok = pts.size() >= need;
    for (const auto& p : pts) {
      Real residual = 1;
      ok = testing::RoundTrips(p, &residual) && residual < 1e-9L && ok;
    }
    total += pts.size();
    if (!ok) o.failing.insert(ToString(f));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5) o.failing.insert("runtime");
  o.summary = std::to_string(total) + " points, " + Fmt("%.1f ms", secs * 1e3);
  return o;
}

Outcome NegativeControls() {
  Outcome o;
  // Round-robin over families so every row contributes.
  std::map<Family, std::vector<EnumeratedPoint>> by_family;
  for (const auto& p : FullGrid()) {
    if (testing::AllFinite(p.match)) by_family[p.match.family].push_back(p);
  }
  std::vector<EnumeratedPoint> picked;
  for (std::size_t i = 0; picked.size() < 50; ++i) {
    bool any = false;
    for (auto& [f, pts] : by_family) {
      if (i < pts.size() && picked.size() < 50) {
        picked.push_back(pts[i]);
        any = true;
      }
    }
    if (!any) break;
  }
  for (const auto& p : picked) {
    ParameterTriple t = p.triple;
    t.gamma += 1e-3L;
    if (Classify(t).kind != Verdict::Kind::kNotDiscrete) o.failing.insert(ToString(p.match.family));
  }
  if (picked.size() < 50) o.failing.insert("sample size");
  o.summary = std::to_string(picked.size()) + " perturbed points";
  return o;
}

Outcome FixedRows() {
  Outcome o;
  const std::map<Family, std::string> expected = {
      {Family::kP12, "H[2;2,3;5]"}, {Family::kP13, "H[2;2,3;5]"}, {Family::kP14, "Tet[4,5;3]"},
      {Family::kP15, "H[2;2,3;5]"}, {Family::kP16, "Tet[3,3;5]"}, {Family::kP17, "H[2;2,5;3]"},
      {Family::kP18, "H[2;2,5;3]"}, {Family::kP19, "H[2;2,3;5]"},
  };
  // Exact triples written out independently of the row table.
  const std::map<Family, std::array<Real, 3>> triples = {
      {Family::kP12, {-3, kSqrt5, (kSqrt5 + 1) / 2}},
      {Family::kP13, {-3, kSqrt5, (kSqrt5 - 1) / 2}},
      {Family::kP14, {-3, kSqrt5 - 1, (kSqrt5 - 1) / 2}},
      {Family::kP15, {(kSqrt5 - 5) / 2, kSqrt5, (kSqrt5 - 1) / 2}},
      {Family::kP16, {(kSqrt5 - 5) / 2, (3 * kSqrt5 - 1) / 2, (kSqrt5 - 1) / 2}},
      {Family::kP17, {(kSqrt5 - 5) / 2, 3 * (kSqrt5 + 1) / 2, (kSqrt5 - 1) / 2}},
      {Family::kP18, {(kSqrt5 - 5) / 2, 3 * (kSqrt5 + 1) / 2, (kSqrt5 + 1) / 2}},
      {Family::kP19, {(kSqrt5 - 5) / 2, (5 * kSqrt5 + 9) / 2, kSqrt5 + 2}},
  };
  for (const auto& [f, t] : triples) {
    Verdict v = Classify({t[0], t[1], t[2], {}});
    bool ok = false;
    for (const auto& m : v.matches) {
      if (m.family == f && m.residual < 1e-10L) {
        ok = PresentationOf(m).Name() == expected.at(f);
      }
    }
    if (!ok) o.failing.insert(ToString(f));
  }
  o.summary = std::to_string(triples.size()) + " fixed rows";
  return o;
}

Outcome RelatorCertificates() {
  Outcome o;
  std::map<std::string, int> passed;
  const std::set<std::string> wanted = {"GT", "Tet3", "PH", "P", "S2", "S3", "GTet2", "R"};
  for (const auto& p : FullGrid()) {
    PresentationInstance pres = PresentationOf(p.match);
    std::string schema = ToString(pres.schema);
    if (!wanted.count(schema)) continue;
    if (schema == "GTet2" && p.match.family != Family::kP5) continue;
    GeneratorWordTable words = GeneratorWords(p.match);
    if (!words.total()) continue;
    RealizedPair pair = Realize(p.triple);
    bool ok = true;
    for (const auto& r : pres.relators) {
      if (r.exponent.is_inf_bar()) continue;
      std::vector<Moebius> images;
      for (const auto& w : words.words) images.push_back(w->Evaluate({pair.f, pair.g}));
      Moebius base = r.word.Evaluate(images);
      if (r.exponent.is_inf()) {
        ok = ok && std::fabs(std::abs(base.Trace()) - 2) < 1e-8L && ResidualToIdentity(base) > 1e-8L;
      } else {
        ok = ok && ResidualToIdentity(base.Power(r.exponent.value())) < 1e-8L;
      }
    }
    if (ok) {
      ++passed[schema];
    } else {
      o.failing.insert(schema);
    }
  }
  for (const auto& s : wanted) {
    if (passed[s] < 5) o.failing.insert(s + "(<5)");
    o.summary += (o.summary.empty() ? "" : " ") + s + "=" + std::to_string(passed[s]);
  }
  return o;
}

Outcome SquareRoots() {
  Outcome o;
  std::vector<EnumeratedPoint> pts;
  for (Family f : {Family::kD1, Family::kD2, Family::kD3}) {
    auto g = GridPoints(f);
    pts.insert(pts.end(), g.begin(), g.end());
  }
  int checked = 0;
  for (const auto& p : pts) {
    RealizedPair pair = Realize(p.triple);
    Moebius h = SqrtCommutator(pair);
    Moebius k = Commutator(pair);
    Moebius hg = h * pair.g;
    bool ok = std::min((h * h).DistanceTo(k, 1), (h * h).DistanceTo(k, -1)) < 1e-8L &&
              ResidualToIdentity(hg * hg) < 1e-8L;
    Certificate c = CertifySquareRoot(pair, p.match);
    ok = ok && c.pass;
    if (!ok) o.failing.insert(ToString(p.match.family) + " n=" + std::to_string(p.match.n));
    ++checked;
  }
  if (checked < 30) o.failing.insert("sample size");
  o.summary = std::to_string(checked) + " disjoint-axes points";
  return o;
}

Outcome GeometricConstants() {
  Outcome o;
  int checked = 0;
  auto check = [&](const std::string& label, const ParameterTriple& t, Real expected) {
    Real got = HalfTraceW(Realize(t));
    if (std::fabs(got - expected) >= 1e-8L) o.failing.insert(label);
    ++checked;
  };
  for (long n : {5L, 7L, 8L}) {
    // Row constants evaluated directly; n = 8 lies outside the row's
    // parity condition.
    Real s = std::sin(kPi / static_cast<Real>(n));
    Real beta = -4 * s * s;
    Real c = std::cos(kPi / static_cast<Real>(n));
    check("P8 n=" + std::to_string(n),
          {beta, -6 / beta * (2 * c + beta + 2), 2 * (beta + 3), {}}, 2 * c * c);
  }
  check("P12", {-3, kSqrt5, (kSqrt5 + 1) / 2, {}}, (3 + kSqrt5) / 4);
  check("P19", {(kSqrt5 - 5) / 2, (5 * kSqrt5 + 9) / 2, kSqrt5 + 2, {}}, (5 + kSqrt5) / 4);
  for (long r : {7L, 9L, 11L}) {
    Real g = 2 * std::cos(2 * kPi / static_cast<Real>(r));
    Real c = std::cos(kPi / static_cast<Real>(r));
    check("P11 r=" + std::to_string(r), {-3, 2 * g, g, {}}, 2 * c * c - 0.5L);
  }
  for (Family f : {Family::kP1, Family::kP2}) {
    for (const auto& p : GridPoints(f)) {
      auto t_u = p.match.Index("t_u");
      if (!t_u || !t_u->is_finite()) continue;
      Real expected = std::fabs(std::cos(2 * kPi / static_cast<Real>(t_u->value())));
      check(ToString(f) + " t_u=" + t_u->ToString(), p.triple, expected);
    }
  }
  o.summary = std::to_string(checked) + " realized samples";
  return o;
}

Outcome GramSignatures() {
  Outcome o;
  std::vector<TetSchema> schemas = {
      TetSchema::Of(2, 3, 5, 2, 3, 2), TetSchema::Of(2, 2, 3, 2, 5, 3),
      TetSchema::Of(2, 3, 5, 2, 2, 4), TetSchema::Of(2, 3, 5, 2, 2, 5)};
  for (long m = 5; m <= 15; m += 2) schemas.push_back(TetSchema::Of(2, 2, 4, 2, 3, m));
  for (long n : {5L, 7L, 8L}) schemas.push_back(TetSchema::Of(2, 3, n, 2, 3, n));
  for (long half : {4L, 5L, 7L, 8L, 10L}) schemas.push_back(TetSchema::Of(2, 3, half, 2, 3, 3));
  auto with_distance = [&](TetSchema s, Real cosh_d) {
    for (std::size_t slot = 0; slot < 6; ++slot) {
      TetSchema t = s;
      t.angles[slot] = {ExtIndex::InfBar(), std::acosh(cosh_d)};
      schemas.push_back(t);
    }
  };
  for (long n : {5L, 7L, 11L, 13L}) {
    Real c = std::cos(kPi / static_cast<Real>(n));
    schemas.push_back(TetSchema::Of(2, 2, 4, 2, n, 4));
    with_distance(TetSchema::Of(2, 2, 4, 2, n, 4), 2 * c * c);
  }
  for (long r : {7L, 9L, 11L}) {
    Real c = std::cos(kPi / static_cast<Real>(r));
    schemas.push_back(TetSchema::Of(2, 3, r, 2, 2, 4));
    with_distance(TetSchema::Of(2, 3, r, 2, 2, 4), 2 * c * c - 0.5L);
  }
  for (const auto& s : schemas) {
    Signature sig = SignatureOf(GramOf(s), 1e-9L);
    if (sig.positive != 3 || sig.negative != 1) o.failing.insert(s.Name());
  }
  o.summary = std::to_string(schemas.size()) + " schemas";
  return o;
}

Outcome ProofIdentities() {
  Outcome o;
  Real worst = 0;
  int checked = 0;
  auto check = [&](const char* id, const std::map<std::string, Real>& params) {
    Real r = ProofIdentityResidual(id, params);
    worst = std::max(worst, r);
    if (!(r < 1e-11L)) o.failing.insert(id);
    ++checked;
  };
  for (int i = 0; i < 100; ++i) check("eq1", {{"d", 3.0L * i / 99}});
  for (int p = 2; p < 102; ++p) check("eq2", {{"p", static_cast<Real>(p)}});
  for (const char* id : {"cosh2T", "cosh2T_beta", "beta_prime_T"}) {
    for (int n = 3; n <= 5; ++n) {
      for (int q = 2; q < 36; ++q) check(id, {{"n", n}, {"q", q}});
    }
  }
  o.summary = std::to_string(checked) + " evaluations, max residual " + Fmt("%.1e", static_cast<double>(worst));
  return o;
}

Outcome OrbifoldRules() {
  Outcome o;
  int graphs = 0;
  for (const auto& p : FullGrid()) {
    for (auto form : {PresentationForm::kKleinian, PresentationForm::kAbstract}) {
      try {
        PresentationInstance pres = PresentationOf(p.match, form);
        OrbifoldDescriptor d = OrbifoldOf(pres);
        if (!StructuralViolations(d.graph).empty() ||
            d.vertex_decodings.size() != d.graph.vertices.size() ||
            d.edge_decodings.size() != d.graph.edges.size()) {
          o.failing.insert(pres.Name());
        }
        ++graphs;
      } catch (const std::exception& e) {
        o.failing.insert(ToString(p.match.family) + ": " + e.what());
      }
    }
  }
  o.summary = std::to_string(graphs) + " graphs";
  return o;
}

std::string Capture(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

Outcome Determinism(const std::string& cli) {
  Outcome o;
  const std::vector<std::string> inputs = {
      "--beta -3 --beta-prime 1 --gamma -1",
      "--beta -2 --beta-prime 3 --gamma 1",
      "--beta -3 --beta-prime 1 --gamma -3.5",
      "--beta-expr sin2:n=5 --beta-prime sqrt5:a=0,b=1 --gamma golden:+",
  };
  for (const auto& in : inputs) {
    std::string a, b;
    if (cli.empty()) {
      // In-process fallback when the CLI was not built.
      ParameterTriple t{-3, 1, -1, {}};
      a = DumpJson(BuildReport(t, Config{}).json);
      b = DumpJson(BuildReport(t, Config{}).json);
    } else {
      std::string cmd = "'" + cli + "' classify " + in + " 2>&1";
      a = Capture(cmd);
      b = Capture(cmd);
    }
    if (a.empty() || a != b) o.failing.insert(in);
  }
  o.summary = std::to_string(inputs.size()) + (cli.empty() ? " in-process reports" : " CLI inputs run twice");
  return o;
}

}  // namespace
}  // namespace kleinian_rp

int main(int argc, char** argv) {
  using namespace kleinian_rp;
  bool allow_known = false;
  std::string cli;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--allow-known-failures") == 0) {
      allow_known = true;
    } else if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
      cli = argv[++i];
    }
  }

  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  static std::string cli_path;
  cli_path = cli;
  const Criterion criteria[] = {
      {1, "table round-trip", TableRoundTrip},
      {2, "negative controls", NegativeControls},
      {3, "fixed-constant rows", FixedRows},
      {4, "relator certificates", RelatorCertificates},
      {5, "square-root theorem", SquareRoots},
      {6, "geometric constants", GeometricConstants},
      {7, "gram signatures", GramSignatures},
      {8, "proof identities", ProofIdentities},
      {9, "orbifold structural rules", OrbifoldRules},
      {10, "determinism", [] { return Determinism(cli_path); }},
  };

  int strict_failures = 0;
  int unexpected_failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failing.insert(std::string("exception: ") + e.what());
    }
    bool pass = o.failing.empty();
    std::string line = "criterion " + std::to_string(c.id) + ": " + (pass ? "PASS" : "FAIL") +
                       " " + c.name + " (" + o.summary + ")";
    if (!pass) {
      ++strict_failures;
      line += " failing: " + Join(o.failing);
      auto known = kKnownFailures.find(c.id);
      bool all_known = known != kKnownFailures.end();
      for (const auto& f : o.failing) all_known = all_known && known->second.count(f);
      if (all_known) {
        line += " [known failure]";
      } else {
        ++unexpected_failures;
      }
    }
    std::printf("%s\n", line.c_str());
  }
  std::fflush(stdout);
  return (allow_known ? unexpected_failures : strict_failures) == 0 ? 0 : 1;
}
