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

// Discreteness decision for RP groups generated by a primitive elliptic f
// and a hyperbolic g with coplanar axes.
//
// Families D1..D3 cover disjoint axes (gamma < 0); P1..P19 cover axes
// meeting at a non-right angle (0 < gamma < -beta beta' / 4). Each family
// is a closed-form row (beta, gamma, beta') in the order n of f and a few
// indices. Matching inverts the row for its indices, snaps them, and then
// re-evaluates the row forward; the forward residual decides.

#ifndef KLEINIAN_RP_CLASSIFIER_HPP_
#define KLEINIAN_RP_CLASSIFIER_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kleinian_rp/algebra.hpp"
#include "kleinian_rp/config.hpp"
#include "kleinian_rp/indices.hpp"

namespace kleinian_rp {

enum class Family {
  kD1, kD2, kD3,
  kP1, kP2, kP3, kP4, kP5, kP6, kP7, kP8, kP9, kP10,
  kP11, kP12, kP13, kP14, kP15, kP16, kP17, kP18, kP19
};

inline constexpr int kFamilyCount = 22;

std::string ToString(Family family);
std::optional<Family> ParseFamily(std::string_view name);
std::vector<Family> AllFamilies();
bool IsDisjointFamily(Family family);

struct NamedIndex {
  std::string name;  // "t_u", "t_v" or "m"
  ExtIndex value;
};

struct FamilyMatch {
  Family family = Family::kD1;
  long n = 0;  // order of f
  std::vector<NamedIndex> indices;
  std::optional<UPoint> u;
  std::optional<UPoint> v;
  // beta' is a free parameter in D1; the row does not constrain it.
  Real free_beta_prime = 0;
  Real residual = 0;

  std::optional<ExtIndex> Index(std::string_view name) const;
};

struct Verdict {
  enum class Kind { kDiscrete, kNotDiscrete, kOutOfScope };
  Kind kind = Kind::kOutOfScope;
  std::vector<FamilyMatch> matches;     // row order, Discrete only
  std::optional<FamilyMatch> nearest;   // NotDiscrete diagnostics
  std::string reason;
  ParameterTriple normalized;
  RegimeResult regime;
};

std::string ToString(Verdict::Kind kind);

// Full decision: element recognition, primitive normalization, regime
// gate and family matching.
Verdict Classify(const ParameterTriple& triple, const Config& config = {});

// Preconditions: triple normalized, regime already decided.
Verdict ClassifyDisjoint(const ParameterTriple& triple, long n,
                         const Config& config = {});
Verdict ClassifyIntersecting(const ParameterTriple& triple, long n,
                             const Config& config = {});

// Forward evaluation of a family row. Raises Error("InvalidRange") when the
// match violates the row's side conditions.
ParameterTriple RowTriple(const FamilyMatch& match);

// Side conditions of the row (parity, gcd, the 1/n + 1/t(u) < 1/2 bound).
bool RowAdmits(const FamilyMatch& match);

// Index ranges for enumeration. Keys are "n", "t_u", "t_v", "m" and, for
// D1, "beta_prime". Aliases: p, q, r -> t_u; u -> t_u; v -> t_v.
struct IndexValue {
  std::optional<ExtIndex> index;  // absent for non-integer numbers
  Real d = 0.5L;                  // distance for inf_bar
  Real real_value = 0;            // numeric value, used for beta_prime
};
using IndexRanges = std::map<std::string, std::vector<IndexValue>>;

struct EnumeratedPoint {
  ParameterTriple triple;
  FamilyMatch match;
};

// Deterministic: cartesian product in key order, each list sorted.
// Tuples violating row conditions or landing outside the row's axis regime
// are skipped. Missing keys take per-family defaults. Raises Error("InvalidRange")
// for unknown keys.
std::vector<EnumeratedPoint> EnumerateFamily(Family family,
                                             const IndexRanges& ranges);

// Parses "a..b", "v1,v2", "inf", "inf_bar[:d]" (and mixtures).
std::vector<IndexValue> ParseRange(std::string_view text);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_CLASSIFIER_HPP_
