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

#ifndef KLEINIAN_RP_TESTS_FAMILY_GRID_HPP_
#define KLEINIAN_RP_TESTS_FAMILY_GRID_HPP_

#include <random>
#include <vector>

#include "kleinian_rp/algebra.hpp"
#include "kleinian_rp/classifier.hpp"

namespace kleinian_rp::testing {

// Index ranges per family covering finite, inf and inf_bar entries where
// the row permits them.
IndexRanges GridRanges(Family family);

// Enumerated grid points of one family, or of all families in row order.
std::vector<EnumeratedPoint> GridPoints(Family family);
std::vector<EnumeratedPoint> FullGrid();

// Same family, n and named indices.
bool SameMatch(const FamilyMatch& a, const FamilyMatch& b);

// True when the classifier reports the generated match among its matches.
bool RoundTrips(const EnumeratedPoint& point, Real* residual = nullptr);

// True when every named index is finite.
bool AllFinite(const FamilyMatch& match);

// Seeded generators for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Real Uniform(Real lo, Real hi);
  long Int(long lo, long hi);
  Complex ComplexIn(Real radius);
  // Random unit-determinant matrix with entries of modulus <= radius.
  Moebius Matrix(Real radius = 2);

 private:
  std::mt19937_64 engine_;
};

}  // namespace kleinian_rp::testing

#endif  // KLEINIAN_RP_TESTS_FAMILY_GRID_HPP_
