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

#ifndef KLEINIAN_RP_SRC_ROWS_HPP_
#define KLEINIAN_RP_SRC_ROWS_HPP_

#include <optional>

#include "kleinian_rp/classifier.hpp"

namespace kleinian_rp::rows {

Real BetaOfOrder(long n);
Real Sqrt5();

// The auxiliary row constants of the odd-n block.
Real RowS(Real beta, Real gamma, long n);
Real RowT(Real beta, long n);

// Fixed n for families that pin it, 0 otherwise.
long FixedOrder(Family family);

// Assembles a match and fills the named index list from u, v, m.
FamilyMatch Make(Family family, long n, std::optional<UPoint> u,
                 std::optional<UPoint> v, std::optional<ExtIndex> m,
                 Real free_beta_prime = 0);

// max |component difference|.
Real TripleDistance(const ParameterTriple& a, const ParameterTriple& b);

}  // namespace kleinian_rp::rows

#endif  // KLEINIAN_RP_SRC_ROWS_HPP_
