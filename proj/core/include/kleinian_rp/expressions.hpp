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

// Symbolic parameter constants evaluated in extended precision:
//   sin2:n=N[,q=Q]        -4 sin^2(Q pi / N)
//   cos2pi:m=M[,add=A]    2 cos(2 pi / M) + A
//   golden:+ | golden:-   (sqrt5 + 1)/2 | (sqrt5 - 1)/2
//   sqrt5:a=A,b=B[,c=C]   (A + B sqrt5) / C
// Plain decimal numbers are accepted as well.

#ifndef KLEINIAN_RP_EXPRESSIONS_HPP_
#define KLEINIAN_RP_EXPRESSIONS_HPP_

#include <string>
#include <string_view>

#include "kleinian_rp/config.hpp"

namespace kleinian_rp {

struct ParsedParameter {
  Real value = 0;
  std::string provenance;  // empty for plain numbers
};

// Raises Error("ParseError").
ParsedParameter EvaluateExpression(std::string_view text);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_EXPRESSIONS_HPP_
