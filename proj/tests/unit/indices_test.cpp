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

#include <cmath>

#include <gtest/gtest.h>

#include "kleinian_rp/indices.hpp"
#include "oracle_values.hpp"

namespace kleinian_rp {
namespace {

TEST(ExtIndex, ParseAndPrint) {
  EXPECT_EQ(ExtIndex::Parse("5"), ExtIndex::Finite(5));
  EXPECT_EQ(ExtIndex::Parse("inf"), ExtIndex::Inf());
  EXPECT_EQ(ExtIndex::Parse("inf_bar"), ExtIndex::InfBar());
  EXPECT_FALSE(ExtIndex::Parse("1").has_value());
  EXPECT_FALSE(ExtIndex::Parse("x").has_value());
  EXPECT_EQ(ExtIndex::Finite(12).ToString(), "12");
  EXPECT_EQ(ExtIndex::Inf().ToString(), "inf");
  EXPECT_EQ(ExtIndex::InfBar().ToString(), "inf_bar");
}

TEST(ExtIndex, Ordering) {
  EXPECT_LT(ExtIndex::Finite(3), ExtIndex::Finite(4));
  EXPECT_LT(ExtIndex::Finite(100000), ExtIndex::Inf());
  EXPECT_LT(ExtIndex::Inf(), ExtIndex::InfBar());
}

TEST(ExtIndex, GcdAndDivide) {
  EXPECT_EQ(Gcd(ExtIndex::Finite(6), 4), 2);
  EXPECT_EQ(Gcd(ExtIndex::Inf(), 4), 4);
  EXPECT_EQ(Gcd(ExtIndex::InfBar(), 2), 2);
  EXPECT_EQ(Divide(ExtIndex::Finite(8), 2), ExtIndex::Finite(4));
  EXPECT_FALSE(Divide(ExtIndex::Finite(7), 2).has_value());
  EXPECT_EQ(Divide(ExtIndex::Inf(), 2), ExtIndex::Inf());
  EXPECT_EQ(Divide(ExtIndex::InfBar(), 2), ExtIndex::InfBar());
  EXPECT_DOUBLE_EQ(static_cast<double>(ExtIndex::Finite(4).Reciprocal()), 0.25);
  EXPECT_EQ(ExtIndex::Inf().Reciprocal(), 0);
}

TEST(UPoint, TMap) {
  EXPECT_EQ(TOf(UPoint::Angle(5)), ExtIndex::Finite(5));
  EXPECT_EQ(TOf(UPoint::Zero()), ExtIndex::Inf());
  EXPECT_EQ(TOf(UPoint::Positive(0.7L)), ExtIndex::InfBar());
  EXPECT_EQ(UPointOf(ExtIndex::InfBar(), 0.7L), UPoint::Positive(0.7L));
  EXPECT_EQ(UPointOf(ExtIndex::Finite(4), 0), UPoint::Angle(4));
  EXPECT_NEAR(UPoint::Angle(4).Cosh2(), 0.5L, 1e-18L);
  EXPECT_NEAR(UPoint::Positive(0.7L).Cosh(), std::cosh(0.7L), 1e-18L);
}

TEST(Parity, Admits) {
  EXPECT_TRUE(ParityAdmits(Parity::kEven, ExtIndex::Finite(6)));
  EXPECT_FALSE(ParityAdmits(Parity::kEven, ExtIndex::Finite(7)));
  EXPECT_TRUE(ParityAdmits(Parity::kOdd, ExtIndex::Finite(7)));
  EXPECT_TRUE(ParityAdmits(Parity::kEven, ExtIndex::Inf()));
  EXPECT_FALSE(ParityAdmits(Parity::kOdd, ExtIndex::InfBar()));
  EXPECT_TRUE(ParityAdmits(Parity::kAny, ExtIndex::InfBar()));
}

TEST(MatchCosh2, FiniteFromOracle) {
  auto m = MatchCosh2(oracle::kCosSquaredPiOver7, Parity::kAny, ExtIndex::Finite(2), 1e-9L);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->u, UPoint::Angle(7));
  EXPECT_EQ(m->t, ExtIndex::Finite(7));
}

TEST(MatchCosh2, BoundaryAndContinuum) {
  auto zero = MatchCosh2(1.0L, Parity::kAny, ExtIndex::Finite(2), 1e-9L);
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->u, UPoint::Zero());
  EXPECT_EQ(zero->t, ExtIndex::Inf());

  auto pos = MatchCosh2(2.0L, Parity::kAny, ExtIndex::Finite(2), 1e-9L);
  ASSERT_TRUE(pos.has_value());
  EXPECT_EQ(pos->t, ExtIndex::InfBar());
  EXPECT_NEAR(pos->u.d(), std::acosh(std::sqrt(2.0L)), 1e-15L);
}

TEST(MatchCosh2, NonIntegerIndexRejected) {
  // cos^2(pi/p) = 0.875 gives p = 8.69..., see the oracle.
  EXPECT_GT(std::fabs(oracle::kPHatForSevenEighths - std::round(oracle::kPHatForSevenEighths)), 0.3L);
  EXPECT_FALSE(MatchCosh2(0.875L, Parity::kAny, ExtIndex::Finite(2), 1e-9L).has_value());
}

TEST(MatchCosh2, ParityAndMinimum) {
  Real w = std::pow(std::cos(kPi / 6), 2);
  EXPECT_TRUE(MatchCosh2(w, Parity::kEven, ExtIndex::Finite(3), 1e-9L).has_value());
  EXPECT_FALSE(MatchCosh2(w, Parity::kOdd, ExtIndex::Finite(3), 1e-9L).has_value());
  EXPECT_FALSE(MatchCosh2(w, Parity::kAny, ExtIndex::Finite(7), 1e-9L).has_value());
  EXPECT_FALSE(MatchCosh2(1.0L, Parity::kOdd, ExtIndex::Finite(2), 1e-9L).has_value());
  EXPECT_FALSE(MatchCosh2(3.0L, Parity::kOdd, ExtIndex::Finite(2), 1e-9L).has_value());
}

TEST(MatchCosh2, PMaxCapsSearch) {
  Real w = std::pow(std::cos(kPi / 40), 2);
  EXPECT_TRUE(MatchCosh2(w, Parity::kAny, ExtIndex::Finite(2), 1e-9L, 50).has_value());
  EXPECT_FALSE(MatchCosh2(w, Parity::kAny, ExtIndex::Finite(2), 1e-9L, 30).has_value());
}

TEST(MatchCosh2, NegativeSquare) {
  try {
    MatchCosh2(-0.1L, Parity::kAny, ExtIndex::Finite(2), 1e-9L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NegativeSquare");
  }
}

TEST(MatchCosh, RecoversAngle) {
  auto m = MatchCosh(std::cos(kPi / 9), Parity::kAny, ExtIndex::Finite(2), 1e-9L);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->t, ExtIndex::Finite(9));
}

}  // namespace
}  // namespace kleinian_rp
