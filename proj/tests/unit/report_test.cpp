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

#include <algorithm>
#include <limits>

#include <gtest/gtest.h>

#include "kleinian_rp/report.hpp"

namespace kleinian_rp {
namespace {

TEST(Report, DiscreteShape) {
  Report r = BuildReport({-3, 1, -1, {}}, Config{});
  EXPECT_EQ(r.exit_code, kExitDiscrete);
  const auto& j = r.json;
  EXPECT_EQ(j["schema"], "report_v1");
  EXPECT_EQ(j["verdict"]["kind"], "discrete");
  EXPECT_EQ(j["regime"]["regime"], "disjoint_coplanar");
  ASSERT_EQ(j["results"].size(), 1u);
  EXPECT_EQ(j["results"][0]["family"], "D1");
  EXPECT_EQ(j["results"][0]["presentation"]["name"], "Tet[3,inf_bar;3]");
  EXPECT_EQ(j["verdict"]["matches"][0]["indices"]["t_u"], "3");
  EXPECT_EQ(j["exit"], "discrete");
}

TEST(Report, ExitCodes) {
  EXPECT_EQ(BuildReport({-3, 1, -3.5L, {}}, Config{}).exit_code, kExitNotDiscrete);
  EXPECT_EQ(BuildReport({-3, 1, 0, {}}, Config{}).exit_code, kExitOutOfScope);
}

TEST(Report, CertificatesAttached) {
  ReportOptions opts{true, true};
  Report r = BuildReport({-3, 1, -1, {}}, Config{}, opts);
  EXPECT_TRUE(r.certificates_pass);
  EXPECT_EQ(r.exit_code, kExitDiscrete);
  EXPECT_TRUE(r.json["results"][0].contains("certificates"));
}

TEST(Report, ByteStable) {
  ParameterTriple t{-2, 3, 1, {}};
  ReportOptions opts{true, true};
  EXPECT_EQ(DumpJson(BuildReport(t, Config{}, opts).json),
            DumpJson(BuildReport(t, Config{}, opts).json));
}

TEST(DumpJson, Formatting) {
  nlohmann::ordered_json j;
  j["b"] = 1.5;
  j["a"] = nlohmann::ordered_json::array({1, "x", nullptr});
  j["e"] = nlohmann::ordered_json::object();
  EXPECT_EQ(DumpJson(j),
            "{\n  \"b\": 1.5000000000000000e+00,\n  \"a\": [\n    1,\n    \"x\",\n    null\n  ],\n"
            "  \"e\": {}\n}\n");
  nlohmann::ordered_json inf;
  inf["x"] = std::numeric_limits<double>::infinity();
  EXPECT_NE(DumpJson(inf).find("null"), std::string::npos);
}

TEST(FormatReal, ScientificSeventeenDigits) {
  EXPECT_EQ(FormatReal(-3.0L), "-3.0000000000000000e+00");
  EXPECT_EQ(FormatReal(0.1L), "1.0000000000000001e-01");
}

TEST(Enumeration, CsvHeaderAndRows) {
  auto pts = EnumerateFamily(Family::kD1, {{"t_u", ParseRange("3,4")}});
  std::string csv = EnumerationCsv(pts);
  EXPECT_EQ(csv.rfind("family,n,indices,beta,beta_prime,gamma,presentation\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  auto j = EnumerationJson(pts);
  EXPECT_EQ(j["points"].size(), 2u);
}

TEST(ReportText, MentionsVerdict) {
  std::string text = ReportText(BuildReport({-3, 1, -1, {}}, Config{}));
  EXPECT_NE(text.find("discrete"), std::string::npos);
  EXPECT_NE(text.find("Tet[3,inf_bar;3]"), std::string::npos);
}

}  // namespace
}  // namespace kleinian_rp
