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

// Machine-readable reports (schema "report_v1"). Output is byte-stable:
// keys keep insertion order and floats print as %.16e.

#ifndef KLEINIAN_RP_REPORT_HPP_
#define KLEINIAN_RP_REPORT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kleinian_rp/classifier.hpp"
#include "kleinian_rp/verify.hpp"

namespace kleinian_rp {

inline constexpr const char* kReportSchema = "report_v1";

enum ExitCode : int {
  kExitDiscrete = 0,
  kExitNotDiscrete = 1,
  kExitParseError = 2,
  kExitOutOfScope = 3,
  kExitCertificateFailure = 4,
};

struct ReportOptions {
  bool certify_presentation = false;
  bool certify_geometry = false;
};

struct Report {
  nlohmann::ordered_json json;
  Verdict verdict;
  bool certificates_pass = true;
  int exit_code = kExitDiscrete;
};

Report BuildReport(const ParameterTriple& raw, const Config& config,
                   const ReportOptions& options = {});

nlohmann::ordered_json ToJson(const ParameterTriple& triple);
nlohmann::ordered_json ToJson(const FamilyMatch& match);
nlohmann::ordered_json ToJson(const Certificate& certificate);

// Two-space indented JSON with %.16e floats; non-finite floats print null.
std::string DumpJson(const nlohmann::ordered_json& json);

// Short human-readable summary of a report.
std::string ReportText(const Report& report);

// One row per enumerated point.
std::string EnumerationCsv(const std::vector<EnumeratedPoint>& points,
                           const Config& config = {});
nlohmann::ordered_json EnumerationJson(const std::vector<EnumeratedPoint>& points,
                                       const Config& config = {});

std::string FormatReal(Real value);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_REPORT_HPP_
