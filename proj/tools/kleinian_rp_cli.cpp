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

// kleinian-rp: classify, enumerate and verify RP groups from the command line.
// Exit codes: 0 discrete, 1 not discrete, 2 parse error, 3 out of scope,
// 4 certificate failure (verify only).

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kleinian_rp/classifier.hpp"
#include "kleinian_rp/expressions.hpp"
#include "kleinian_rp/report.hpp"

namespace {

using namespace kleinian_rp;

struct ParamFlags {
  std::string beta;
  std::string beta_prime;
  std::string gamma;
};

struct CommonFlags {
  std::string format = "json";
  std::string config_path;
  double tol = 0;
  long p_max = 0;
  std::string p11_convention;
};

void AddParamFlags(CLI::App* cmd, ParamFlags& p) {
  cmd->add_option("--beta,--beta-expr", p.beta,
                  "beta = tr^2 f - 4; number or expression such as sin2:n=5")
      ->required();
  cmd->add_option("--beta-prime,--beta-prime-expr", p.beta_prime,
                  "beta' = tr^2 g - 4; number or expression")
      ->required();
  cmd->add_option("--gamma,--gamma-expr", p.gamma,
                  "gamma = tr[f,g] - 2; number or expression")
      ->required();
}

void AddCommonFlags(CLI::App* cmd, CommonFlags& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(formats))
      ->default_val(formats.front());
  cmd->add_option("--config", c.config_path, "JSON config file");
  cmd->add_option("--tol", c.tol, "family match tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--p-max", c.p_max, "largest finite index")->check(CLI::Range(3L, 1000000L));
  cmd->add_option("--p11-convention", c.p11_convention, "P11 index convention")
      ->check(CLI::IsMember({"proof", "theorem"}));
}

Config LoadConfig(const CommonFlags& c) {
  Config config;
  if (const char* env = std::getenv("KLEINIAN_RP_CONFIG"); env && *env) {
    config = LoadConfigFile(env, config);
  }
  if (!c.config_path.empty()) config = LoadConfigFile(c.config_path, config);
  if (c.tol > 0) config.tol.match = c.tol;
  if (c.p_max > 0) config.p_max = c.p_max;
  if (c.p11_convention == "proof") config.p11_convention = P11Convention::kProof;
  if (c.p11_convention == "theorem") config.p11_convention = P11Convention::kTheorem;
  return config;
}

ParameterTriple ParseTriple(const ParamFlags& p) {
  ParameterTriple t;
  ParsedParameter b = EvaluateExpression(p.beta);
  ParsedParameter bp = EvaluateExpression(p.beta_prime);
  ParsedParameter g = EvaluateExpression(p.gamma);
  t.beta = b.value;
  t.beta_prime = bp.value;
  t.gamma = g.value;
  t.provenance = {b.provenance, bp.provenance, g.provenance};
  return t;
}

int EmitReport(const Report& report, const std::string& format) {
  if (format == "text") {
    std::cout << ReportText(report);
  } else {
    std::cout << DumpJson(report.json);
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discreteness, presentations and certificates for RP groups"};
  app.set_version_flag("--version", KLEINIAN_RP_VERSION_STRING);
  app.require_subcommand(1);

  ParamFlags classify_params, verify_params;
  CommonFlags classify_common, verify_common, enum_common;

  CLI::App* classify = app.add_subcommand("classify", "decide discreteness of a triple");
  AddParamFlags(classify, classify_params);
  AddCommonFlags(classify, classify_common, {"json", "text"});

  CLI::App* verify = app.add_subcommand("verify", "classify and certify on matrices");
  AddParamFlags(verify, verify_params);
  AddCommonFlags(verify, verify_common, {"json", "text"});
  std::string certify = "all";
  verify->add_option("--certify", certify, "certificates to compute")
      ->check(CLI::IsMember({"geometry", "presentation", "all"}))
      ->default_val("all");

  CLI::App* enumerate = app.add_subcommand("enumerate", "generate triples of a family");
  std::string family_name;
  std::vector<std::string> ranges;
  enumerate->add_option("--family", family_name, "family id, D1..D3 or P1..P19")->required();
  enumerate->add_option("--range", ranges, "KEY=SPEC, e.g. m=7..20 or t_u=3,5,inf");
  AddCommonFlags(enumerate, enum_common, {"csv", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParseError;
  }

  try {
    if (*classify || *verify) {
      const bool is_verify = static_cast<bool>(*verify);
      const CommonFlags& common = is_verify ? verify_common : classify_common;
      Config config = LoadConfig(common);
      ParameterTriple triple = ParseTriple(is_verify ? verify_params : classify_params);
      ReportOptions options;
      if (is_verify) {
        options.certify_geometry = certify != "presentation";
        options.certify_presentation = certify != "geometry";
      }
      return EmitReport(BuildReport(triple, config, options), common.format);
    }
    Config config = LoadConfig(enum_common);
    auto family = ParseFamily(family_name);
    if (!family) throw Error("ParseError", "unknown family '" + family_name + "'");
    IndexRanges parsed;
    for (const auto& r : ranges) {
      auto eq = r.find('=');
      if (eq == std::string::npos) throw Error("InvalidRange", "expected KEY=SPEC: " + r);
      parsed[r.substr(0, eq)] = ParseRange(r.substr(eq + 1));
    }
    auto points = EnumerateFamily(*family, parsed);
    if (enum_common.format == "json") {
      std::cout << DumpJson(EnumerationJson(points, config));
    } else {
      std::cout << EnumerationCsv(points, config);
    }
    return kExitDiscrete;
  } catch (const Error& e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return kExitParseError;
  }
}
