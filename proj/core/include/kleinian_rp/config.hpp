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

#ifndef KLEINIAN_RP_CONFIG_HPP_
#define KLEINIAN_RP_CONFIG_HPP_

#include <complex>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace kleinian_rp {

using Real = long double;
using Complex = std::complex<Real>;

inline constexpr Real kPi = 3.141592653589793238462643383279502884L;

// Numerical thresholds. Every field can be overridden from a config file.
struct Tolerances {
  Real det = 1e-10L;       // |det - 1| after products
  Real eq = 1e-10L;        // equality up to sign
  Real im = 1e-9L;         // imaginary part of a "real" parameter
  Real rotation = 1e-9L;   // rational rotation recognition
  Real cosh2 = 1e-9L;      // match_cosh2 boundary at w = 1
  Real match = 1e-9L;      // family residual
  Real report = 1e-6L;     // near-miss diagnostics
  Real realize = 1e-10L;   // realized parameters vs target
  Real cert = 1e-8L;       // certificate residuals
  Real eig = 1e-9L;        // Gram signature
};

enum class P11Convention { kProof, kTheorem };

struct Config {
  Tolerances tol;
  long n_max = 1000;  // largest rotation order recognized in beta
  long p_max = 1000;  // largest finite index accepted by match_cosh2
  P11Convention p11_convention = P11Convention::kProof;
};

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Reads overrides from a JSON object; unknown keys raise Error("ConfigError").
Config ConfigFromJson(const nlohmann::json& j, Config base = {});
Config LoadConfigFile(const std::string& path, Config base = {});
nlohmann::ordered_json ConfigToJson(const Config& config);

}  // namespace kleinian_rp

#endif  // KLEINIAN_RP_CONFIG_HPP_
