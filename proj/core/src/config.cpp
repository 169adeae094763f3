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

#include <fstream>
#include <utility>

#include "kleinian_rp/config.hpp"

namespace kleinian_rp {

namespace {

std::pair<const char*, Real Tolerances::*> kTolFields[] = {
    {"det", &Tolerances::det},         {"eq", &Tolerances::eq},
    {"im", &Tolerances::im},           {"rotation", &Tolerances::rotation},
    {"cosh2", &Tolerances::cosh2},     {"match", &Tolerances::match},
    {"report", &Tolerances::report},   {"realize", &Tolerances::realize},
    {"cert", &Tolerances::cert},       {"eig", &Tolerances::eig}};

[[noreturn]] void Bad(const std::string& what) { throw Error("ConfigError", what); }

Real PositiveReal(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number()) Bad(key + " must be a number");
  Real r = v.get<double>();
  if (!(r > 0)) Bad(key + " must be positive");
  return r;
}

long PositiveLong(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long>() < 3) Bad(key + " must be an integer >= 3");
  return v.get<long>();
}

}  // namespace

Config ConfigFromJson(const nlohmann::json& j, Config base) {
  if (!j.is_object()) Bad("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tolerances") {
      if (!value.is_object()) Bad("tolerances must be an object");
      for (const auto& [tk, tv] : value.items()) {
        bool found = false;
        for (const auto& [name, field] : kTolFields) {
          if (tk == name) {
            base.tol.*field = PositiveReal(tv, "tolerances." + tk);
            found = true;
          }
        }
        if (!found) Bad("unknown tolerance '" + tk + "'");
      }
    } else if (key == "n_max") {
      base.n_max = PositiveLong(value, key);
    } else if (key == "p_max") {
      base.p_max = PositiveLong(value, key);
    } else if (key == "p11_index_convention") {
      if (value == "proof") {
        base.p11_convention = P11Convention::kProof;
      } else if (value == "theorem") {
        base.p11_convention = P11Convention::kTheorem;
      } else {
        Bad("p11_index_convention must be 'proof' or 'theorem'");
      }
    } else {
      Bad("unknown config key '" + key + "'");
    }
  }
  return base;
}

Config LoadConfigFile(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) Bad("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    Bad("invalid JSON in " + path + ": " + e.what());
  }
  return ConfigFromJson(j, base);
}

nlohmann::ordered_json ConfigToJson(const Config& config) {
  nlohmann::ordered_json tol;
  for (const auto& [name, field] : kTolFields) {
    tol[name] = static_cast<double>(config.tol.*field);
  }
  nlohmann::ordered_json j;
  j["tolerances"] = tol;
  j["n_max"] = config.n_max;
  j["p_max"] = config.p_max;
  j["p11_index_convention"] =
      config.p11_convention == P11Convention::kProof ? "proof" : "theorem";
  return j;
}

}  // namespace kleinian_rp
