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

#include "kleinian_rp/expressions.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

namespace kleinian_rp {

namespace {

[[noreturn]] void Bad(std::string_view text, const std::string& why) {
  throw Error("ParseError", "cannot parse '" + std::string(text) + "': " + why);
}

Real Number(std::string_view text, const std::string& s) {
  if (s.empty()) Bad(text, "empty number");
  char* end = nullptr;
  Real v = std::strtold(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) Bad(text, "bad number '" + s + "'");
  return v;
}

long Integer(std::string_view text, const std::string& s) {
  Real v = Number(text, s);
  if (v != std::floor(v) || std::fabs(v) > 1e9L) Bad(text, "'" + s + "' is not an integer");
  return static_cast<long>(v);
}

std::map<std::string, std::string> Args(std::string_view text, std::string_view body) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  std::string b(body);
  while (start < b.size()) {
    std::size_t comma = b.find(',', start);
    if (comma == std::string::npos) comma = b.size();
    std::string item = b.substr(start, comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) Bad(text, "expected key=value in '" + item + "'");
    if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      Bad(text, "duplicate key '" + item.substr(0, eq) + "'");
    }
    start = comma + 1;
  }
  return out;
}

void OnlyKeys(std::string_view text, const std::map<std::string, std::string>& args,
              std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : args) {
    bool ok = false;
    for (const char* key : keys) ok = ok || k == key;
    if (!ok) Bad(text, "unexpected key '" + k + "'");
  }
}

}  // namespace

ParsedParameter EvaluateExpression(std::string_view text) {
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return {Number(text, std::string(text)), ""};
  std::string_view kind = text.substr(0, colon);
  std::string_view body = text.substr(colon + 1);
  const Real s5 = std::sqrt(5.0L);
  ParsedParameter out;
  out.provenance = std::string(text);
  if (kind == "golden") {
    if (body == "+") {
      out.value = (s5 + 1.0L) / 2.0L;
    } else if (body == "-") {
      out.value = (s5 - 1.0L) / 2.0L;
    } else {
      Bad(text, "golden takes + or -");
    }
    return out;
  }
  auto args = Args(text, body);
  auto need = [&](const char* key) {
    auto it = args.find(key);
    if (it == args.end()) Bad(text, std::string("missing ") + key);
    return it->second;
  };
  if (kind == "sin2") {
    OnlyKeys(text, args, {"n", "q"});
    long n = Integer(text, need("n"));
    long q = args.count("q") ? Integer(text, args["q"]) : 1;
    if (n < 1) Bad(text, "n must be positive");
    Real s = std::sin(static_cast<Real>(q) * kPi / static_cast<Real>(n));
    out.value = -4.0L * s * s;
  } else if (kind == "cos2pi") {
    OnlyKeys(text, args, {"m", "add"});
    long m = Integer(text, need("m"));
    if (m < 1) Bad(text, "m must be positive");
    Real add = args.count("add") ? Number(text, args["add"]) : 0.0L;
    out.value = 2.0L * std::cos(2.0L * kPi / static_cast<Real>(m)) + add;
  } else if (kind == "sqrt5") {
    OnlyKeys(text, args, {"a", "b", "c"});
    Real a = Number(text, need("a"));
    Real b = Number(text, need("b"));
    Real c = args.count("c") ? Number(text, args["c"]) : 1.0L;
    if (c == 0) Bad(text, "c must be non-zero");
    out.value = (a + b * s5) / c;
  } else {
    Bad(text, "unknown expression kind '" + std::string(kind) + "'");
  }
  return out;
}

}  // namespace kleinian_rp
