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
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <set>

#include "kleinian_rp/classifier.hpp"
#include "rows.hpp"

namespace kleinian_rp {

namespace {

std::string Trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<long> ParseLong(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Real> ParseReal(const std::string& s) {
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  Real v = std::strtold(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

[[noreturn]] void Invalid(const std::string& what) {
  throw Error("InvalidRange", what);
}

IndexValue Finite(long k) {
  IndexValue v;
  v.index = ExtIndex::Finite(k);
  v.real_value = static_cast<Real>(k);
  return v;
}

IndexValue ParseAtom(const std::string& atom) {
  if (atom == "inf") {
    IndexValue v;
    v.index = ExtIndex::Inf();
    return v;
  }
  if (atom.rfind("inf_bar", 0) == 0) {
    IndexValue v;
    v.index = ExtIndex::InfBar();
    std::string rest = atom.substr(7);
    if (!rest.empty()) {
      if (rest[0] != ':') Invalid("bad inf_bar entry '" + atom + "'");
      auto d = ParseReal(rest.substr(1));
      if (!d || !(*d > 0)) Invalid("inf_bar distance must be positive");
      v.d = *d;
    }
    return v;
  }
  if (auto k = ParseLong(atom)) {
    if (*k < 1) Invalid("index must be positive: '" + atom + "'");
    return Finite(*k);
  }
  auto r = ParseReal(atom);
  if (!r) Invalid("cannot parse range entry '" + atom + "'");
  IndexValue v;
  v.real_value = *r;
  return v;
}

bool Less(const IndexValue& a, const IndexValue& b) {
  if (a.index.has_value() != b.index.has_value()) return !a.index.has_value();
  if (a.index && *a.index != *b.index) return *a.index < *b.index;
  if (a.index && a.index->is_inf_bar() && a.d != b.d) return a.d < b.d;
  return !a.index && a.real_value < b.real_value;
}

bool Same(const IndexValue& a, const IndexValue& b) {
  return !Less(a, b) && !Less(b, a);
}

std::string CanonicalKey(const std::string& key) {
  if (key == "p" || key == "q" || key == "r" || key == "u") return "t_u";
  if (key == "v") return "t_v";
  return key;
}

struct KeySpec {
  std::vector<std::string> keys;
  IndexRanges defaults;
};

std::vector<IndexValue> Ints(std::initializer_list<long> ks) {
  std::vector<IndexValue> out;
  for (long k : ks) out.push_back(Finite(k));
  return out;
}

KeySpec SpecOf(Family f) {
  switch (f) {
    case Family::kD1: {
      IndexValue bp;
      bp.real_value = 1;
      return {{"beta_prime", "n", "t_u"},
              {{"beta_prime", {bp}}, {"n", Ints({3})}, {"t_u", Ints({3})}}};
    }
    case Family::kD2:
      return {{"n", "t_u"}, {{"n", Ints({5})}, {"t_u", Ints({4})}}};
    case Family::kD3:
      return {{"n", "t_u"}, {{"n", Ints({3})}, {"t_u", Ints({3})}}};
    case Family::kP1:
      return {{"n", "t_u", "t_v"},
              {{"n", Ints({4})}, {"t_u", Ints({6})}, {"t_v", Ints({3})}}};
    case Family::kP2:
      return {{"n", "t_u", "t_v"},
              {{"n", Ints({4})}, {"t_u", Ints({5})}, {"t_v", Ints({3})}}};
    case Family::kP3:
      return {{"m", "n"}, {{"m", Ints({5})}, {"n", Ints({4})}}};
    case Family::kP4:
      return {{"n", "t_u", "t_v"},
              {{"n", Ints({3})}, {"t_u", Ints({8})}, {"t_v", Ints({2})}}};
    case Family::kP5:
      return {{"n", "t_u", "t_v"},
              {{"n", Ints({3})}, {"t_u", Ints({7})}, {"t_v", Ints({2})}}};
    case Family::kP6:
      return {{"n", "t_v"}, {{"n", Ints({7})}, {"t_v", Ints({2})}}};
    case Family::kP7:
    case Family::kP8:
      return {{"n"}, {{"n", Ints({5})}}};
    case Family::kP9:
      return {{"m", "n"}, {{"m", Ints({7})}, {"n", Ints({3})}}};
    case Family::kP10:
      return {{"m", "n"}, {{"m", Ints({8})}, {"n", Ints({3})}}};
    case Family::kP11:
      return {{"m", "n"}, {{"m", Ints({7})}, {"n", Ints({3})}}};
    default:
      return {{"n"}, {{"n", Ints({rows::FixedOrder(f)})}}};
  }
}

std::optional<UPoint> PointOf(const IndexValue& v) {
  if (!v.index) return std::nullopt;
  if (v.index->is_finite() && v.index->value() < 2) return std::nullopt;
  return UPointOf(*v.index, v.d);
}

bool InRegime(Family f, const ParameterTriple& t) {
  RegimeResult r = ClassifyAxisRegime(t);
  return IsDisjointFamily(f) ? r.regime == AxisRegime::kDisjointCoplanar
                             : r.regime == AxisRegime::kIntersectingNonOrthogonal;
}

}  // namespace

std::vector<IndexValue> ParseRange(std::string_view text) {
  std::vector<IndexValue> out;
  std::string s(text);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string item = Trim(std::string_view(s).substr(start, comma - start));
    if (item.empty()) Invalid("empty range entry in '" + s + "'");
    std::size_t dots = item.find("..");
    if (dots != std::string::npos) {
      auto lo = ParseLong(Trim(item.substr(0, dots)));
      auto hi = ParseLong(Trim(item.substr(dots + 2)));
      if (!lo || !hi) Invalid("bad integer interval '" + item + "'");
      if (*lo < 1 || *hi < *lo) Invalid("empty or negative interval '" + item + "'");
      if (*hi - *lo > 100000) Invalid("interval too long '" + item + "'");
      for (long k = *lo; k <= *hi; ++k) out.push_back(Finite(k));
    } else {
      out.push_back(ParseAtom(item));
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end(), Less);
  out.erase(std::unique(out.begin(), out.end(), Same), out.end());
  return out;
}

std::vector<EnumeratedPoint> EnumerateFamily(Family family,
                                             const IndexRanges& ranges) {
  KeySpec spec = SpecOf(family);
  IndexRanges lists = spec.defaults;
  for (const auto& [raw_key, values] : ranges) {
    std::string key = CanonicalKey(raw_key);
    if (std::find(spec.keys.begin(), spec.keys.end(), key) == spec.keys.end()) {
      Invalid("family " + ToString(family) + " has no index '" + raw_key + "'");
    }
    if (values.empty()) Invalid("empty range for '" + raw_key + "'");
    std::vector<IndexValue> sorted = values;
    std::sort(sorted.begin(), sorted.end(), Less);
    sorted.erase(std::unique(sorted.begin(), sorted.end(), Same), sorted.end());
    lists[key] = sorted;
  }

  std::vector<EnumeratedPoint> out;
  std::vector<std::size_t> pos(spec.keys.size(), 0);
  while (true) {
    std::map<std::string, const IndexValue*> pick;
    for (std::size_t i = 0; i < spec.keys.size(); ++i) {
      pick[spec.keys[i]] = &lists[spec.keys[i]][pos[i]];
    }
    auto get = [&](const char* key) -> const IndexValue* {
      auto it = pick.find(key);
      return it == pick.end() ? nullptr : it->second;
    };
    const IndexValue* nv = get("n");
    if (nv && nv->index && nv->index->is_finite()) {
      long n = nv->index->value();
      std::optional<UPoint> u, v;
      std::optional<ExtIndex> m;
      if (auto* x = get("t_u")) u = PointOf(*x);
      if (auto* x = get("t_v")) v = PointOf(*x);
      if (auto* x = get("m")) m = x->index;
      Real bp = 0;
      if (auto* x = get("beta_prime")) bp = x->real_value;
      bool complete = (!get("t_u") || u) && (!get("t_v") || v) &&
                      (!get("m") || m);
      if (complete) {
        FamilyMatch match = rows::Make(family, n, u, v, m, bp);
        if (RowAdmits(match)) {
          ParameterTriple t = RowTriple(match);
          if (InRegime(family, t)) out.push_back({t, match});
        }
      }
    }
    std::size_t i = spec.keys.size();
    while (i > 0) {
      --i;
      if (++pos[i] < lists[spec.keys[i]].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (spec.keys.empty()) return out;
  }
}

}  // namespace kleinian_rp
