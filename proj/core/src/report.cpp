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

#include "kleinian_rp/report.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "kleinian_rp/orbifolds.hpp"
#include "kleinian_rp/presentations.hpp"

#ifndef KLEINIAN_RP_VERSION
#define KLEINIAN_RP_VERSION "0.0.0"
#endif

namespace kleinian_rp {

namespace {

using ojson = nlohmann::ordered_json;

double D(Real v) { return static_cast<double>(v); }

void Dump(const ojson& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ojson(it.key()).dump() + ": ";
        Dump(it.value(), indent + 2, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        Dump(j[i], indent + 2, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case ojson::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.16e", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

ojson UPointJson(const UPoint& u) {
  ojson j;
  switch (u.kind()) {
    case UPoint::Kind::kAngle:
      j["kind"] = "angle";
      j["p"] = u.p();
      break;
    case UPoint::Kind::kZero:
      j["kind"] = "zero";
      break;
    case UPoint::Kind::kPositive:
      j["kind"] = "positive";
      j["d"] = D(u.d());
      break;
  }
  return j;
}

ojson WordsJson(const GeneratorWordTable& table) {
  ojson j;
  j["complete"] = table.total() ? "total" : "partial";
  ojson words = ojson::object();
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    words[table.generators[i]] =
        table.words[i] ? ojson(table.words[i]->ToString(FgNames())) : ojson(nullptr);
  }
  j["words"] = words;
  j["missing"] = table.missing();
  return j;
}

ojson PresentationJson(const FamilyMatch& match, const Config& config) {
  PresentationInstance k = PresentationOf(match, PresentationForm::kKleinian, config);
  PresentationInstance a = PresentationOf(match, PresentationForm::kAbstract, config);
  ojson j;
  j["schema"] = ToString(k.schema);
  j["name"] = k.Name();
  j["kleinian"] = k.ToText();
  j["abstract"] = a.ToText();
  if (k.schema == Schema::kTet3) j["expanded"] = ExpandTet3(k).Name();
  return j;
}

std::string ExitName(int code) {
  switch (code) {
    case kExitDiscrete:
      return "discrete";
    case kExitNotDiscrete:
      return "not_discrete";
    case kExitOutOfScope:
      return "out_of_scope";
    case kExitCertificateFailure:
      return "certificate_failure";
    default:
      return "parse_error";
  }
}

}  // namespace

std::string FormatReal(Real value) {
  if (!std::isfinite(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", D(value));
  return buf;
}

std::string DumpJson(const ojson& json) {
  std::string out;
  Dump(json, 0, out);
  out += "\n";
  return out;
}

ojson ToJson(const ParameterTriple& t) {
  ojson j;
  j["beta"] = D(t.beta);
  j["beta_prime"] = D(t.beta_prime);
  j["gamma"] = D(t.gamma);
  const char* names[3] = {"beta", "beta_prime", "gamma"};
  ojson prov = ojson::object();
  for (std::size_t i = 0; i < 3; ++i) {
    if (!t.provenance[i].empty()) prov[names[i]] = t.provenance[i];
  }
  if (!prov.empty()) j["provenance"] = prov;
  return j;
}

ojson ToJson(const FamilyMatch& m) {
  ojson j;
  j["family"] = ToString(m.family);
  j["n"] = m.n;
  ojson idx = ojson::object();
  for (const auto& i : m.indices) idx[i.name] = i.value.ToString();
  j["indices"] = idx;
  if (m.u) j["u"] = UPointJson(*m.u);
  if (m.v) j["v"] = UPointJson(*m.v);
  if (m.family == Family::kD1) j["free_beta_prime"] = D(m.free_beta_prime);
  j["residual"] = D(m.residual);
  return j;
}

ojson ToJson(const Certificate& c) {
  ojson j;
  j["subject"] = c.subject;
  j["pass"] = c.pass;
  j["partial"] = c.partial;
  ojson entries = ojson::array();
  for (const auto& e : c.entries) {
    ojson r;
    r["check"] = e.label;
    r["kind"] = e.kind;
    r["residual"] = D(e.residual);
    if (e.kind != "identity") {
      r["value"] = D(e.value);
      r["expected"] = D(e.expected);
    }
    r["pass"] = e.pass;
    entries.push_back(r);
  }
  j["entries"] = entries;
  j["notes"] = c.notes;
  return j;
}

Report BuildReport(const ParameterTriple& raw, const Config& config,
                   const ReportOptions& options) {
  Report report;
  ojson& j = report.json;
  j["schema"] = kReportSchema;
  j["tool_version"] = KLEINIAN_RP_VERSION;
  ojson input;
  input["raw"] = ToJson(raw);
  report.verdict = Classify(raw, config);
  const Verdict& v = report.verdict;
  input["normalized"] = ToJson(v.normalized);
  j["input"] = input;
  ojson regime;
  regime["regime"] = ToString(v.regime.regime);
  if (!v.regime.reason.empty()) regime["reason"] = v.regime.reason;
  j["regime"] = regime;

  ojson verdict;
  verdict["kind"] = ToString(v.kind);
  if (!v.reason.empty()) verdict["reason"] = v.reason;
  ojson matches = ojson::array();
  for (const auto& m : v.matches) matches.push_back(ToJson(m));
  verdict["matches"] = matches;
  verdict["nearest"] = v.nearest ? ToJson(*v.nearest) : ojson(nullptr);
  j["verdict"] = verdict;

  std::optional<RealizedPair> pair;
  std::string realize_error;
  const bool certify = options.certify_geometry || options.certify_presentation;
  if (certify && v.kind == Verdict::Kind::kDiscrete) {
    try {
      pair = Realize(v.normalized, config);
    } catch (const Error& e) {
      realize_error = e.code() + ": " + e.what();
      report.certificates_pass = false;
    }
  }

  ojson results = ojson::array();
  for (const auto& m : v.matches) {
    ojson r;
    r["family"] = ToString(m.family);
    try {
      r["presentation"] = PresentationJson(m, config);
      GeneratorWordTable words = GeneratorWords(m, config);
      r["generator_words"] = WordsJson(words);
      PresentationInstance pres = PresentationOf(m, PresentationForm::kKleinian, config);
      OrbifoldDescriptor orb = OrbifoldOf(pres);
      ojson oj = ToJson(orb);
      oj["edge_list"] = ToEdgeList(orb.graph);
      r["orbifold"] = oj;
      if (certify) {
        ojson certs = ojson::array();
        if (!pair) {
          Certificate failed;
          failed.subject = "realization";
          failed.pass = false;
          failed.notes.push_back(realize_error);
          certs.push_back(ToJson(failed));
        } else {
          if (options.certify_presentation) {
            Certificate c = CertifyPresentation(*pair, pres, words, config);
            report.certificates_pass = report.certificates_pass && c.pass;
            certs.push_back(ToJson(c));
          }
          if (options.certify_geometry) {
            Certificate c = CertifyGeometry(*pair, m, config);
            report.certificates_pass = report.certificates_pass && c.pass;
            certs.push_back(ToJson(c));
          }
        }
        r["certificates"] = certs;
      }
    } catch (const Error& e) {
      r["error"] = e.code() + ": " + e.what();
      report.certificates_pass = false;
    }
    results.push_back(r);
  }
  j["results"] = results;
  for (const auto& m : v.matches) {
    if (m.family == Family::kP11 || m.family == Family::kP14) {
      const char* conv =
          config.p11_convention == P11Convention::kProof ? "proof" : "theorem";
      j["p11_note"] = std::string("P11 uses the '") + conv +
                      "' index convention; P11 at m = 5 would coincide with P14";
      break;
    }
  }
  j["config"] = ConfigToJson(config);

  switch (v.kind) {
    case Verdict::Kind::kDiscrete:
      report.exit_code = certify && !report.certificates_pass ? kExitCertificateFailure
                                                              : kExitDiscrete;
      break;
    case Verdict::Kind::kNotDiscrete:
      report.exit_code = kExitNotDiscrete;
      break;
    case Verdict::Kind::kOutOfScope:
      report.exit_code = kExitOutOfScope;
      break;
  }
  j["exit"] = ExitName(report.exit_code);
  return report;
}

std::string ReportText(const Report& report) {
  const ojson& j = report.json;
  std::string out;
  const Verdict& v = report.verdict;
  out += "input: beta=" + FormatReal(v.normalized.beta) +
         " beta'=" + FormatReal(v.normalized.beta_prime) +
         " gamma=" + FormatReal(v.normalized.gamma) + "\n";
  out += "regime: " + ToString(v.regime.regime) + "\n";
  out += "verdict: " + ToString(v.kind);
  if (!v.reason.empty()) out += " (" + v.reason + ")";
  out += "\n";
  for (const auto& r : j["results"]) {
    out += "  " + r["family"].get<std::string>();
    if (r.contains("presentation")) {
      out += ": " + r["presentation"]["kleinian"].get<std::string>();
    }
    out += "\n";
    if (r.contains("certificates")) {
      for (const auto& c : r["certificates"]) {
        out += "    certificate " + c["subject"].get<std::string>() + ": " +
               (c["pass"].get<bool>() ? "pass" : "fail") +
               (c["partial"].get<bool>() ? " (partial)" : "") + "\n";
      }
    }
  }
  if (v.nearest) {
    out += "  nearest: " + ToString(v.nearest->family) +
           " residual=" + FormatReal(v.nearest->residual) + "\n";
  }
  return out;
}

std::string EnumerationCsv(const std::vector<EnumeratedPoint>& points,
                           const Config& config) {
  std::string out = "family,n,indices,beta,beta_prime,gamma,presentation\n";
  for (const auto& p : points) {
    std::string idx;
    for (const auto& i : p.match.indices) {
      if (!idx.empty()) idx += ";";
      idx += i.name + "=" + i.value.ToString();
      if (i.value.is_inf_bar()) {
        const auto& u = i.name == "t_v" ? p.match.v : p.match.u;
        if (u) idx += ":" + FormatReal(u->d());
      }
    }
    std::string name = PresentationOf(p.match, PresentationForm::kKleinian, config).Name();
    out += ToString(p.match.family) + "," + std::to_string(p.match.n) + "," + idx + "," +
           FormatReal(p.triple.beta) + "," + FormatReal(p.triple.beta_prime) + "," +
           FormatReal(p.triple.gamma) + ",\"" + name + "\"\n";
  }
  return out;
}

ojson EnumerationJson(const std::vector<EnumeratedPoint>& points, const Config& config) {
  ojson rows = ojson::array();
  for (const auto& p : points) {
    ojson r;
    r["triple"] = ToJson(p.triple);
    r["match"] = ToJson(p.match);
    r["presentation"] = PresentationOf(p.match, PresentationForm::kKleinian, config).Name();
    rows.push_back(r);
  }
  ojson j;
  j["schema"] = kReportSchema;
  j["points"] = rows;
  return j;
}

}  // namespace kleinian_rp
