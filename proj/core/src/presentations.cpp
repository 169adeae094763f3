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

#include "kleinian_rp/presentations.hpp"

namespace kleinian_rp {

namespace {

using Exps = std::vector<ExtIndex>;

ExtIndex Fin(long k) { return ExtIndex::Finite(k); }

Word L(int letter, long e = 1) { return Word::Letter(letter, e); }

ExtIndex Half(const ExtIndex& t) {
  auto h = Divide(t, 2);
  if (!h) throw Error("InvalidRange", "index " + t.ToString() + " is not even");
  return *h;
}

ExtIndex Need(const FamilyMatch& match, const char* name) {
  auto idx = match.Index(name);
  if (!idx) throw Error("UnmappedFamily", std::string("match lacks index ") + name);
  return *idx;
}

long NeedFinite(const FamilyMatch& match, const char* name) {
  ExtIndex t = Need(match, name);
  if (!t.is_finite()) {
    throw Error("InvalidRange", std::string("index ") + name + " must be finite");
  }
  return t.value();
}

bool IsOdd(const ExtIndex& t) { return t.is_finite() && t.value() % 2 == 1; }

// Schema relators before any dropping, exponents in schema order.
std::vector<Relator> RawRelators(Schema schema, const Exps& e) {
  switch (schema) {
    case Schema::kGT:  // f, g
      return {{L(0, 1), e[0]}, {L(1, 1), e[1]}, {Commutator(L(0), L(1)), e[2]}};
    case Schema::kPH:  // x, y, z
      return {{L(0), e[0]},
              {L(1), Fin(2)},
              {L(2), Fin(2)},
              {L(0) * L(2), Fin(2)},
              {Commutator(L(0), L(1)), e[1]},
              {L(1) * L(0) * L(1) * L(2), e[2]}};
    case Schema::kH:  // x, y, s; H[p;n,m;q]
      return {{L(2), Fin(2)},
              {L(0), e[1]},
              {L(1), e[2]},
              {L(0) * L(1, -1), e[0]},
              {L(2) * L(0) * L(2) * L(1, -1), e[3]},
              {L(2) * L(0, -1) * L(1), Fin(2)}};
    case Schema::kP:  // w, x, y, z
      return {{L(0), e[0]},         {L(1), Fin(2)},         {L(2), Fin(2)},
              {L(3), Fin(2)},       {L(0) * L(1), Fin(2)},  {L(0) * L(2), Fin(2)},
              {L(2) * L(3), Fin(2)}, {L(3) * L(1), e[2]},   {L(3) * L(0), e[1]}};
    case Schema::kTet6:  // x, y, z
      return {{L(0), e[0]},
              {L(1), e[1]},
              {L(2), e[2]},
              {L(1) * L(2, -1), e[3]},
              {L(2) * L(0, -1), e[4]},
              {L(0) * L(1, -1), e[5]}};
    case Schema::kTet3:
      return RawRelators(Schema::kTet6,
                         {Fin(2), Fin(2), e[0], Fin(2), e[2], e[1]});
    case Schema::kGTet1:  // x, y, z
      return {{L(0), e[0]},
              {L(1), Fin(2)},
              {L(0) * L(1), e[1]},
              {Commutator(L(1), L(2)), e[2]},
              {Commutator(L(0), L(2)), Fin(1)}};
    case Schema::kGTet2:
      return {{L(0), e[0]},
              {L(1), Fin(2)},
              {L(0) * L(1), e[1]},
              {L(0) * L(2, -1) * L(1, -1) * L(2) * L(1), e[2]},
              {Commutator(L(0), L(2)), Fin(1)}};
    case Schema::kS2:  // x, L
      return {{L(0), e[0]},
              {L(0) * L(1) * L(0) * L(1, -1), e[1]},
              {L(0) * L(1, 2) * L(0, -1) * L(1, -2), e[2]}};
    case Schema::kS3:
      return {{L(0), e[0]},
              {L(0) * L(1) * L(0) * L(1, -1), e[1]},
              {L(0) * L(1) * L(0) * L(1) * L(0) * L(1, -2), e[2]}};
    case Schema::kR:  // u, v
      return {{L(0) * L(1), e[0]},
              {L(0) * L(1, -1), e[1]},
              {Commutator(L(0), L(1)), e[2]}};
  }
  return {};
}

std::vector<std::string> GeneratorsOf(Schema schema) {
  switch (schema) {
    case Schema::kGT:
      return {"f", "g"};
    case Schema::kH:
      return {"x", "y", "s"};
    case Schema::kP:
      return {"w", "x", "y", "z"};
    case Schema::kS2:
    case Schema::kS3:
      return {"x", "L"};
    case Schema::kR:
      return {"u", "v"};
    default:
      return {"x", "y", "z"};
  }
}

std::size_t ExponentCount(Schema schema) {
  switch (schema) {
    case Schema::kH:
      return 4;
    case Schema::kTet6:
      return 6;
    default:
      return 3;
  }
}

std::string Join(const Exps& e, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += ",";
    out += e[i].ToString();
  }
  return out;
}

}  // namespace

std::string ToString(Schema schema) {
  switch (schema) {
    case Schema::kGT: return "GT";
    case Schema::kPH: return "PH";
    case Schema::kH: return "H";
    case Schema::kP: return "P";
    case Schema::kTet6: return "Tet6";
    case Schema::kTet3: return "Tet3";
    case Schema::kGTet1: return "GTet1";
    case Schema::kGTet2: return "GTet2";
    case Schema::kS2: return "S2";
    case Schema::kS3: return "S3";
    case Schema::kR: return "R";
  }
  return {};
}

std::string PresentationInstance::Name() const {
  const Exps& e = exponents;
  switch (schema) {
    case Schema::kGT:
      return "GT[" + Join(e, 0, 2) + ";" + Join(e, 2, 3) + "]";
    case Schema::kR:
      return "R[" + Join(e, 0, 2) + ";" + Join(e, 2, 3) + "]";
    case Schema::kTet3:
      return "Tet[" + Join(e, 0, 2) + ";" + Join(e, 2, 3) + "]";
    case Schema::kTet6:
      return "Tet[" + Join(e, 0, 3) + ";" + Join(e, 3, 6) + "]";
    case Schema::kH:
      return "H[" + Join(e, 0, 1) + ";" + Join(e, 1, 3) + ";" + Join(e, 3, 4) + "]";
    default:
      return ToString(schema) + "[" + Join(e, 0, 3) + "]";
  }
}

std::string PresentationInstance::RelatorText(const Relator& r) const {
  std::string w = r.word.ToString(generators);
  if (r.exponent == Fin(1)) return w;
  bool bare = r.word.syllables().size() == 1 && r.word.syllables()[0].exponent == 1;
  return (bare ? w : "(" + w + ")") + "^" + r.exponent.ToString();
}

std::string PresentationInstance::ToText() const {
  std::string out = Name() + " = < ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ",";
    out += generators[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (i) out += ", ";
    out += RelatorText(relators[i]);
  }
  return out + " >";
}

PresentationInstance MakePresentation(Schema schema, const Exps& exponents,
                                      PresentationForm form) {
  if (exponents.size() != ExponentCount(schema)) {
    throw Error("InvalidRange", "wrong exponent count for " + ToString(schema));
  }
  PresentationInstance p;
  p.schema = schema;
  p.exponents = exponents;
  p.generators = GeneratorsOf(schema);
  p.form = form;
  for (auto& r : RawRelators(schema, exponents)) {
    if (r.exponent.is_inf_bar()) continue;
    if (r.exponent.is_inf() && form == PresentationForm::kAbstract) continue;
    p.relators.push_back(std::move(r));
  }
  return p;
}

PresentationInstance ExpandTet3(const PresentationInstance& tet3) {
  if (tet3.schema != Schema::kTet3) return tet3;
  const Exps& e = tet3.exponents;
  return MakePresentation(Schema::kTet6,
                          {Fin(2), Fin(2), e[0], Fin(2), e[2], e[1]}, tet3.form);
}

PresentationInstance PresentationOf(const FamilyMatch& match,
                                    PresentationForm form, const Config& config) {
  const ExtIndex n = Fin(match.n);
  auto make = [&](Schema s, Exps e) { return MakePresentation(s, e, form); };
  switch (match.family) {
    case Family::kD1: {
      ExtIndex t = Need(match, "t_u");
      if (IsOdd(t)) return make(Schema::kTet3, {n, ExtIndex::InfBar(), t});
      return make(Schema::kGT, {n, ExtIndex::InfBar(), Half(t)});
    }
    case Family::kD2:
      return make(Schema::kTet3, {n, Need(match, "t_u"), Fin(3)});
    case Family::kD3:
      return make(Schema::kTet3, {Fin(3), Need(match, "t_u"), Fin(5)});
    case Family::kP1: {
      ExtIndex tu = Need(match, "t_u"), tv = Need(match, "t_v");
      if (IsOdd(tv)) return make(Schema::kPH, {n, Half(tu), tv});
      return make(Schema::kS2, {n, Half(tu), Half(tv)});
    }
    case Family::kP2: {
      ExtIndex tu = Need(match, "t_u"), tv = Need(match, "t_v");
      if (IsOdd(tv)) return make(Schema::kP, {n, tu, tv});
      return make(Schema::kGTet1, {n, tu, Half(tv)});
    }
    case Family::kP3:
      return make(Schema::kTet3, {Fin(4), Need(match, "m"), Fin(3)});
    case Family::kP4:
      return make(Schema::kS3, {n, Half(Need(match, "t_u")), Need(match, "t_v")});
    case Family::kP5:
      return make(Schema::kGTet2, {n, Need(match, "t_u"), Need(match, "t_v")});
    case Family::kP6:
      return make(Schema::kGTet2, {n, Fin(3), Need(match, "t_v")});
    case Family::kP7:
      return make(Schema::kH, {Fin(2), Fin(3), n, Fin(2)});
    case Family::kP8:
      return make(Schema::kR, {n, Fin(2), Fin(2)});
    case Family::kP9:
      return make(Schema::kGTet1, {Need(match, "m"), Fin(3), Fin(2)});
    case Family::kP10: {
      ExtIndex m = Need(match, "m");
      return make(Schema::kTet6, {Fin(2), Fin(3), Fin(3), Fin(2), Fin(3), Half(m)});
    }
    case Family::kP11: {
      ExtIndex m = Need(match, "m");
      if (IsOdd(m)) return make(Schema::kTet3, {Fin(4), m, Fin(3)});
      ExtIndex p = config.p11_convention == P11Convention::kProof ? Half(m) : m;
      return make(Schema::kH, {p, Fin(3), Fin(3), Fin(2)});
    }
    case Family::kP12:
    case Family::kP13:
    case Family::kP15:
    case Family::kP19:
      return make(Schema::kH, {Fin(2), Fin(2), Fin(3), Fin(5)});
    case Family::kP14:
      return make(Schema::kTet3, {Fin(4), Fin(5), Fin(3)});
    case Family::kP16:
      return make(Schema::kTet3, {Fin(3), Fin(3), Fin(5)});
    case Family::kP17:
    case Family::kP18:
      return make(Schema::kH, {Fin(2), Fin(2), Fin(5), Fin(3)});
  }
  throw Error("UnmappedFamily", "no presentation for " + ToString(match.family));
}

bool GeneratorWordTable::total() const {
  for (const auto& w : words) {
    if (!w) return false;
  }
  return true;
}

std::vector<std::string> GeneratorWordTable::missing() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!words[i]) out.push_back(generators[i]);
  }
  return out;
}

namespace {

const Word kF = WordF();
const Word kG = WordG();

Word FgCommutator() { return Commutator(kF, kG); }

// e with A e A-bar e = 1 style involution built from A and its bar.
Word InvolutionOf(const Word& a, long k) {
  return a.Inverse() * (a * a.Bar()).Power(-(k - 1) / 2);
}

// (g f g^-1 f^-h0)(g^-1 f g f^-h0).
Word H3(long h0) {
  return kG * kF * kG.Inverse() * WordF(-h0) * kG.Inverse() * kF * kG * WordF(-h0);
}

long InverseOfThree(long n) {
  for (long j = 1; j < n; ++j) {
    if ((3 * j) % n == 1) return j;
  }
  throw Error("InvalidRange", "3 is not invertible modulo " + std::to_string(n));
}

long RequireEvenN(long n) {
  if (n % 2 != 0) throw Error("InvalidRange", "word needs even n");
  return n / 2;
}

long RequireOddN(long n) {
  if (n % 2 != 1) throw Error("InvalidRange", "word needs odd n");
  return (n - 1) / 2;
}

}  // namespace

GeneratorWordTable GeneratorWords(const FamilyMatch& match, const Config& config) {
  PresentationInstance pres = PresentationOf(match, PresentationForm::kKleinian, config);
  GeneratorWordTable table;
  table.generators = pres.generators;
  table.words.assign(pres.generators.size(), std::nullopt);
  auto set = [&](std::size_t i, Word w) { table.words[i] = std::move(w); };
  const long n = match.n;
  const Word k = FgCommutator();
  switch (match.family) {
    case Family::kD1: {
      ExtIndex t = Need(match, "t_u");
      if (pres.schema == Schema::kGT) {
        set(0, kF);
        set(1, kG);
      } else {
        long p = t.value();
        Word e = k.Power((p - 1) / 2) * kF * kG;
        set(0, kG * e);
        set(1, e);
        set(2, kF);
      }
      break;
    }
    case Family::kD2: {
      long h0 = RequireOddN(n);
      Word h = k.Power(-h0);
      Word xl = h.Power(-h0);
      Word e = kF.Inverse() * h * kG;
      Word s = xl.Inverse() * kF;
      set(0, s.Inverse() * kF.Inverse());
      set(1, kF * e);
      set(2, kF);
      break;
    }
    case Family::kD3: {
      Word h = k.Power(-2);
      Word xl = h.Power(-2);
      Word e = kF.Inverse() * h * kG;
      Word a = h * kG * kF * (xl.Inverse() * kF).Power(3);
      Word y = kF * e;
      set(0, a * y);
      set(1, y);
      set(2, kF);
      break;
    }
    case Family::kP1: {
      long half = RequireEvenN(n);
      if (pres.schema == Schema::kPH) {
        long kv = NeedFinite(match, "t_v");
        Word a = WordF(half) * kG.Inverse() * kF * kG;
        Word e = InvolutionOf(a, kv);
        set(0, kF);
        set(1, kG * e);
        set(2, WordF(half) * e);
      } else {
        set(0, kF);
        set(1, kG * WordF(half));
      }
      break;
    }
    case Family::kP2: {
      long half = RequireEvenN(n);
      long m = NeedFinite(match, "t_u");
      Word z = kF.Inverse() * (kF * kG * kF * kG.Inverse()).Power((m + 1) / 2);
      if (pres.schema == Schema::kP) {
        long kv = NeedFinite(match, "t_v");
        Word e = InvolutionOf(z * WordF(half), kv);
        set(0, kF);
        set(1, WordF(half) * e);
        set(2, kG * e * z);
        set(3, z);
      } else {
        set(0, kF);
        set(1, z);
        set(2, z * kG * WordF(half));
      }
      break;
    }
    case Family::kP4: {
      long h0 = RequireOddN(n);
      set(0, kF);
      set(1, WordF(h0) * kG.Inverse());
      break;
    }
    case Family::kP5: {
      long h0 = RequireOddN(n);
      long m = NeedFinite(match, "t_u");
      Word v = (kF * kG * kF * kG.Inverse()).Power((m - 1) / 2) * kF;
      Word u = v * kG * WordF(-h0);
      set(0, kF.Inverse());
      set(1, v);
      set(2, u.Inverse());
      break;
    }
    case Family::kP6:
      set(0, kF.Inverse());
      break;
    case Family::kP7: {
      long h0 = RequireOddN(n);
      Word h = kG * kF * kG.Inverse() * kF;
      Word h3bar = H3(h0).Power(InverseOfThree(n));
      Word b = h.Inverse() * h3bar;
      set(0, h3bar.Inverse() * b.Inverse());
      set(1, kF);
      break;
    }
    case Family::kP8: {
      long h0 = RequireOddN(n);
      Word v = WordF(h0) * kG.Inverse();
      set(0, v.Inverse() * H3(h0).Inverse().Power(InverseOfThree(n)));
      set(1, v);
      break;
    }
    case Family::kP10:
      set(2, kF);
      break;
    case Family::kP11: {
      if (pres.schema != Schema::kH) break;
      long m = NeedFinite(match, "m");
      Word h = kG * kF * kG.Inverse() * kF;
      Word h2sq = kG * kF * kG.Inverse() * kF.Inverse() * kG.Inverse() * kF * kG *
                  kF.Inverse();
      Word h2 = h2sq.Power((m / 2 + 1) / 2);
      Word t1 = h.Inverse() * h2;
      Word u = t1.Inverse() * h2.Inverse();
      set(0, t1.Inverse());
      set(1, u);
      set(2, u * kG * t1);
      break;
    }
    default:
      break;
  }
  return table;
}

}  // namespace kleinian_rp
