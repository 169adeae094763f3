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

#include <benchmark/benchmark.h>

#include "kleinian_rp/classifier.hpp"
#include "kleinian_rp/presentations.hpp"
#include "kleinian_rp/report.hpp"
#include "kleinian_rp/verify.hpp"

namespace kleinian_rp {
namespace {

ParameterTriple PointOf(Family family, const IndexRanges& ranges) {
  return EnumerateFamily(family, ranges).front().triple;
}

void BM_ClassifyDisjoint(benchmark::State& state) {
  ParameterTriple t{-3.0L, 1.0L, -1.0L, {}};
  for (auto _ : state) benchmark::DoNotOptimize(Classify(t));
}
BENCHMARK(BM_ClassifyDisjoint);

void BM_ClassifyIntersecting(benchmark::State& state) {
  ParameterTriple t = PointOf(Family::kP4, {});
  for (auto _ : state) benchmark::DoNotOptimize(Classify(t));
}
BENCHMARK(BM_ClassifyIntersecting);

void BM_ClassifyNotDiscrete(benchmark::State& state) {
  ParameterTriple t{-3.0L, 1.0L, -3.5L, {}};
  for (auto _ : state) benchmark::DoNotOptimize(Classify(t));
}
BENCHMARK(BM_ClassifyNotDiscrete);

void BM_Realize(benchmark::State& state) {
  ParameterTriple t = PointOf(Family::kP8, {});
  for (auto _ : state) benchmark::DoNotOptimize(Realize(t));
}
BENCHMARK(BM_Realize);

void BM_CertifyPresentation(benchmark::State& state) {
  EnumeratedPoint p = EnumerateFamily(Family::kP8, {}).front();
  RealizedPair pair = Realize(p.triple);
  PresentationInstance pres = PresentationOf(p.match);
  GeneratorWordTable words = GeneratorWords(p.match);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CertifyPresentation(pair, pres, words));
  }
}
BENCHMARK(BM_CertifyPresentation);

void BM_EnumerateP4(benchmark::State& state) {
  IndexRanges ranges{{"n", ParseRange("3..15")},
                     {"t_u", ParseRange("4..20")},
                     {"t_v", ParseRange("2..10")}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateFamily(Family::kP4, ranges));
  }
}
BENCHMARK(BM_EnumerateP4);

void BM_BuildReport(benchmark::State& state) {
  ParameterTriple t{-3.0L, 1.0L, -1.0L, {}};
  ReportOptions options{true, true};
  for (auto _ : state) {
    benchmark::DoNotOptimize(DumpJson(BuildReport(t, Config{}, options).json));
  }
}
BENCHMARK(BM_BuildReport);

}  // namespace
}  // namespace kleinian_rp

BENCHMARK_MAIN();
