// Copyright 2026 The qasym Authors
//
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

#include "qasym/dfa.hpp"
#include "qasym/markov.hpp"
#include "qasym/pukanszky.hpp"
#include "qasym/random.hpp"
#include "qasym/spectral.hpp"

namespace {

using namespace qasym;

Superoperator channel(Index d) {
  return superop_from_kraus(random_stinespring_kraus(d, 2, 17), Picture::heisenberg);
}

void BM_ComplexSchur(benchmark::State& state) {
  const Superoperator s = channel(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(complex_schur(s.matrix()));
}
BENCHMARK(BM_ComplexSchur)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_AnalyzeSpectrum(benchmark::State& state) {
  const Superoperator s = channel(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_spectrum(s));
}
BENCHMARK(BM_AnalyzeSpectrum)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DfaDiscrete(benchmark::State& state) {
  const Superoperator s = channel(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dfa_discrete(s));
}
BENCHMARK(BM_DfaDiscrete)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Commutant(benchmark::State& state) {
  Rng rng(3);
  const Index d = state.range(0);
  const std::vector<Operator> gens{random_operator(d, rng), random_hermitian(d, rng)};
  for (auto _ : state) benchmark::DoNotOptimize(commutant(gens));
}
BENCHMARK(BM_Commutant)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Expm(benchmark::State& state) {
  const Superoperator l = gkls_superop(random_gkls(state.range(0), 2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(expm(l, 1.0));
}
BENCHMARK(BM_Expm)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DfaMarkov(benchmark::State& state) {
  const GKLSGenerator g = random_gkls(state.range(0), 2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(dfa_markov(g));
}
BENCHMARK(BM_DfaMarkov)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PukanszkyProp5(benchmark::State& state) {
  const auto c = puk::TruncationConfig::geometric(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(puk::verify_prop5(c));
}
BENCHMARK(BM_PukanszkyProp5)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
