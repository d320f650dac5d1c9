// Copyright 2026 The extbloch authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "extbloch/bloch_map.hpp"
#include "extbloch/mat_kernel.hpp"
#include "extbloch/random_states.hpp"
#include "extbloch/sun_basis.hpp"

namespace {

using namespace extbloch;

void BM_Kron(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const CMatrix a = random_density(n, rng).matrix();
  const CMatrix b = random_density(n, rng).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kron(a, b));
  }
}
BENCHMARK(BM_Kron)->Arg(2)->Arg(4)->Arg(8);

void BM_PartialTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  const CMatrix d = random_density(n * n, rng).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(partial_trace(d, n, n, Side::B));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(2)->Arg(3)->Arg(4);

void BM_HermitianEigensystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  const CMatrix d = random_density(n, rng).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigensystem(d));
  }
}
BENCHMARK(BM_HermitianEigensystem)->Arg(4)->Arg(9)->Arg(16);

void BM_GellMannBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gell_mann_basis(n));
  }
}
BENCHMARK(BM_GellMannBasis)->Arg(3)->Arg(6)->Arg(12);

void BM_DensityToBloch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const GeneratorBasis basis = gell_mann_basis(n);
  const DensityOperator d = random_density(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_to_bloch(d, basis));
  }
}
BENCHMARK(BM_DensityToBloch)->Arg(2)->Arg(4)->Arg(9);

}  // namespace
