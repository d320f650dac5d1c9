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

#include "extbloch/entangle_decomp.hpp"
#include "extbloch/hidden_measure.hpp"
#include "extbloch/random_states.hpp"

namespace {

using namespace extbloch;

void BM_Decompose(benchmark::State& state) {
  const int na = static_cast<int>(state.range(0));
  const int nb = static_cast<int>(state.range(1));
  Rng rng(10);
  const EntangledSpec spec = random_entangled_spec(na, nb, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(spec));
  }
}
BENCHMARK(BM_Decompose)->Args({2, 2})->Args({2, 3})->Args({3, 3});

void BM_ProjectToSimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  const GeneratorBasis basis = gell_mann_basis(n);
  const MeasurementSimplex simplex =
      simplex_from_basis(random_orthonormal_basis(n, rng), basis);
  const BlochVector r = density_to_bloch(random_density(n, rng), basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_to_simplex(r, simplex));
  }
}
BENCHMARK(BM_ProjectToSimplex)->Arg(2)->Arg(4)->Arg(6);

void BM_SampleOutcomes(benchmark::State& state) {
  const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
  Rng rng(12);
  const GeneratorBasis basis = gell_mann_basis(3);
  const MeasurementSimplex simplex =
      simplex_from_basis(random_orthonormal_basis(3, rng), basis);
  const BlochVector r = density_to_bloch(random_density(3, rng), basis);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_outcomes(r, simplex, shots, seed++));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_SampleOutcomes)->Arg(10000)->Arg(1000000);

}  // namespace
