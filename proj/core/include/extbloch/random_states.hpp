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

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "extbloch/entangle_decomp.hpp"
#include "extbloch/mat_kernel.hpp"

namespace extbloch {

/// Seeded generator for random test states. Uses mt19937_64 with explicit
/// uniform / Box-Muller mappings (no std::*_distribution), so the same seed
/// produces the same objects on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double gaussian();

  /// Deterministic sub-seed stream (splitmix64 of the master seed).
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

 private:
  std::mt19937_64 eng_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Haar-distributed unitary (Ginibre matrix, QR, phase-fixed R diagonal).
CMatrix random_haar_unitary(int n, Rng& rng);

CVector random_state_vector(int n, Rng& rng);

/// First two columns of a Haar unitary.
std::pair<CVector, CVector> random_orthonormal_pair(int n, Rng& rng);

std::vector<CVector> random_orthonormal_basis(int n, Rng& rng);

/// Full-rank mixed state: Haar frame with flat-Dirichlet eigenvalues.
DensityOperator random_density(int n, Rng& rng);

DensityOperator random_pure_density(int n, Rng& rng);

/// Random member of the two-term entangled family: a1 = sin(theta) with
/// theta uniform, phases uniform in [0, 2pi), Haar orthonormal pairs.
EntangledSpec random_entangled_spec(int na, int nb, Rng& rng);

}  // namespace extbloch
