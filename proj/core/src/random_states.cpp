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

#include "extbloch/random_states.hpp"

#include <cmath>
#include <numbers>

namespace extbloch {

double Rng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

std::uint64_t Rng::derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t out = 0;
  for (std::uint64_t k = 0; k <= index; ++k) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    out = z ^ (z >> 31);
  }
  return out;
}

CMatrix random_haar_unitary(int n, Rng& rng) {
  if (n < 1) throw InputError("random_haar_unitary: dimension must be positive");
  CMatrix ginibre(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ginibre(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(ginibre);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? (d / mag) : Complex(1.0, 0.0);
  }
  return q;
}

CVector random_state_vector(int n, Rng& rng) {
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    v(i) = Complex(rng.gaussian(), rng.gaussian());
  }
  const double norm = v.norm();
  if (norm == 0.0) return random_state_vector(n, rng);
  return v / norm;
}

std::pair<CVector, CVector> random_orthonormal_pair(int n, Rng& rng) {
  if (n < 2) throw InputError("random_orthonormal_pair: dimension must be at least 2");
  const CMatrix u = random_haar_unitary(n, rng);
  return {u.col(0), u.col(1)};
}

std::vector<CVector> random_orthonormal_basis(int n, Rng& rng) {
  const CMatrix u = random_haar_unitary(n, rng);
  std::vector<CVector> basis;
  basis.reserve(n);
  for (int k = 0; k < n; ++k) basis.push_back(u.col(k));
  return basis;
}

DensityOperator random_density(int n, Rng& rng) {
  const CMatrix u = random_haar_unitary(n, rng);
  RVector weights(n);
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    double x = rng.uniform01();
    while (x <= 0.0) x = rng.uniform01();
    weights(k) = -std::log(x);
    total += weights(k);
  }
  CMatrix m = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    m += (weights(k) / total) * outer(u.col(k), u.col(k));
  }
  return DensityOperator::from_matrix(m);
}

DensityOperator random_pure_density(int n, Rng& rng) {
  return DensityOperator::pure(random_state_vector(n, rng));
}

EntangledSpec random_entangled_spec(int na, int nb, Rng& rng) {
  const double theta = rng.uniform(0.05, std::numbers::pi / 2.0 - 0.05);
  const double a1 = std::sin(theta);
  const double a2 = std::cos(theta);
  const double alpha1 = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double alpha2 = rng.uniform(0.0, 2.0 * std::numbers::pi);
  auto [psi_a, phi_a] = random_orthonormal_pair(na, rng);
  auto [psi_b, phi_b] = random_orthonormal_pair(nb, rng);
  return EntangledSpec::create(na, nb, a1, a2, alpha1, alpha2, psi_a, phi_a, psi_b,
                               phi_b);
}

}  // namespace extbloch
