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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "extbloch/random_states.hpp"
#include "extbloch/sun_basis.hpp"

using namespace extbloch;

namespace {

// Independent orthonormality oracle: explicit entry sums, no library calls.
double pairwise_trace_deviation(const std::vector<CMatrix>& gens) {
  double worst = 0.0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i; j < gens.size(); ++j) {
      Complex t = 0.0;
      for (Eigen::Index r = 0; r < gens[i].rows(); ++r) {
        for (Eigen::Index c = 0; c < gens[i].cols(); ++c) {
          t += gens[i](r, c) * gens[j](c, r);
        }
      }
      const double expected = (i == j) ? 2.0 : 0.0;
      worst = std::max(worst, std::abs(t - Complex(expected, 0.0)));
    }
  }
  return worst;
}

double hermiticity_deviation(const std::vector<CMatrix>& gens) {
  double worst = 0.0;
  for (const CMatrix& g : gens) {
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      for (Eigen::Index c = 0; c < g.cols(); ++c) {
        worst = std::max(worst, std::abs(g(r, c) - std::conj(g(c, r))));
      }
    }
  }
  return worst;
}

CVector unit(int n, int k) {
  CVector e = CVector::Zero(n);
  e(k) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("n=2 standard determination is the Pauli triple in fixed order") {
  const GeneratorBasis basis = gell_mann_basis(2);
  REQUIRE(basis.size() == 3);
  CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK(max_abs(basis.generators[0] - sx) == 0.0);
  CHECK(max_abs(basis.generators[1] - sy) == 0.0);
  CHECK(max_abs(basis.generators[2] - sz) == 0.0);
  CHECK(basis.labels[0].str() == "sym(1,2)");
  CHECK(basis.labels[1].str() == "antisym(1,2)");
  CHECK(basis.labels[2].str() == "diag(1)");
}

TEST_CASE("n=3 determination passes the pairwise-trace oracle") {
  const GeneratorBasis basis = gell_mann_basis(3);
  REQUIRE(basis.size() == 8);
  CHECK(pairwise_trace_deviation(basis.generators) < 1e-12);
  CHECK(hermiticity_deviation(basis.generators) < 1e-12);
}

TEST_CASE("n=4 determination is traceless") {
  const GeneratorBasis basis = gell_mann_basis(4);
  REQUIRE(basis.size() == 15);
  for (const CMatrix& g : basis.generators) {
    CHECK(std::abs(g.trace()) < 1e-12);
  }
}

TEST_CASE("dimensions below 2 are rejected") {
  CHECK_THROWS_AS(gell_mann_basis(1), InputError);
  CHECK_THROWS_AS(gell_mann_basis(0), InputError);
}

TEST_CASE("adapted basis of the canonical qubit pair is (sigma_x, sigma_y, sigma_z)") {
  const GeneratorBasis basis = adapted_basis(unit(2, 0), unit(2, 1));
  CMatrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  CHECK(max_abs(basis.generators[0] - sx) < 1e-15);
  CHECK(max_abs(basis.generators[1] - sy) < 1e-15);
  CHECK(max_abs(basis.generators[2] - sz) < 1e-15);
  CHECK(basis.labels[0].str() == "adapted-sym(1,2)");
  CHECK(basis.labels[1].str() == "adapted-antisym(1,2)");
}

TEST_CASE("adapted basis in C^3 passes the orthonormality oracle") {
  const GeneratorBasis basis = adapted_basis(unit(3, 0), unit(3, 1));
  REQUIRE(basis.size() == 8);
  CHECK(pairwise_trace_deviation(basis.generators) < 1e-12);
}

TEST_CASE("adapted basis first two generators satisfy the defining formulas") {
  Rng rng(7);
  auto [psi, phi] = random_orthonormal_pair(4, rng);
  const GeneratorBasis basis = adapted_basis(psi, phi);
  REQUIRE(basis.size() == 15);
  const CMatrix g1 = outer(psi, phi) + outer(phi, psi);
  const CMatrix g2 = Complex(0, -1) * (outer(psi, phi) - outer(phi, psi));
  CHECK(max_abs(basis.generators[0] - g1) < 1e-15);
  CHECK(max_abs(basis.generators[1] - g2) < 1e-15);
  CHECK(pairwise_trace_deviation(basis.generators) < 1e-12);
}

TEST_CASE("completion skips canonical vectors already spanned by the pair") {
  // psi, phi span {e1, e2}, so Gram-Schmidt must reject both and keep e3
  const double h = 1.0 / std::sqrt(2.0);
  CVector psi = CVector::Zero(3), phi = CVector::Zero(3);
  psi(0) = h;
  psi(1) = h;
  phi(0) = h;
  phi(1) = -h;
  const std::vector<CVector> frame = orthonormal_completion(psi, phi);
  REQUIRE(frame.size() == 3);
  CHECK(std::abs(frame[2](2)) == doctest::Approx(1.0));
  const GeneratorBasis basis = adapted_basis(psi, phi);
  CHECK(pairwise_trace_deviation(basis.generators) < 1e-12);
}

TEST_CASE("degenerate or invalid pairs are rejected") {
  CHECK_THROWS_AS(adapted_basis(unit(2, 0), unit(2, 0)), InputError);
  CVector not_unit = 0.5 * unit(2, 1);
  CHECK_THROWS_AS(adapted_basis(unit(2, 0), not_unit), InputError);
  CHECK_THROWS_AS(adapted_basis(unit(2, 0), unit(3, 1)), InputError);
}

TEST_CASE("composite (2,2): first A-block generator is sigma_x (x) I / sqrt(2)") {
  const CompositeBasis comp = composite_basis(gell_mann_basis(2), gell_mann_basis(2));
  CMatrix sx(2, 2);
  sx << 0, 1, 1, 0;
  const CMatrix expected = kron(sx, identity(2)) / std::sqrt(2.0);
  CHECK(max_abs(comp.joint.generators[0] - expected) < 1e-15);
  Complex self = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      self += comp.joint.generators[0](r, c) * comp.joint.generators[0](c, r);
  CHECK(std::abs(self - Complex(2.0, 0.0)) < 1e-15);
}

TEST_CASE("composite (2,3): all 35 generators pass the pairwise-trace oracle") {
  const CompositeBasis comp = composite_basis(gell_mann_basis(2), gell_mann_basis(3));
  REQUIRE(comp.joint.size() == 35);
  CHECK(pairwise_trace_deviation(comp.joint.generators) < 1e-12);
  CHECK(hermiticity_deviation(comp.joint.generators) < 1e-12);
  for (const CMatrix& g : comp.joint.generators) {
    CHECK(std::abs(g.trace()) < 1e-12);
  }
}

TEST_CASE("composite bases are valid for all pairs in {2,3}x{2,3}") {
  for (int na : {2, 3}) {
    for (int nb : {2, 3}) {
      const CompositeBasis comp =
          composite_basis(gell_mann_basis(na), gell_mann_basis(nb));
      const int n = na * nb;
      REQUIRE(comp.joint.size() == n * n - 1);
      CHECK(comp.joint.orthonormality_deviation() < 1e-12);
    }
  }
}

TEST_CASE("flat index layout: A block, B block, then lexicographic correlation block") {
  const CompositeBasis comp = composite_basis(gell_mann_basis(2), gell_mann_basis(3));
  const int sa = 3, sb = 8;
  CHECK(comp.flat_index(1, 0) == 0);
  CHECK(comp.flat_index(3, 0) == 2);
  CHECK(comp.flat_index(0, 1) == sa);
  CHECK(comp.flat_index(0, 8) == sa + sb - 1);
  CHECK(comp.flat_index(1, 1) == sa + sb);
  CHECK(comp.flat_index(2, 1) == sa + sb + sb);
  CHECK(comp.flat_index(3, 8) == sa + sb + sa * sb - 1);
  CHECK_THROWS_AS(comp.flat_index(0, 0), InputError);
  CHECK_THROWS_AS(comp.flat_index(4, 0), InputError);
  // bijection round trip
  for (int f = 0; f < sa + sb + sa * sb; ++f) {
    auto [i, j] = comp.index_pair(f);
    CHECK(comp.flat_index(i, j) == f);
  }
}

TEST_CASE("composite labels carry the index pairs") {
  const CompositeBasis comp = composite_basis(gell_mann_basis(2), gell_mann_basis(2));
  CHECK(comp.joint.labels[0].str() == "tensor(1,0)");
  CHECK(comp.joint.labels[3].str() == "tensor(0,1)");
  CHECK(comp.joint.labels[6].str() == "tensor(1,1)");
}
