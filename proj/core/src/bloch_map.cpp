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

#include "extbloch/bloch_map.hpp"

#include <cmath>
#include <string>

namespace extbloch {

namespace {

constexpr double kImagResidueTol = 1e-10;

void require_same_frame(const BlochVector& r1, const BlochVector& r2) {
  if (r1.n != r2.n) {
    throw InputError("state_overlap: Bloch vectors have different dimensions");
  }
  if (r1.basis_ref != r2.basis_ref) {
    throw InputError("state_overlap: Bloch vectors use different generator bases ('" +
                     r1.basis_ref + "' vs '" + r2.basis_ref + "')");
  }
}

void require_consistent(const BlochVector& r, const GeneratorBasis& basis,
                        const char* what) {
  if (r.n != basis.n || r.components.size() != static_cast<Eigen::Index>(basis.generators.size())) {
    throw InputError(std::string(what) + ": Bloch vector and basis dimensions disagree");
  }
}

}  // namespace

BlochConstants BlochConstants::make(int n) {
  if (n < 2) {
    throw InputError("BlochConstants: dimension must be at least 2");
  }
  BlochConstants c;
  c.n = n;
  c.c_n = std::sqrt(n * (n - 1) / 2.0);
  c.e_n = n / (2.0 * c.c_n);
  return c;
}

BlochVector density_to_bloch(const DensityOperator& d, const GeneratorBasis& basis) {
  if (d.dim() != basis.n) {
    throw InputError("density_to_bloch: operator is " + std::to_string(d.dim()) +
                     "-dimensional but basis is for N = " + std::to_string(basis.n));
  }
  const BlochConstants c = BlochConstants::make(basis.n);
  BlochVector r;
  r.n = basis.n;
  r.basis_ref = basis.name;
  r.components.resize(basis.size());
  double imag_residue = 0.0;
  for (int i = 0; i < basis.size(); ++i) {
    const Complex t = c.e_n * trace_product(d.matrix(), basis.generators[i]);
    imag_residue = std::max(imag_residue, std::abs(t.imag()));
    r.components(i) = t.real();
  }
  if (imag_residue > kImagResidueTol) {
    throw NumericalError("density_to_bloch: imaginary residue " +
                         std::to_string(imag_residue) + " exceeds 1e-10");
  }
  return r;
}

CMatrix bloch_to_density(const BlochVector& r, const GeneratorBasis& basis) {
  require_consistent(r, basis, "bloch_to_density");
  const BlochConstants c = BlochConstants::make(basis.n);
  CMatrix m = identity(basis.n);
  for (int i = 0; i < basis.size(); ++i) {
    m += (c.c_n * r.components(i)) * basis.generators[i];
  }
  m /= static_cast<double>(basis.n);
  return m;
}

double state_overlap(const BlochVector& r1, const BlochVector& r2) {
  require_same_frame(r1, r2);
  const double n = r1.n;
  return 1.0 / n + ((n - 1.0) / n) * r1.components.dot(r2.components);
}

double purity(const BlochVector& r) { return state_overlap(r, r); }

bool is_valid_bloch(const BlochVector& r, const GeneratorBasis& basis, double tol) {
  return is_psd(bloch_to_density(r, basis), tol);
}

}  // namespace extbloch
