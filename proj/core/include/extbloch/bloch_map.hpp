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

#include <string>

#include "extbloch/mat_kernel.hpp"
#include "extbloch/sun_basis.hpp"

namespace extbloch {

/// Scale constants of the generalized Bloch parametrization
///   D = (1/N)(I + c_N r . Lambda),   r_i = e_N Tr(D Lambda_i),
/// with c_N = sqrt(N(N-1)/2) and e_N = N/(2 c_N).
struct BlochConstants {
  int n = 0;
  double c_n = 0.0;
  double e_n = 0.0;

  static BlochConstants make(int n);
};

/// Real vector of dimension N^2-1 representing a state inside the closed
/// unit ball; `basis_ref` names the generator determination the components
/// refer to. For N > 2 not every point of the ball is a state: validity is
/// a separate predicate (is_valid_bloch), never assumed.
struct BlochVector {
  int n = 0;
  RVector components;
  std::string basis_ref;

  double norm() const { return components.norm(); }
};

/// r_i = e_N Tr(d Lambda_i). The traces of a Hermitian operator against
/// Hermitian generators are real; an imaginary residue above 1e-10 raises
/// NumericalError (it means a non-Hermitian operator slipped through).
BlochVector density_to_bloch(const DensityOperator& d, const GeneratorBasis& basis);

/// (1/N)(I + c_N r . Lambda). Hermitian with unit trace by construction but
/// NOT guaranteed positive; callers that need a state must check
/// is_valid_bloch (the measurement geometry works with non-state points of
/// the ball, which is why no validation happens here).
CMatrix bloch_to_density(const BlochVector& r, const GeneratorBasis& basis);

/// Tr(D1 D2) computed in Bloch coordinates: 1/N + ((N-1)/N) r1.r2.
/// Requires both vectors to use the same generator basis.
double state_overlap(const BlochVector& r1, const BlochVector& r2);

/// Tr(D^2) = state_overlap(r, r); equals 1 iff ||r|| = 1.
double purity(const BlochVector& r);

/// True iff the reconstructed operator is positive semidefinite within tol.
bool is_valid_bloch(const BlochVector& r, const GeneratorBasis& basis,
                    double tol = kDefaultTol);

}  // namespace extbloch
