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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "extbloch/errors.hpp"

namespace extbloch {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Every operator in this library is small
/// (N <= ~16), so there is a single dense path and no sparse storage.
using CMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RVector = Eigen::VectorXd;

/// Default tolerance for invariant validation at API boundaries
/// (Hermiticity, unit trace, unit norm, orthogonality). Configurable per
/// call; tighter residue thresholds on internal identities are fixed where
/// they are defined.
inline constexpr double kDefaultTol = 1e-9;

// Composite index convention, used everywhere a bipartite system appears:
// the basis of C^{nA} (x) C^{nB} is ordered with the A index major,
// (i, k) -> i * nB + k.

bool is_finite(const CMatrix& m);
bool is_finite(const CVector& v);
bool is_hermitian(const CMatrix& m, double tol = kDefaultTol);

/// Max-norm (largest entry modulus); zero for empty matrices.
double max_abs(const CMatrix& m);

CMatrix identity(int n);
CMatrix dagger(const CMatrix& m);
Complex trace(const CMatrix& m);

/// Tr(a*b) without forming the product.
Complex trace_product(const CMatrix& a, const CMatrix& b);

/// |u><v|
CMatrix outer(const CVector& u, const CVector& v);

/// Tensor (Kronecker) product; entry ((i,k),(j,l)) = a(i,j) * b(k,l) in the
/// composite index convention above.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CVector kron(const CVector& a, const CVector& b);

enum class Side { A, B };

/// Reduced operator of a (nA*nB)x(nA*nB) matrix. side == Side::B traces out
/// the B factor and returns an nA x nA matrix with entries
/// sum_k d[(i,k),(j,k)]; side == Side::A is the mirror case.
CMatrix partial_trace(const CMatrix& d, int na, int nb, Side side);

struct EigenSystem {
  RVector values;                // ascending
  std::vector<CVector> vectors;  // orthonormal, vectors[k] pairs with values[k]
};

/// Spectral decomposition of a Hermitian matrix. Throws InputError when the
/// input is not Hermitian within `tol`.
EigenSystem hermitian_eigensystem(const CMatrix& h, double tol = kDefaultTol);

/// True iff the minimum eigenvalue of Hermitian `h` is >= -tol.
bool is_psd(const CMatrix& h, double tol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& h, double tol = kDefaultTol);

void require_unit_norm(const CVector& v, double tol = kDefaultTol,
                       const char* what = "state vector");

/// Hermitian, unit-trace, positive-semidefinite operator. Validated on
/// construction; immutable afterwards, safe to share across threads.
class DensityOperator {
 public:
  /// Validates Hermiticity, unit trace and positivity within `tol`.
  static DensityOperator from_matrix(CMatrix m, double tol = kDefaultTol);

  /// Rank-1 projector |v><v| of a unit vector; positive by construction.
  static DensityOperator pure(const CVector& v, double tol = kDefaultTol);

  /// I/n, the center of the Bloch ball.
  static DensityOperator maximally_mixed(int n);

  const CMatrix& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  explicit DensityOperator(CMatrix m) : mat_(std::move(m)) {}
  CMatrix mat_;
};

}  // namespace extbloch
