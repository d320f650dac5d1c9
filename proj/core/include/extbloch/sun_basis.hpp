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
#include <utility>
#include <vector>

#include "extbloch/mat_kernel.hpp"

namespace extbloch {

/// Classification of one generator within a basis, with its 1-based index
/// data ("sym(1,3)", "diag(2)", "tensor(0,2)", ...).
struct GeneratorLabel {
  enum class Kind {
    Symmetric,           // |j><k| + |k><j|
    Antisymmetric,       // -i(|j><k| - |k><j|)
    Diagonal,            // sqrt(2/(l(l+1))) diag(1,...,1,-l,0,...,0)
    AdaptedSymmetric,    // symmetric generator of a supplied state pair
    AdaptedAntisymmetric,
    Tensor,              // composite generator index pair (i,j)
  };
  Kind kind = Kind::Symmetric;
  int a = 0;
  int b = 0;

  std::string str() const;
};

/// An ordered determination of the SU(N) generators: N^2-1 self-adjoint
/// traceless matrices with Tr(L_i L_j) = 2 delta_ij. Immutable once built;
/// `name` identifies the determination so Bloch vectors can be checked for
/// basis compatibility.
struct GeneratorBasis {
  int n = 0;
  std::vector<CMatrix> generators;
  std::vector<GeneratorLabel> labels;
  std::string name;

  int size() const { return static_cast<int>(generators.size()); }

  /// Max deviation over Hermiticity, tracelessness and pairwise
  /// trace-orthonormality. A bona fide basis stays below 1e-12.
  double orthonormality_deviation() const;
};

/// Standard generalized Gell-Mann determination for C^n, n >= 2. Order is
/// fixed: symmetric pairs (j<k, lexicographic), then antisymmetric pairs,
/// then the n-1 diagonal generators. For n = 2 this is exactly
/// (sigma_x, sigma_y, sigma_z).
GeneratorBasis gell_mann_basis(int n);

/// Determination whose first two generators are built from an orthonormal
/// pair: |psi><phi| + |phi><psi| and -i(|psi><phi| - |phi><psi|). The pair
/// is extended to an orthonormal basis by modified Gram-Schmidt over the
/// canonical vectors (candidates with residual below 1e-8 are skipped) and
/// the Gell-Mann construction is applied in that frame, reordered so the
/// (psi,phi)-plane generators come first.
GeneratorBasis adapted_basis(const CVector& psi, const CVector& phi,
                             double tol = kDefaultTol);

/// The deterministic frame extension behind adapted_basis: (psi, phi,
/// Gram-Schmidt completion over the canonical vectors). Useful as the
/// eigenbasis of a measurement aligned with a state pair.
std::vector<CVector> orthonormal_completion(const CVector& psi, const CVector& phi,
                                            double tol = kDefaultTol);

/// Tensor determination of SU(nA*nB): L_(i,j) = (1/sqrt(2)) L^A_i (x) L^B_j
/// with L^A_0 = sqrt(2/nA) I and L^B_0 = sqrt(2/nB) I, every (i,j) except
/// (0,0). Flat order: the A block (i,0), then the B block (0,j), then the
/// correlation block (i,j) with i,j >= 1 lexicographic, so a composite Bloch
/// vector is literally [A block | B block | correlation block] in memory.
struct CompositeBasis {
  GeneratorBasis basis_a;
  GeneratorBasis basis_b;
  GeneratorBasis joint;

  int na() const { return basis_a.n; }
  int nb() const { return basis_b.n; }

  /// 0-based position in `joint` of the generator with 1-based block pair
  /// (i,j) != (0,0), i in 0..nA^2-1, j in 0..nB^2-1.
  int flat_index(int i, int j) const;
  /// Inverse of flat_index.
  std::pair<int, int> index_pair(int flat) const;
};

CompositeBasis composite_basis(const GeneratorBasis& a, const GeneratorBasis& b);

}  // namespace extbloch
