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

#include <utility>

#include "extbloch/bloch_map.hpp"
#include "extbloch/mat_kernel.hpp"
#include "extbloch/sun_basis.hpp"

namespace extbloch {

/// Parameters of the two-term entangled family
///   |psi> = a1 e^{i alpha1} |psi_A> (x) |phi_B> + a2 e^{i alpha2} |phi_A> (x) |psi_B>
/// with a1^2 + a2^2 = 1, <psi_A|phi_A> = <psi_B|phi_B> = 0, all four vectors
/// unit norm. Both phases are kept so the state vector is reconstructible
/// exactly; only alpha = alpha2 - alpha1 is physical.
struct EntangledSpec {
  int na = 0;
  int nb = 0;
  double a1 = 0.0;
  double a2 = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  CVector psi_a, phi_a, psi_b, phi_b;

  /// Validates all invariants (amplitudes in [0,1] summing to one in
  /// quadrature within tol, orthonormal pairs, finite entries).
  static EntangledSpec create(int na, int nb, double a1, double a2, double alpha1,
                              double alpha2, CVector psi_a, CVector phi_a,
                              CVector psi_b, CVector phi_b, double tol = kDefaultTol);

  /// Convenience family over canonical vectors e1, e2 with alpha1 = 0,
  /// alpha2 = alpha and a2 = sqrt(1 - a1^2).
  static EntangledSpec canonical(int na, int nb, double a1, double alpha,
                                 double tol = kDefaultTol);

  double alpha() const { return alpha2 - alpha1; }
  int joint_dim() const { return na * nb; }
};

/// d_NA = sqrt((NA-1)/(N-1)), d_NB = sqrt((NB-1)/(N-1)),
/// d_NA_NB = sqrt((NA-1)(NB-1)/(N-1)), with N = NA*NB. These are the scale
/// factors that make the composite Bloch vector a direct sum of the
/// sub-entity vectors and the correlation block.
struct DecompCoefficients {
  double d_a = 0.0;
  double d_b = 0.0;
  double d_ab = 0.0;

  static DecompCoefficients make(int na, int nb);
};

enum class StateClass { Product, Entangled };

/// The composite Bloch vector split as
///   r = d_a r_a_bar (+) d_b r_b_bar (+) r_corr,
///   r_corr = d_ab r_ab_bar + r_int,
/// in the adapted composite basis built from the spec's own state pairs.
/// r_a_bar / r_b_bar are the sub-entity states (they coincide with the Bloch
/// vectors of the reduced operators), r_ab_bar is the amplitude-weighted
/// product contribution and r_int carries the superposition cross terms.
/// Correlation-block vectors are stored (i,j)-major: offset (i-1)*sB + (j-1).
struct TripartiteDecomposition {
  DecompCoefficients coeff;
  BlochVector r_a_bar;
  BlochVector r_b_bar;
  RVector r_corr;
  RVector r_ab_bar;
  RVector r_int;
  CompositeBasis basis;
  StateClass classification = StateClass::Entangled;
  BlochVector full;  // assembled composite vector, equals density_to_bloch of the state

  /// Largest deviation between the closed-form sub-entity blocks (scaled by
  /// d_a, d_b) and the corresponding slices of the brute-force vector.
  double reconstruction_residual = 0.0;
  /// |d_a^2 ||r_a_bar||^2 + d_b^2 ||r_b_bar||^2 + ||r_corr||^2 - 1|.
  double norm_identity_residual = 0.0;

  /// 0-based offset of correlation pair (i,j), 1-based i,j.
  int corr_index(int i, int j) const;
};

/// The state vector of the family, exactly as parametrized (global phase
/// included). Unit norm within 1e-12 when the spec holds exactly.
CVector build_state_vector(const EntangledSpec& spec);

/// Operator form a1^2 P_psiA (x) P_phiB + a2^2 P_phiA (x) P_psiB + I_int,
/// assembled term by term; equals the projector onto build_state_vector.
DensityOperator build_density(const EntangledSpec& spec);

/// Interference contribution
///   a1 a2 e^{-i alpha} |psi_A><phi_A| (x) |phi_B><psi_B| + h.c.
/// Hermitian and traceless; zero when a1 a2 = 0.
CMatrix interference_operator(const EntangledSpec& spec);

/// Closed-form reduced states (a1^2 P_psiA + a2^2 P_phiA,
/// a1^2 P_phiB + a2^2 P_psiB); each equals the corresponding partial trace
/// of build_density.
std::pair<DensityOperator, DensityOperator> reduced_states(const EntangledSpec& spec);

/// The classical mixture of the two product terms (no interference part).
/// A comparison object, not a member of the family: separable but not a
/// product state when a1 a2 != 0.
DensityOperator separable_operator(const EntangledSpec& spec);

/// Full tripartite decomposition in the adapted bases derived from the
/// spec's state pairs. Sub-entity and product blocks come from the closed
/// forms; r_corr is read off the brute-force composite vector; r_int is
/// their difference. Residual fields record how well the two routes agree.
TripartiteDecomposition decompose(const EntangledSpec& spec);

/// Raw block extraction for an arbitrary density operator in caller-supplied
/// one-entity bases: A block / d_a, B block / d_b, correlation block. No
/// interference split (that requires the two-term family and its adapted
/// bases).
struct RawBlocks {
  DecompCoefficients coeff;
  BlochVector r_a_bar;
  BlochVector r_b_bar;
  RVector r_corr;
};
RawBlocks decompose_operator(const DensityOperator& d, const GeneratorBasis& basis_a,
                             const GeneratorBasis& basis_b);

/// The four interference components at pairs (1,1), (2,2), (1,2), (2,1) of
/// the adapted correlation block. Verifies the closed form
///   e_N sqrt(2) a1 a2 (cos a, cos a, -sin a, sin a),  a = alpha2 - alpha1,
/// within 1e-10 and that every other r_int component vanishes below 1e-10;
/// violation raises VerificationError (a basis-convention bug).
struct InterferenceComponents {
  double c11 = 0.0;
  double c22 = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
};
InterferenceComponents interference_components(const TripartiteDecomposition& decomp,
                                               const EntangledSpec& spec);

}  // namespace extbloch
