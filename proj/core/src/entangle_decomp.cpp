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

#include "extbloch/entangle_decomp.hpp"

#include <cmath>
#include <string>

namespace extbloch {

namespace {

constexpr double kInterferenceTol = 1e-10;

Complex phase(double angle) { return Complex(std::cos(angle), std::sin(angle)); }

CVector canonical_vector(int n, int k) {
  CVector e = CVector::Zero(n);
  e(k) = 1.0;
  return e;
}

}  // namespace

EntangledSpec EntangledSpec::create(int na, int nb, double a1, double a2, double alpha1,
                                    double alpha2, CVector psi_a, CVector phi_a,
                                    CVector psi_b, CVector phi_b, double tol) {
  if (na < 2 || nb < 2) {
    throw InputError("EntangledSpec: sub-entity dimensions must be at least 2");
  }
  if (!(a1 >= 0.0 && a1 <= 1.0) || !(a2 >= 0.0 && a2 <= 1.0)) {
    throw InputError("EntangledSpec: amplitudes must lie in [0,1]");
  }
  if (std::abs(a1 * a1 + a2 * a2 - 1.0) > tol) {
    throw InputError("EntangledSpec: a1^2 + a2^2 deviates from 1 by " +
                     std::to_string(std::abs(a1 * a1 + a2 * a2 - 1.0)));
  }
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
    throw InputError("EntangledSpec: phases must be finite");
  }
  if (psi_a.size() != na || phi_a.size() != na || psi_b.size() != nb ||
      phi_b.size() != nb) {
    throw InputError("EntangledSpec: state vector dimensions disagree with (na, nb)");
  }
  require_unit_norm(psi_a, tol, "EntangledSpec: psi_a");
  require_unit_norm(phi_a, tol, "EntangledSpec: phi_a");
  require_unit_norm(psi_b, tol, "EntangledSpec: psi_b");
  require_unit_norm(phi_b, tol, "EntangledSpec: phi_b");
  if (std::abs(psi_a.dot(phi_a)) > tol) {
    throw InputError("EntangledSpec: <psi_a|phi_a> != 0");
  }
  if (std::abs(psi_b.dot(phi_b)) > tol) {
    throw InputError("EntangledSpec: <psi_b|phi_b> != 0");
  }

  EntangledSpec spec;
  spec.na = na;
  spec.nb = nb;
  spec.a1 = a1;
  spec.a2 = a2;
  spec.alpha1 = alpha1;
  spec.alpha2 = alpha2;
  spec.psi_a = std::move(psi_a);
  spec.phi_a = std::move(phi_a);
  spec.psi_b = std::move(psi_b);
  spec.phi_b = std::move(phi_b);
  return spec;
}

EntangledSpec EntangledSpec::canonical(int na, int nb, double a1, double alpha,
                                       double tol) {
  if (na < 2 || nb < 2) {
    throw InputError("EntangledSpec: sub-entity dimensions must be at least 2");
  }
  if (!(a1 >= 0.0 && a1 <= 1.0)) {
    throw InputError("EntangledSpec: amplitude a1 must lie in [0,1]");
  }
  const double a2 = std::sqrt(std::max(0.0, 1.0 - a1 * a1));
  return create(na, nb, a1, a2, 0.0, alpha, canonical_vector(na, 0),
                canonical_vector(na, 1), canonical_vector(nb, 0),
                canonical_vector(nb, 1), tol);
}

DecompCoefficients DecompCoefficients::make(int na, int nb) {
  if (na < 2 || nb < 2) {
    throw InputError("DecompCoefficients: dimensions must be at least 2");
  }
  const double n = static_cast<double>(na) * nb;
  DecompCoefficients c;
  c.d_a = std::sqrt((na - 1.0) / (n - 1.0));
  c.d_b = std::sqrt((nb - 1.0) / (n - 1.0));
  c.d_ab = std::sqrt((na - 1.0) * (nb - 1.0) / (n - 1.0));
  return c;
}

int TripartiteDecomposition::corr_index(int i, int j) const {
  const int sa = basis.na() * basis.na() - 1;
  const int sb = basis.nb() * basis.nb() - 1;
  if (i < 1 || i > sa || j < 1 || j > sb) {
    throw InputError("corr_index: pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ") out of range");
  }
  return (i - 1) * sb + (j - 1);
}

CVector build_state_vector(const EntangledSpec& spec) {
  return spec.a1 * phase(spec.alpha1) * kron(spec.psi_a, spec.phi_b) +
         spec.a2 * phase(spec.alpha2) * kron(spec.phi_a, spec.psi_b);
}

CMatrix interference_operator(const EntangledSpec& spec) {
  const CMatrix cross = (spec.a1 * spec.a2 * phase(-spec.alpha())) *
                        kron(outer(spec.psi_a, spec.phi_a), outer(spec.phi_b, spec.psi_b));
  return cross + CMatrix(cross.adjoint());
}

DensityOperator build_density(const EntangledSpec& spec) {
  const CMatrix m =
      spec.a1 * spec.a1 * kron(outer(spec.psi_a, spec.psi_a), outer(spec.phi_b, spec.phi_b)) +
      spec.a2 * spec.a2 * kron(outer(spec.phi_a, spec.phi_a), outer(spec.psi_b, spec.psi_b)) +
      interference_operator(spec);
  return DensityOperator::from_matrix(m);
}

std::pair<DensityOperator, DensityOperator> reduced_states(const EntangledSpec& spec) {
  const CMatrix da = spec.a1 * spec.a1 * outer(spec.psi_a, spec.psi_a) +
                     spec.a2 * spec.a2 * outer(spec.phi_a, spec.phi_a);
  const CMatrix db = spec.a1 * spec.a1 * outer(spec.phi_b, spec.phi_b) +
                     spec.a2 * spec.a2 * outer(spec.psi_b, spec.psi_b);
  return {DensityOperator::from_matrix(da), DensityOperator::from_matrix(db)};
}

DensityOperator separable_operator(const EntangledSpec& spec) {
  const CMatrix m =
      spec.a1 * spec.a1 * kron(outer(spec.psi_a, spec.psi_a), outer(spec.phi_b, spec.phi_b)) +
      spec.a2 * spec.a2 * kron(outer(spec.phi_a, spec.phi_a), outer(spec.psi_b, spec.psi_b));
  return DensityOperator::from_matrix(m);
}

RawBlocks decompose_operator(const DensityOperator& d, const GeneratorBasis& basis_a,
                             const GeneratorBasis& basis_b) {
  const int na = basis_a.n;
  const int nb = basis_b.n;
  if (d.dim() != na * nb) {
    throw InputError("decompose_operator: operator dimension " + std::to_string(d.dim()) +
                     " is not na*nb = " + std::to_string(na * nb));
  }
  const CompositeBasis comp = composite_basis(basis_a, basis_b);
  const BlochVector full = density_to_bloch(d, comp.joint);
  const int sa = na * na - 1;
  const int sb = nb * nb - 1;

  RawBlocks blocks;
  blocks.coeff = DecompCoefficients::make(na, nb);
  blocks.r_a_bar = {na, full.components.segment(0, sa) / blocks.coeff.d_a, basis_a.name};
  blocks.r_b_bar = {nb, full.components.segment(sa, sb) / blocks.coeff.d_b, basis_b.name};
  blocks.r_corr = full.components.segment(sa + sb, sa * sb);
  return blocks;
}

TripartiteDecomposition decompose(const EntangledSpec& spec) {
  TripartiteDecomposition out;
  out.coeff = DecompCoefficients::make(spec.na, spec.nb);

  const GeneratorBasis basis_a = adapted_basis(spec.psi_a, spec.phi_a);
  const GeneratorBasis basis_b = adapted_basis(spec.psi_b, spec.phi_b);
  out.basis = composite_basis(basis_a, basis_b);

  // One-entity Bloch vectors of the four defining states, in the adapted bases.
  const BlochVector r_a = density_to_bloch(DensityOperator::pure(spec.psi_a), basis_a);
  const BlochVector s_a = density_to_bloch(DensityOperator::pure(spec.phi_a), basis_a);
  const BlochVector r_b = density_to_bloch(DensityOperator::pure(spec.psi_b), basis_b);
  const BlochVector s_b = density_to_bloch(DensityOperator::pure(spec.phi_b), basis_b);

  const double w1 = spec.a1 * spec.a1;
  const double w2 = spec.a2 * spec.a2;
  out.r_a_bar = {spec.na, w1 * r_a.components + w2 * s_a.components, basis_a.name};
  out.r_b_bar = {spec.nb, w1 * s_b.components + w2 * r_b.components, basis_b.name};

  const int sa = spec.na * spec.na - 1;
  const int sb = spec.nb * spec.nb - 1;
  out.r_ab_bar.resize(sa * sb);
  for (int i = 1; i <= sa; ++i) {
    for (int j = 1; j <= sb; ++j) {
      out.r_ab_bar((i - 1) * sb + (j - 1)) =
          w1 * r_a.components(i - 1) * s_b.components(j - 1) +
          w2 * s_a.components(i - 1) * r_b.components(j - 1);
    }
  }

  // Brute-force composite vector; its correlation slice defines r_corr.
  out.full = density_to_bloch(build_density(spec), out.basis.joint);
  out.r_corr = out.full.components.segment(sa + sb, sa * sb);
  out.r_int = out.r_corr - out.coeff.d_ab * out.r_ab_bar;

  // Closed-form sub-entity blocks vs the brute-force slices.
  double residual = 0.0;
  residual = std::max(residual,
                      (out.full.components.segment(0, sa) -
                       out.coeff.d_a * out.r_a_bar.components).cwiseAbs().maxCoeff());
  residual = std::max(residual,
                      (out.full.components.segment(sa, sb) -
                       out.coeff.d_b * out.r_b_bar.components).cwiseAbs().maxCoeff());
  out.reconstruction_residual = residual;

  const double norm_sq = out.coeff.d_a * out.coeff.d_a * out.r_a_bar.components.squaredNorm() +
                         out.coeff.d_b * out.coeff.d_b * out.r_b_bar.components.squaredNorm() +
                         out.r_corr.squaredNorm();
  out.norm_identity_residual = std::abs(norm_sq - 1.0);

  out.classification =
      (spec.a1 * spec.a2 == 0.0) ? StateClass::Product : StateClass::Entangled;
  return out;
}

InterferenceComponents interference_components(const TripartiteDecomposition& decomp,
                                               const EntangledSpec& spec) {
  const BlochConstants c = BlochConstants::make(spec.joint_dim());
  const double scale = c.e_n * std::sqrt(2.0) * spec.a1 * spec.a2;
  const double alpha = spec.alpha();
  const double expected[4] = {scale * std::cos(alpha), scale * std::cos(alpha),
                              -scale * std::sin(alpha), scale * std::sin(alpha)};

  InterferenceComponents out;
  out.c11 = decomp.r_int(decomp.corr_index(1, 1));
  out.c22 = decomp.r_int(decomp.corr_index(2, 2));
  out.c12 = decomp.r_int(decomp.corr_index(1, 2));
  out.c21 = decomp.r_int(decomp.corr_index(2, 1));

  const double actual[4] = {out.c11, out.c22, out.c12, out.c21};
  for (int k = 0; k < 4; ++k) {
    if (std::abs(actual[k] - expected[k]) > kInterferenceTol) {
      throw VerificationError(
          "interference_components: component " + std::to_string(k) + " is " +
          std::to_string(actual[k]) + ", expected " + std::to_string(expected[k]) +
          " (basis-convention bug?)");
    }
  }
  const int sb = spec.nb * spec.nb - 1;
  for (Eigen::Index f = 0; f < decomp.r_int.size(); ++f) {
    const int i = static_cast<int>(f) / sb + 1;
    const int j = static_cast<int>(f) % sb + 1;
    const bool in_plane = (i == 1 || i == 2) && (j == 1 || j == 2);
    if (!in_plane && std::abs(decomp.r_int(f)) > kInterferenceTol) {
      throw VerificationError("interference_components: off-plane component (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ") is nonzero: " + std::to_string(decomp.r_int(f)));
    }
  }
  return out;
}

}  // namespace extbloch
