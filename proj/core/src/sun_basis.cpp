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

#include "extbloch/sun_basis.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace extbloch {

namespace {

constexpr double kGramSchmidtSkip = 1e-8;

// Gell-Mann construction over an arbitrary orthonormal frame b_1..b_n.
// adapted_first moves the (1,2)-plane symmetric/antisymmetric pair to the
// front (the adapted determination); otherwise the order is sym block,
// antisym block, diag block.
GeneratorBasis build_in_frame(const std::vector<CVector>& frame, bool adapted_first) {
  const int n = static_cast<int>(frame.size());
  GeneratorBasis basis;
  basis.n = n;
  basis.generators.reserve(static_cast<std::size_t>(n) * n - 1);
  basis.labels.reserve(static_cast<std::size_t>(n) * n - 1);

  auto sym = [&](int j, int k) {  // 1-based
    return CMatrix(outer(frame[j - 1], frame[k - 1]) + outer(frame[k - 1], frame[j - 1]));
  };
  auto antisym = [&](int j, int k) {
    return CMatrix(Complex(0.0, -1.0) *
                   (outer(frame[j - 1], frame[k - 1]) - outer(frame[k - 1], frame[j - 1])));
  };

  if (adapted_first) {
    basis.generators.push_back(sym(1, 2));
    basis.labels.push_back({GeneratorLabel::Kind::AdaptedSymmetric, 1, 2});
    basis.generators.push_back(antisym(1, 2));
    basis.labels.push_back({GeneratorLabel::Kind::AdaptedAntisymmetric, 1, 2});
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (adapted_first && j == 1 && k == 2) continue;
      basis.generators.push_back(sym(j, k));
      basis.labels.push_back({GeneratorLabel::Kind::Symmetric, j, k});
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      if (adapted_first && j == 1 && k == 2) continue;
      basis.generators.push_back(antisym(j, k));
      basis.labels.push_back({GeneratorLabel::Kind::Antisymmetric, j, k});
    }
  }
  for (int l = 1; l <= n - 1; ++l) {
    CMatrix d = CMatrix::Zero(n, n);
    for (int m = 1; m <= l; ++m) d += outer(frame[m - 1], frame[m - 1]);
    d -= static_cast<double>(l) * outer(frame[l], frame[l]);
    d *= std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    basis.generators.push_back(std::move(d));
    basis.labels.push_back({GeneratorLabel::Kind::Diagonal, l, 0});
  }
  return basis;
}

std::vector<CVector> canonical_frame(int n) {
  std::vector<CVector> frame;
  frame.reserve(n);
  for (int k = 0; k < n; ++k) {
    CVector e = CVector::Zero(n);
    e(k) = 1.0;
    frame.push_back(std::move(e));
  }
  return frame;
}

// FNV-1a over the raw bytes of the defining pair; distinguishes adapted
// determinations built from different state pairs.
std::string pair_fingerprint(const CVector& psi, const CVector& phi) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const CVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      double parts[2] = {v(i).real(), v(i).imag()};
      unsigned char bytes[sizeof(parts)];
      std::memcpy(bytes, parts, sizeof(parts));
      for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ULL;
      }
    }
  };
  mix(psi);
  mix(phi);
  const std::uint32_t folded = static_cast<std::uint32_t>(h ^ (h >> 32));
  char buf[9];
  std::snprintf(buf, sizeof(buf), "%08x", folded);
  return std::string(buf);
}

}  // namespace

std::string GeneratorLabel::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Symmetric:
      out << "sym(" << a << "," << b << ")";
      break;
    case Kind::Antisymmetric:
      out << "antisym(" << a << "," << b << ")";
      break;
    case Kind::Diagonal:
      out << "diag(" << a << ")";
      break;
    case Kind::AdaptedSymmetric:
      out << "adapted-sym(" << a << "," << b << ")";
      break;
    case Kind::AdaptedAntisymmetric:
      out << "adapted-antisym(" << a << "," << b << ")";
      break;
    case Kind::Tensor:
      out << "tensor(" << a << "," << b << ")";
      break;
  }
  return out.str();
}

double GeneratorBasis::orthonormality_deviation() const {
  double worst = 0.0;
  const int count = size();
  for (int i = 0; i < count; ++i) {
    const CMatrix& gi = generators[i];
    worst = std::max(worst, max_abs(gi - CMatrix(gi.adjoint())));
    worst = std::max(worst, std::abs(gi.trace()));
    for (int j = i; j < count; ++j) {
      const Complex t = trace_product(gi, generators[j]);
      const double expected = (i == j) ? 2.0 : 0.0;
      worst = std::max(worst, std::abs(t - Complex(expected, 0.0)));
    }
  }
  return worst;
}

GeneratorBasis gell_mann_basis(int n) {
  if (n < 2) {
    throw InputError("gell_mann_basis: dimension must be at least 2, got " +
                     std::to_string(n));
  }
  GeneratorBasis basis = build_in_frame(canonical_frame(n), /*adapted_first=*/false);
  basis.name = "gell-mann(" + std::to_string(n) + ")";
  return basis;
}

std::vector<CVector> orthonormal_completion(const CVector& psi, const CVector& phi,
                                            double tol) {
  if (psi.size() != phi.size()) {
    throw InputError("adapted_basis: state pair has mismatched dimensions");
  }
  const int n = static_cast<int>(psi.size());
  if (n < 2) {
    throw InputError("adapted_basis: dimension must be at least 2");
  }
  require_unit_norm(psi, tol, "adapted_basis: psi");
  require_unit_norm(phi, tol, "adapted_basis: phi");
  const double overlap = std::abs(psi.dot(phi));
  if (overlap > tol) {
    throw InputError("adapted_basis: pair is not orthogonal (|<psi|phi>| = " +
                     std::to_string(overlap) + ")");
  }

  // Extend (psi, phi) to an orthonormal frame by modified Gram-Schmidt over
  // the canonical vectors, skipping near-dependent candidates.
  std::vector<CVector> frame = {psi, phi};
  for (int k = 0; k < n && static_cast<int>(frame.size()) < n; ++k) {
    CVector v = CVector::Zero(n);
    v(k) = 1.0;
    for (const CVector& f : frame) {
      v -= f.dot(v) * f;
    }
    const double residual = v.norm();
    if (residual < kGramSchmidtSkip) continue;
    frame.push_back(v / residual);
  }
  if (static_cast<int>(frame.size()) != n) {
    throw NumericalError("adapted_basis: Gram-Schmidt completion failed");
  }
  return frame;
}

GeneratorBasis adapted_basis(const CVector& psi, const CVector& phi, double tol) {
  GeneratorBasis basis =
      build_in_frame(orthonormal_completion(psi, phi, tol), /*adapted_first=*/true);
  const int n = static_cast<int>(psi.size());
  basis.name = "adapted(" + std::to_string(n) + ")#" + pair_fingerprint(psi, phi);
  return basis;
}

int CompositeBasis::flat_index(int i, int j) const {
  const int sa = basis_a.n * basis_a.n - 1;
  const int sb = basis_b.n * basis_b.n - 1;
  if (i < 0 || i > sa || j < 0 || j > sb || (i == 0 && j == 0)) {
    throw InputError("CompositeBasis::flat_index: index pair (" + std::to_string(i) +
                     "," + std::to_string(j) + ") out of range");
  }
  if (j == 0) return i - 1;
  if (i == 0) return sa + j - 1;
  return sa + sb + (i - 1) * sb + (j - 1);
}

std::pair<int, int> CompositeBasis::index_pair(int flat) const {
  const int sa = basis_a.n * basis_a.n - 1;
  const int sb = basis_b.n * basis_b.n - 1;
  if (flat < 0 || flat >= sa + sb + sa * sb) {
    throw InputError("CompositeBasis::index_pair: flat index out of range");
  }
  if (flat < sa) return {flat + 1, 0};
  if (flat < sa + sb) return {0, flat - sa + 1};
  const int rest = flat - sa - sb;
  return {rest / sb + 1, rest % sb + 1};
}

CompositeBasis composite_basis(const GeneratorBasis& a, const GeneratorBasis& b) {
  CompositeBasis comp;
  comp.basis_a = a;
  comp.basis_b = b;
  const int na = a.n;
  const int nb = b.n;
  const CMatrix id_a = std::sqrt(2.0 / na) * identity(na);
  const CMatrix id_b = std::sqrt(2.0 / nb) * identity(nb);
  auto gen_a = [&](int i) -> const CMatrix& {
    return i == 0 ? id_a : a.generators[i - 1];
  };
  auto gen_b = [&](int j) -> const CMatrix& {
    return j == 0 ? id_b : b.generators[j - 1];
  };

  GeneratorBasis joint;
  joint.n = na * nb;
  const int sa = na * na - 1;
  const int sb = nb * nb - 1;
  joint.generators.reserve(static_cast<std::size_t>(joint.n) * joint.n - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto add = [&](int i, int j) {
    joint.generators.push_back(CMatrix(inv_sqrt2 * kron(gen_a(i), gen_b(j))));
    joint.labels.push_back({GeneratorLabel::Kind::Tensor, i, j});
  };
  for (int i = 1; i <= sa; ++i) add(i, 0);
  for (int j = 1; j <= sb; ++j) add(0, j);
  for (int i = 1; i <= sa; ++i) {
    for (int j = 1; j <= sb; ++j) add(i, j);
  }
  joint.name = "composite(" + a.name + "," + b.name + ")";
  comp.joint = std::move(joint);
  return comp;
}

}  // namespace extbloch
