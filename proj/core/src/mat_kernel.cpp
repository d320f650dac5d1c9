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

#include "extbloch/mat_kernel.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace extbloch {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw InputError(std::string(what) + ": expected a non-empty square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_hermitian(const CMatrix& m, double tol, const char* what) {
  require_square(m, what);
  if (!is_finite(m)) {
    throw InputError(std::string(what) + ": matrix has non-finite entries");
  }
  const double dev = max_abs(m - CMatrix(m.adjoint()));
  if (dev > tol) {
    throw InputError(std::string(what) + ": matrix is not Hermitian (deviation " +
                     std::to_string(dev) + " > tol " + std::to_string(tol) + ")");
  }
}

}  // namespace

bool is_finite(const CMatrix& m) { return m.allFinite(); }
bool is_finite(const CVector& v) { return v.allFinite(); }

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - CMatrix(m.adjoint())) <= tol;
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

CMatrix identity(int n) {
  if (n < 1) throw InputError("identity: dimension must be positive");
  return CMatrix::Identity(n, n);
}

CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

Complex trace(const CMatrix& m) {
  require_square(m, "trace");
  return m.trace();
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw InputError("trace_product: incompatible shapes");
  }
  // Tr(ab) = sum_{ij} a(i,j) b(j,i)
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      sum += a(i, j) * b(j, i);
    }
  }
  return sum;
}

CMatrix outer(const CVector& u, const CVector& v) { return u * v.adjoint(); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw InputError("kron: factors must be non-empty");
  }
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw InputError("kron: factors must be non-empty");
  }
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix partial_trace(const CMatrix& d, int na, int nb, Side side) {
  if (na < 1 || nb < 1) {
    throw InputError("partial_trace: subsystem dimensions must be positive");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(na) * nb;
  if (d.rows() != n || d.cols() != n) {
    throw InputError("partial_trace: operator is " + std::to_string(d.rows()) + "x" +
                     std::to_string(d.cols()) + ", expected " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  if (side == Side::B) {
    CMatrix out = CMatrix::Zero(na, na);
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < na; ++j) {
        Complex sum = 0.0;
        for (int k = 0; k < nb; ++k) {
          sum += d(static_cast<Eigen::Index>(i) * nb + k,
                   static_cast<Eigen::Index>(j) * nb + k);
        }
        out(i, j) = sum;
      }
    }
    return out;
  }
  CMatrix out = CMatrix::Zero(nb, nb);
  for (int k = 0; k < nb; ++k) {
    for (int l = 0; l < nb; ++l) {
      Complex sum = 0.0;
      for (int i = 0; i < na; ++i) {
        sum += d(static_cast<Eigen::Index>(i) * nb + k,
                 static_cast<Eigen::Index>(i) * nb + l);
      }
      out(k, l) = sum;
    }
  }
  return out;
}

EigenSystem hermitian_eigensystem(const CMatrix& h, double tol) {
  require_hermitian(h, tol, "hermitian_eigensystem");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigensystem: eigensolver did not converge");
  }
  EigenSystem out;
  out.values = solver.eigenvalues();
  out.vectors.reserve(h.rows());
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    out.vectors.push_back(solver.eigenvectors().col(k));
  }
  return out;
}

bool is_psd(const CMatrix& h, double tol) {
  return min_eigenvalue(h, kDefaultTol) >= -tol;
}

double min_eigenvalue(const CMatrix& h, double tol) {
  require_hermitian(h, tol, "min_eigenvalue");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("min_eigenvalue: eigensolver did not converge");
  }
  return solver.eigenvalues()(0);
}

void require_unit_norm(const CVector& v, double tol, const char* what) {
  if (v.size() == 0) {
    throw InputError(std::string(what) + ": empty vector");
  }
  if (!is_finite(v)) {
    throw InputError(std::string(what) + ": non-finite entries");
  }
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw InputError(std::string(what) + ": norm " + std::to_string(norm) +
                     " is not 1 within tol " + std::to_string(tol));
  }
}

DensityOperator DensityOperator::from_matrix(CMatrix m, double tol) {
  require_hermitian(m, tol, "DensityOperator");
  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol) {
    throw InputError("DensityOperator: trace deviates from 1 by " +
                     std::to_string(trace_dev));
  }
  const double min_eig = min_eigenvalue(m, tol);
  if (min_eig < -tol) {
    throw InputError("DensityOperator: not positive semidefinite (min eigenvalue " +
                     std::to_string(min_eig) + ")");
  }
  return DensityOperator(std::move(m));
}

DensityOperator DensityOperator::pure(const CVector& v, double tol) {
  require_unit_norm(v, tol, "DensityOperator::pure");
  return DensityOperator(outer(v, v));
}

DensityOperator DensityOperator::maximally_mixed(int n) {
  if (n < 1) throw InputError("DensityOperator::maximally_mixed: dimension must be positive");
  return DensityOperator(CMatrix(identity(n) / static_cast<double>(n)));
}

}  // namespace extbloch
