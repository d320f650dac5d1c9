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

#include "state_file.hpp"

#include <cmath>
#include <fstream>

namespace extbloch::cli {

namespace {

CVector canonical_vector(int n, int k) {
  CVector e = CVector::Zero(n);
  e(k) = 1.0;
  return e;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw InputError(std::string("state file: missing or non-numeric field '") + key +
                     "'");
  }
  return j[key].get<double>();
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(std::string("state file: missing or non-integer field '") + key +
                     "'");
  }
  return j[key].get<int>();
}

}  // namespace

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

json cvector_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

json cmatrix_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json rvector_json(const RVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("state file: complex scalar must be a two-element [re, im] array");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

CVector cvector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("state file: vector must be a non-empty array");
  }
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

CMatrix cmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("state file: matrix must be a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw InputError("state file: matrix rows must be non-empty arrays");
  }
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw InputError("state file: matrix rows have inconsistent lengths");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

RVector rvector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw InputError("state file: real vector must be a non-empty array");
  }
  RVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw InputError("state file: real vector entries must be numbers");
    }
    v(i) = j[i].get<double>();
  }
  return v;
}

json spec_json(const EntangledSpec& spec) {
  json out;
  out["na"] = spec.na;
  out["nb"] = spec.nb;
  out["a1"] = spec.a1;
  out["a2"] = spec.a2;
  out["alpha1"] = spec.alpha1;
  out["alpha2"] = spec.alpha2;
  out["psi_a"] = cvector_json(spec.psi_a);
  out["phi_a"] = cvector_json(spec.phi_a);
  out["psi_b"] = cvector_json(spec.psi_b);
  out["phi_b"] = cvector_json(spec.phi_b);
  return out;
}

EntangledSpec spec_from_json(const json& j, double tol) {
  if (!j.is_object()) {
    throw InputError("state file: 'spec' must be an object");
  }
  const int na = int_field(j, "na");
  const int nb = int_field(j, "nb");
  if (na < 2 || nb < 2) {
    throw InputError("state file: spec dimensions must be at least 2");
  }
  const double a1 = number_field(j, "a1");
  double a2;
  if (j.contains("a2")) {
    a2 = number_field(j, "a2");
  } else {
    if (a1 < 0.0 || a1 > 1.0) {
      throw InputError("state file: a1 must lie in [0,1]");
    }
    a2 = std::sqrt(std::max(0.0, 1.0 - a1 * a1));
  }
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  if (j.contains("alpha1") || j.contains("alpha2")) {
    alpha1 = j.contains("alpha1") ? number_field(j, "alpha1") : 0.0;
    alpha2 = j.contains("alpha2") ? number_field(j, "alpha2") : 0.0;
  } else if (j.contains("alpha")) {
    alpha2 = number_field(j, "alpha");
  }
  auto vec = [&](const char* key, int dim, int fallback) {
    if (j.contains(key)) return cvector_from_json(j[key]);
    return canonical_vector(dim, fallback);
  };
  return EntangledSpec::create(na, nb, a1, a2, alpha1, alpha2, vec("psi_a", na, 0),
                               vec("phi_a", na, 1), vec("psi_b", nb, 0),
                               vec("phi_b", nb, 1), tol);
}

json density_state_json(const CMatrix& m) {
  json out;
  out["schema"] = kStateSchema;
  out["kind"] = "density";
  out["n"] = m.rows();
  out["matrix"] = cmatrix_json(m);
  return out;
}

json state_vector_json(const CVector& v) {
  json out;
  out["schema"] = kStateSchema;
  out["kind"] = "state_vector";
  out["n"] = v.size();
  out["vector"] = cvector_json(v);
  return out;
}

json bloch_state_json(const BlochVector& r) {
  json out;
  out["schema"] = kStateSchema;
  out["kind"] = "bloch";
  out["n"] = r.n;
  out["basis"] = r.basis_ref;
  out["components"] = rvector_json(r.components);
  return out;
}

StateFile StateFile::load(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open state file '" + path + "'");
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("state file '" + path + "': " + e.what());
  }
  return parse(j, tol);
}

StateFile StateFile::parse(const json& j, double tol) {
  if (!j.is_object()) {
    throw InputError("state file: top level must be an object");
  }
  if (!j.contains("schema") || j["schema"] != kStateSchema) {
    throw InputError(std::string("state file: expected schema '") + kStateSchema + "'");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw InputError("state file: missing 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();

  StateFile out;
  if (kind == "density") {
    out.kind = Kind::Density;
    out.n = int_field(j, "n");
    if (!j.contains("matrix")) throw InputError("state file: density needs 'matrix'");
    out.matrix = cmatrix_from_json(j["matrix"]);
    if (out.matrix.rows() != out.n || out.matrix.cols() != out.n) {
      throw InputError("state file: matrix shape disagrees with 'n'");
    }
  } else if (kind == "state_vector") {
    out.kind = Kind::StateVector;
    out.n = int_field(j, "n");
    if (!j.contains("vector")) throw InputError("state file: state_vector needs 'vector'");
    out.vector = cvector_from_json(j["vector"]);
    if (out.vector.size() != out.n) {
      throw InputError("state file: vector length disagrees with 'n'");
    }
  } else if (kind == "bloch") {
    out.kind = Kind::Bloch;
    out.n = int_field(j, "n");
    if (!j.contains("components")) throw InputError("state file: bloch needs 'components'");
    out.bloch = rvector_from_json(j["components"]);
    if (out.bloch.size() != static_cast<Eigen::Index>(out.n) * out.n - 1) {
      throw InputError("state file: bloch components must have length n^2-1");
    }
    out.bloch_basis = j.contains("basis") && j["basis"].is_string()
                          ? j["basis"].get<std::string>()
                          : "gell-mann(" + std::to_string(out.n) + ")";
  } else if (kind == "entangled_spec") {
    out.kind = Kind::Spec;
    if (!j.contains("spec")) throw InputError("state file: entangled_spec needs 'spec'");
    out.spec = spec_from_json(j["spec"], tol);
    out.n = out.spec->joint_dim();
  } else {
    throw InputError("state file: unknown kind '" + kind + "'");
  }
  return out;
}

}  // namespace extbloch::cli
