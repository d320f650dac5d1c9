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

#include <optional>
#include <string>

#include <json.hpp>

#include "extbloch/bloch_map.hpp"
#include "extbloch/entangle_decomp.hpp"
#include "extbloch/mat_kernel.hpp"

namespace extbloch::cli {

using json = nlohmann::json;

inline constexpr const char* kStateSchema = "extbloch-state/1";

// Complex scalars are encoded as two-element arrays [re, im]; matrices as
// row-major nested arrays of them. Unknown keys are ignored, so reports that
// embed a state object under extra keys still parse as state files.
json complex_json(const Complex& c);
json cvector_json(const CVector& v);
json cmatrix_json(const CMatrix& m);
json rvector_json(const RVector& v);
Complex complex_from_json(const json& j);
CVector cvector_from_json(const json& j);
CMatrix cmatrix_from_json(const json& j);
RVector rvector_from_json(const json& j);

json spec_json(const EntangledSpec& spec);
EntangledSpec spec_from_json(const json& j, double tol);

/// Self-contained state objects (valid inputs for any command).
json density_state_json(const CMatrix& m);
json state_vector_json(const CVector& v);
json bloch_state_json(const BlochVector& r);

/// A parsed "extbloch-state/1" document: one of a density matrix, a state
/// vector, a Bloch vector, or an entangled-spec parameter block.
struct StateFile {
  enum class Kind { Density, StateVector, Bloch, Spec };
  Kind kind = Kind::Density;
  int n = 0;  // joint dimension na*nb for Kind::Spec
  CMatrix matrix;
  CVector vector;
  RVector bloch;
  std::string bloch_basis;
  std::optional<EntangledSpec> spec;

  static StateFile load(const std::string& path, double tol);
  static StateFile parse(const json& j, double tol);
};

}  // namespace extbloch::cli
