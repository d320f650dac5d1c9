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

#include <cstdint>
#include <string>
#include <vector>

#include "extbloch/bloch_map.hpp"
#include "extbloch/mat_kernel.hpp"
#include "extbloch/sun_basis.hpp"

namespace extbloch {

/// The (N-1)-simplex inscribed in the Bloch ball whose vertices are the
/// Bloch images of the eigenprojectors of an orthonormal basis. Vertices
/// are unit vectors with pairwise dot product -1/(N-1) and zero barycenter.
struct MeasurementSimplex {
  int n = 0;
  std::vector<CVector> eigenbasis;
  std::vector<BlochVector> vertices;
  std::string basis_ref;
};

MeasurementSimplex simplex_from_basis(const std::vector<CVector>& eigenbasis,
                                      const GeneratorBasis& basis,
                                      double tol = kDefaultTol);

/// Orthogonal projection of a state point onto the affine hull of the
/// simplex, and its barycentric coordinates there. The coordinates sum to 1
/// (within 1e-12) and, for valid states, equal the outcome probabilities
/// Tr(D P_k) — computed here by pure geometry, independent of any trace.
struct SimplexProjection {
  RVector on_point;
  RVector lambdas;
};
SimplexProjection project_to_simplex(const BlochVector& r, const MeasurementSimplex& s);

/// Outcome probabilities Tr(d P_k) per vertex, by direct quadratic form.
/// The independent trace-route counterpart to project_to_simplex.
std::vector<double> born_probabilities(const DensityOperator& d,
                                       const MeasurementSimplex& s);

/// Outcome statistics of a seeded measurement run. `algorithm` names the
/// exact generator pipeline so reports are reproducible across platforms.
struct SampleReport {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> counts;
  std::vector<double> frequencies;
  std::vector<double> born;  // exact outcome law used for the draws
  double max_deviation = 0.0;
  std::string algorithm;
};

/// Draws `shots` independent outcomes with the barycentric probabilities of
/// the projected state point. Shots are processed in fixed 65536-shot chunks,
/// each chunk seeded from a splitmix64 stream of the master seed; merged
/// counts are therefore identical for any `threads` >= 1.
/// Coordinates in [-1e-10, 0) are clamped to zero and the law renormalized;
/// anything more negative raises VerificationError.
SampleReport sample_outcomes(const BlochVector& r, const MeasurementSimplex& s,
                             std::uint64_t shots, std::uint64_t seed, int threads = 1);

/// Rank-1 projector onto eigenvector k; the post-measurement state. Its
/// Bloch vector is vertex k.
DensityOperator collapse(const MeasurementSimplex& s, int k);

}  // namespace extbloch
