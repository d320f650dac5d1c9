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

#include "extbloch/hidden_measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace extbloch {

namespace {

constexpr double kLambdaClamp = 1e-10;
constexpr std::uint64_t kChunkShots = 65536;
constexpr const char* kAlgorithmId = "mt19937_64/splitmix64-chunk65536/inverse-cdf";

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0,1) with 53 random bits. The mapping is spelled out
// here because std::uniform_real_distribution is implementation-defined.
double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

Eigen::MatrixXd vertex_matrix(const MeasurementSimplex& s) {
  const Eigen::Index m = s.vertices[0].components.size();
  Eigen::MatrixXd v(m, s.n);
  for (int k = 0; k < s.n; ++k) {
    v.col(k) = s.vertices[k].components;
  }
  return v;
}

std::vector<std::uint64_t> sample_chunk(const RVector& cumulative, std::uint64_t shots,
                                        std::uint64_t chunk_seed, int outcomes) {
  std::vector<std::uint64_t> counts(outcomes, 0);
  std::mt19937_64 eng(chunk_seed);
  for (std::uint64_t t = 0; t < shots; ++t) {
    const double u = uniform01(eng);
    int k = 0;
    while (k < outcomes - 1 && u >= cumulative(k)) ++k;
    ++counts[k];
  }
  return counts;
}

}  // namespace

MeasurementSimplex simplex_from_basis(const std::vector<CVector>& eigenbasis,
                                      const GeneratorBasis& basis, double tol) {
  const int n = basis.n;
  if (static_cast<int>(eigenbasis.size()) != n) {
    throw InputError("simplex_from_basis: need exactly N = " + std::to_string(n) +
                     " eigenvectors, got " + std::to_string(eigenbasis.size()));
  }
  for (int j = 0; j < n; ++j) {
    if (eigenbasis[j].size() != n) {
      throw InputError("simplex_from_basis: eigenvector dimension mismatch");
    }
    require_unit_norm(eigenbasis[j], tol, "simplex_from_basis: eigenvector");
    for (int k = j + 1; k < n; ++k) {
      if (std::abs(eigenbasis[j].dot(eigenbasis[k])) > tol) {
        throw InputError("simplex_from_basis: eigenvectors " + std::to_string(j) +
                         " and " + std::to_string(k) + " are not orthogonal");
      }
    }
  }

  MeasurementSimplex s;
  s.n = n;
  s.eigenbasis = eigenbasis;
  s.basis_ref = basis.name;
  s.vertices.reserve(n);
  for (const CVector& v : eigenbasis) {
    s.vertices.push_back(density_to_bloch(DensityOperator::pure(v, tol), basis));
  }
  return s;
}

SimplexProjection project_to_simplex(const BlochVector& r, const MeasurementSimplex& s) {
  if (r.n != s.n) {
    throw InputError("project_to_simplex: state and simplex dimensions disagree");
  }
  if (r.basis_ref != s.basis_ref) {
    throw InputError("project_to_simplex: state uses basis '" + r.basis_ref +
                     "' but simplex was built in '" + s.basis_ref + "'");
  }
  const int n = s.n;
  const Eigen::MatrixXd v = vertex_matrix(s);

  // Orthogonal projection onto the affine hull, parametrized from the last
  // vertex: on = v_N + U t with U the difference matrix.
  Eigen::MatrixXd u(v.rows(), n - 1);
  for (int k = 0; k < n - 1; ++k) {
    u.col(k) = v.col(k) - v.col(n - 1);
  }
  const Eigen::VectorXd rhs = u.transpose() * (r.components - v.col(n - 1));
  const Eigen::MatrixXd gram = u.transpose() * u;
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("project_to_simplex: degenerate simplex geometry");
  }
  const Eigen::VectorXd t = llt.solve(rhs);
  SimplexProjection out;
  out.on_point = v.col(n - 1) + u * t;

  // Barycentric coordinates: least-squares solution of [V; 1^T] lambda =
  // [on; 1] via its N x N normal equations (SPD for the regular geometry).
  const Eigen::MatrixXd a =
      v.transpose() * v + Eigen::MatrixXd::Ones(n, n);
  const Eigen::VectorXd b =
      v.transpose() * out.on_point + Eigen::VectorXd::Ones(n);
  const Eigen::LLT<Eigen::MatrixXd> llt_bary(a);
  if (llt_bary.info() != Eigen::Success) {
    throw NumericalError("project_to_simplex: barycentric system not positive definite");
  }
  out.lambdas = llt_bary.solve(b);
  return out;
}

std::vector<double> born_probabilities(const DensityOperator& d,
                                       const MeasurementSimplex& s) {
  if (d.dim() != s.n) {
    throw InputError("born_probabilities: operator and simplex dimensions disagree");
  }
  std::vector<double> probs;
  probs.reserve(s.n);
  for (const CVector& v : s.eigenbasis) {
    const double p = (v.adjoint() * d.matrix() * v)(0).real();
    probs.push_back(std::max(0.0, p));
  }
  return probs;
}

SampleReport sample_outcomes(const BlochVector& r, const MeasurementSimplex& s,
                             std::uint64_t shots, std::uint64_t seed, int threads) {
  if (shots < 1) {
    throw InputError("sample_outcomes: shots must be at least 1");
  }
  if (threads < 1) {
    throw InputError("sample_outcomes: threads must be at least 1");
  }
  if (r.norm() > 1.0 + kDefaultTol) {
    throw InputError("sample_outcomes: Bloch vector norm " + std::to_string(r.norm()) +
                     " lies outside the unit ball");
  }

  SimplexProjection proj = project_to_simplex(r, s);
  RVector law = proj.lambdas;
  for (Eigen::Index k = 0; k < law.size(); ++k) {
    if (law(k) < 0.0) {
      if (law(k) < -kLambdaClamp) {
        throw VerificationError(
            "sample_outcomes: barycentric coordinate " + std::to_string(law(k)) +
            " below clamp threshold; input is not a valid state");
      }
      law(k) = 0.0;
    }
  }
  law /= law.sum();

  const int outcomes = s.n;
  RVector cumulative(outcomes);
  double acc = 0.0;
  for (int k = 0; k < outcomes; ++k) {
    acc += law(k);
    cumulative(k) = acc;
  }
  cumulative(outcomes - 1) = 1.0;

  const std::uint64_t chunks = (shots + kChunkShots - 1) / kChunkShots;
  std::vector<std::uint64_t> chunk_seeds(chunks);
  std::uint64_t stream = seed;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    chunk_seeds[c] = splitmix64(stream);
  }

  std::vector<std::vector<std::uint64_t>> per_chunk(chunks);
  auto worker = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t c = first; c < chunks; c += stride) {
      const std::uint64_t count =
          std::min<std::uint64_t>(kChunkShots, shots - c * kChunkShots);
      per_chunk[c] = sample_chunk(cumulative, count, chunk_seeds[c], outcomes);
    }
  };
  if (threads == 1 || chunks == 1) {
    worker(0, 1);
  } else {
    const std::uint64_t workers = std::min<std::uint64_t>(threads, chunks);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back(worker, w, workers);
    }
    for (std::thread& th : pool) th.join();
  }

  SampleReport report;
  report.shots = shots;
  report.seed = seed;
  report.algorithm = kAlgorithmId;
  report.counts.assign(outcomes, 0);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    for (int k = 0; k < outcomes; ++k) {
      report.counts[k] += per_chunk[c][k];
    }
  }
  report.frequencies.resize(outcomes);
  report.born.resize(outcomes);
  report.max_deviation = 0.0;
  for (int k = 0; k < outcomes; ++k) {
    report.frequencies[k] = static_cast<double>(report.counts[k]) / shots;
    report.born[k] = law(k);
    report.max_deviation =
        std::max(report.max_deviation, std::abs(report.frequencies[k] - law(k)));
  }
  return report;
}

DensityOperator collapse(const MeasurementSimplex& s, int k) {
  if (k < 0 || k >= s.n) {
    throw InputError("collapse: outcome index " + std::to_string(k) +
                     " out of range [0," + std::to_string(s.n) + ")");
  }
  return DensityOperator::pure(s.eigenbasis[k]);
}

}  // namespace extbloch
