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

#include "extbloch/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "extbloch/bloch_map.hpp"
#include "extbloch/entangle_decomp.hpp"
#include "extbloch/hidden_measure.hpp"
#include "extbloch/random_states.hpp"
#include "extbloch/sun_basis.hpp"

namespace extbloch {

namespace {

SuiteResult finish(std::string name, double worst, double tol, std::string detail) {
  SuiteResult r;
  r.name = std::move(name);
  r.worst_residual = worst;
  r.tolerance = tol;
  r.pass = worst <= tol;
  r.detail = std::move(detail);
  return r;
}

SuiteResult generator_suite(const SelfCheckOptions& opt) {
  double worst = 0.0;
  for (int n : opt.dims) {
    worst = std::max(worst, gell_mann_basis(n).orthonormality_deviation());
  }
  for (auto [na, nb] : opt.pairs) {
    const CompositeBasis comp =
        composite_basis(gell_mann_basis(na), gell_mann_basis(nb));
    worst = std::max(worst, comp.joint.orthonormality_deviation());
  }
  return finish("generator-orthonormality", worst, 1e-12,
                "Hermiticity, tracelessness, Tr(Li Lj) = 2 delta_ij");
}

SuiteResult roundtrip_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 1));
  double worst = 0.0;
  for (int n : opt.dims) {
    const GeneratorBasis basis = gell_mann_basis(n);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityOperator d =
          (t % 2 == 0) ? random_density(n, rng) : random_pure_density(n, rng);
      const BlochVector r = density_to_bloch(d, basis);
      worst = std::max(worst, max_abs(bloch_to_density(r, basis) - d.matrix()));
      if (t % 2 == 1) {
        // pure states sit on the unit sphere
        worst = std::max(worst, std::abs(r.norm() - 1.0));
      }
    }
    const BlochVector center =
        density_to_bloch(DensityOperator::maximally_mixed(n), basis);
    worst = std::max(worst, center.norm());
  }
  return finish("bloch-round-trip", worst, 1e-10,
                "D -> r -> D reconstruction, pure-state norm, center image");
}

SuiteResult orthobasis_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 2));
  double worst = 0.0;
  for (int n : opt.dims) {
    const GeneratorBasis basis = gell_mann_basis(n);
    const double expected = -1.0 / (n - 1.0);
    for (int t = 0; t < opt.trials; ++t) {
      const std::vector<CVector> frame = random_orthonormal_basis(n, rng);
      std::vector<BlochVector> points;
      points.reserve(n);
      for (const CVector& v : frame) {
        points.push_back(density_to_bloch(DensityOperator::pure(v), basis));
      }
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          const double dot = points[j].components.dot(points[k].components);
          worst = std::max(worst, std::abs(dot - expected));
        }
      }
    }
  }
  return finish("orthobasis-geometry", worst, 1e-10,
                "Bloch images of orthonormal bases have pairwise dot -1/(N-1)");
}

SuiteResult decomposition_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 3));
  double worst = 0.0;
  for (auto [na, nb] : opt.pairs) {
    for (int t = 0; t < opt.trials; ++t) {
      const EntangledSpec spec = random_entangled_spec(na, nb, rng);
      const TripartiteDecomposition decomp = decompose(spec);
      worst = std::max(worst, decomp.reconstruction_residual);
      worst = std::max(worst, decomp.norm_identity_residual);
      worst = std::max(worst, std::abs(decomp.full.norm() - 1.0));
      // r_corr = d_ab r_ab_bar + r_int must hold exactly by construction
      const double split = (decomp.r_corr - decomp.coeff.d_ab * decomp.r_ab_bar -
                            decomp.r_int).cwiseAbs().maxCoeff();
      worst = std::max(worst, split);
    }
  }
  return finish("decomposition-reconstruction", worst, 1e-10,
                "direct-sum assembly vs brute-force composite vector, norm identity");
}

// Max deviation of the interference block from its closed form, computed via
// the decompose_operator route so a corrupted basis ordering can be injected.
double interference_residual(const EntangledSpec& spec, bool corrupt) {
  GeneratorBasis basis_a = adapted_basis(spec.psi_a, spec.phi_a);
  GeneratorBasis basis_b = adapted_basis(spec.psi_b, spec.phi_b);
  if (corrupt) {
    std::swap(basis_a.generators[0], basis_a.generators[1]);
    std::swap(basis_a.labels[0], basis_a.labels[1]);
  }

  const RawBlocks blocks = decompose_operator(build_density(spec), basis_a, basis_b);
  const BlochVector r_a = density_to_bloch(DensityOperator::pure(spec.psi_a), basis_a);
  const BlochVector s_a = density_to_bloch(DensityOperator::pure(spec.phi_a), basis_a);
  const BlochVector r_b = density_to_bloch(DensityOperator::pure(spec.psi_b), basis_b);
  const BlochVector s_b = density_to_bloch(DensityOperator::pure(spec.phi_b), basis_b);

  const int sa = spec.na * spec.na - 1;
  const int sb = spec.nb * spec.nb - 1;
  const double w1 = spec.a1 * spec.a1;
  const double w2 = spec.a2 * spec.a2;
  RVector r_int(sa * sb);
  for (int i = 1; i <= sa; ++i) {
    for (int j = 1; j <= sb; ++j) {
      const double ab = w1 * r_a.components(i - 1) * s_b.components(j - 1) +
                        w2 * s_a.components(i - 1) * r_b.components(j - 1);
      const int f = (i - 1) * sb + (j - 1);
      r_int(f) = blocks.r_corr(f) - blocks.coeff.d_ab * ab;
    }
  }

  const BlochConstants c = BlochConstants::make(spec.joint_dim());
  const double scale = c.e_n * std::sqrt(2.0) * spec.a1 * spec.a2;
  const double alpha = spec.alpha();
  double worst = 0.0;
  for (int i = 1; i <= sa; ++i) {
    for (int j = 1; j <= sb; ++j) {
      double expected = 0.0;
      if (i == 1 && j == 1) expected = scale * std::cos(alpha);
      if (i == 2 && j == 2) expected = scale * std::cos(alpha);
      if (i == 1 && j == 2) expected = -scale * std::sin(alpha);
      if (i == 2 && j == 1) expected = scale * std::sin(alpha);
      worst = std::max(worst, std::abs(r_int((i - 1) * sb + (j - 1)) - expected));
    }
  }
  return worst;
}

SuiteResult interference_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 4));
  double worst = 0.0;
  // amplitude/phase grid over canonical qubit pairs
  for (int ai = 1; ai <= 9; ai += 2) {
    for (int k = 0; k <= 12; ++k) {
      const double alpha = k * std::numbers::pi / 6.0;
      const EntangledSpec spec = EntangledSpec::canonical(2, 2, ai / 10.0, alpha);
      worst = std::max(worst, interference_residual(spec, opt.corrupt_adapted_order));
    }
  }
  // random pairs exercise the adapted completion
  for (auto [na, nb] : opt.pairs) {
    for (int t = 0; t < opt.trials; ++t) {
      const EntangledSpec spec = random_entangled_spec(na, nb, rng);
      worst = std::max(worst, interference_residual(spec, opt.corrupt_adapted_order));
      if (!opt.corrupt_adapted_order) {
        // the throwing checker must agree with the residual route
        interference_components(decompose(spec), spec);
      }
    }
  }
  return finish("interference-four-component", worst, 1e-10,
                "cross-term block matches e_N sqrt(2) a1 a2 (cos, cos, -sin, sin)");
}

SuiteResult reduced_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 5));
  double worst = 0.0;
  for (auto [na, nb] : opt.pairs) {
    for (int t = 0; t < opt.trials; ++t) {
      const EntangledSpec spec = random_entangled_spec(na, nb, rng);
      const auto [da, db] = reduced_states(spec);
      const CMatrix full = build_density(spec).matrix();
      worst = std::max(worst,
                       max_abs(da.matrix() - partial_trace(full, na, nb, Side::B)));
      worst = std::max(worst,
                       max_abs(db.matrix() - partial_trace(full, na, nb, Side::A)));
    }
  }
  return finish("reduced-states", worst, 1e-12,
                "closed-form reduced operators vs numerical partial trace");
}

SuiteResult simplex_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 6));
  double worst = 0.0;
  double worst_sum = 0.0;
  for (int n : opt.dims) {
    const GeneratorBasis basis = gell_mann_basis(n);
    for (int t = 0; t < opt.trials; ++t) {
      const MeasurementSimplex simplex =
          simplex_from_basis(random_orthonormal_basis(n, rng), basis);
      RVector barycenter = RVector::Zero(n * n - 1);
      for (int j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(simplex.vertices[j].norm() - 1.0));
        barycenter += simplex.vertices[j].components / n;
        for (int k = j + 1; k < n; ++k) {
          const double dot =
              simplex.vertices[j].components.dot(simplex.vertices[k].components);
          worst = std::max(worst, std::abs(dot + 1.0 / (n - 1.0)));
        }
      }
      worst = std::max(worst, barycenter.cwiseAbs().maxCoeff());
      const DensityOperator d = random_density(n, rng);
      const BlochVector r = density_to_bloch(d, basis);
      const SimplexProjection proj = project_to_simplex(r, simplex);
      const std::vector<double> born = born_probabilities(d, simplex);
      for (int k = 0; k < n; ++k) {
        worst = std::max(worst, std::abs(proj.lambdas(k) - born[k]));
      }
      worst_sum = std::max(worst_sum, std::abs(proj.lambdas.sum() - 1.0));
    }
  }
  std::ostringstream detail;
  detail << "vertex geometry + barycentric/trace route agreement (lambda sum residual "
         << worst_sum << ")";
  return finish("simplex-born", std::max(worst, worst_sum), 1e-10, detail.str());
}

SuiteResult overlap_suite(const SelfCheckOptions& opt) {
  Rng rng(Rng::derive_seed(opt.seed, 7));
  double worst = 0.0;
  for (int n : opt.dims) {
    const GeneratorBasis basis = gell_mann_basis(n);
    for (int t = 0; t < opt.trials; ++t) {
      const DensityOperator d1 = random_density(n, rng);
      const DensityOperator d2 = random_pure_density(n, rng);
      const BlochVector r1 = density_to_bloch(d1, basis);
      const BlochVector r2 = density_to_bloch(d2, basis);
      const double direct = trace_product(d1.matrix(), d2.matrix()).real();
      worst = std::max(worst, std::abs(state_overlap(r1, r2) - direct));
      const double p1 = trace_product(d1.matrix(), d1.matrix()).real();
      worst = std::max(worst, std::abs(purity(r1) - p1));
    }
  }
  return finish("overlap-formula", worst, 1e-12,
                "1/N + ((N-1)/N) r1.r2 vs Tr(D1 D2), purity vs Tr(D^2)");
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const SelfCheckOptions& options) {
  if (options.trials < 1) {
    throw InputError("run_selfcheck: trials must be at least 1");
  }
  if (options.dims.empty()) {
    throw InputError("run_selfcheck: dims must be non-empty");
  }
  for (int n : options.dims) {
    if (n < 2) throw InputError("run_selfcheck: dims entries must be at least 2");
  }
  std::vector<SuiteResult> results;
  results.push_back(generator_suite(options));
  results.push_back(roundtrip_suite(options));
  results.push_back(orthobasis_suite(options));
  results.push_back(decomposition_suite(options));
  results.push_back(interference_suite(options));
  results.push_back(reduced_suite(options));
  results.push_back(simplex_suite(options));
  results.push_back(overlap_suite(options));
  return results;
}

}  // namespace extbloch
