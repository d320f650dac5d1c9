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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extbloch/bloch_map.hpp"
#include "extbloch/entangle_decomp.hpp"
#include "extbloch/hidden_measure.hpp"
#include "extbloch/mat_kernel.hpp"
#include "extbloch/selfcheck.hpp"
#include "extbloch/sun_basis.hpp"
#include "report.hpp"
#include "state_file.hpp"

namespace {

using namespace extbloch;
using extbloch::cli::json;
using extbloch::cli::StateFile;

constexpr const char* kReportSchema = "extbloch-report/1";

// Internal verification thresholds are fixed (they gate exit code 2);
// RunConfig.tol only governs input validation.
constexpr double kReconstructionTol = 1e-10;
constexpr double kBornRouteTol = 1e-10;
constexpr double kReduceTol = 1e-12;
constexpr double kGeneratorTol = 1e-12;
constexpr double kNonzeroListing = 1e-12;

struct RunConfig {
  double tol = kDefaultTol;
  std::string format = "text";
  std::string output;
  bool degrees = false;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void emit_doc(const RunConfig& cfg, const json& doc, const std::string& text) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      throw InputError("cannot open output file '" + cfg.output + "'");
    }
    out = &file;
  }
  if (cfg.format == "json") {
    *out << doc.dump(2) << "\n";
  } else {
    *out << text;
  }
}

DensityOperator density_of(const StateFile& sf, double tol) {
  switch (sf.kind) {
    case StateFile::Kind::Density:
      return DensityOperator::from_matrix(sf.matrix, tol);
    case StateFile::Kind::StateVector:
      return DensityOperator::pure(sf.vector, tol);
    case StateFile::Kind::Spec:
      return build_density(*sf.spec);
    case StateFile::Kind::Bloch: {
      const GeneratorBasis basis = gell_mann_basis(sf.n);
      if (sf.bloch_basis != basis.name) {
        throw InputError("state file: bloch input must use basis '" + basis.name +
                         "', got '" + sf.bloch_basis + "'");
      }
      const CMatrix m = bloch_to_density({sf.n, sf.bloch, basis.name}, basis);
      return DensityOperator::from_matrix(m, tol);
    }
  }
  throw InputError("state file: unknown kind");
}

CVector canonical_vector(int n, int k) {
  CVector e = CVector::Zero(n);
  e(k) = 1.0;
  return e;
}

std::vector<CVector> canonical_frame(int n) {
  std::vector<CVector> frame;
  for (int k = 0; k < n; ++k) frame.push_back(canonical_vector(n, k));
  return frame;
}

// ---------------------------------------------------------------------------
// spec sources: --state-file or the flag family --na/--nb/--a1/--alpha...

struct SpecFlags {
  std::string state_file;
  int na = 2;
  int nb = 2;
  double a1 = 0.0;
  double alpha = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  CLI::Option* a1_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* alpha1_opt = nullptr;
  CLI::Option* alpha2_opt = nullptr;

  void add_to(CLI::App* cmd, bool file_only_vectors = true) {
    cmd->add_option("--state-file", state_file,
                    file_only_vectors
                        ? "JSON state file (use it to supply custom state vectors)"
                        : "JSON state file");
    cmd->add_option("--na", na, "dimension of sub-entity A")->check(CLI::PositiveNumber);
    cmd->add_option("--nb", nb, "dimension of sub-entity B")->check(CLI::PositiveNumber);
    a1_opt = cmd->add_option("--a1", a1, "first amplitude; a2 = sqrt(1 - a1^2)");
    alpha_opt = cmd->add_option("--alpha", alpha, "relative phase alpha2 - alpha1");
    alpha1_opt = cmd->add_option("--alpha1", alpha1, "phase of the first term");
    alpha2_opt = cmd->add_option("--alpha2", alpha2, "phase of the second term");
  }

  bool any_flag_given() const {
    return a1_opt->count() > 0 || alpha_opt->count() > 0 || alpha1_opt->count() > 0 ||
           alpha2_opt->count() > 0;
  }

  EntangledSpec resolve(const RunConfig& cfg) const {
    if (!state_file.empty()) {
      if (any_flag_given()) {
        throw InputError("give either --state-file or spec flags, not both");
      }
      const StateFile sf = StateFile::load(state_file, cfg.tol);
      if (sf.kind != StateFile::Kind::Spec) {
        throw InputError("this command needs an 'entangled_spec' state file");
      }
      return *sf.spec;
    }
    if (a1_opt->count() == 0) {
      throw InputError("--a1 is required when no --state-file is given");
    }
    const double to_rad = cfg.degrees ? std::numbers::pi / 180.0 : 1.0;
    double al1 = 0.0;
    double al2 = 0.0;
    if (alpha1_opt->count() > 0 || alpha2_opt->count() > 0) {
      al1 = alpha1 * to_rad;
      al2 = alpha2 * to_rad;
    } else {
      al2 = alpha * to_rad;
    }
    if (!(a1 >= 0.0 && a1 <= 1.0)) {
      throw InputError("--a1 must lie in [0,1]");
    }
    const double a2 = std::sqrt(std::max(0.0, 1.0 - a1 * a1));
    return EntangledSpec::create(na, nb, a1, a2, al1, al2, canonical_vector(na, 0),
                                 canonical_vector(na, 1), canonical_vector(nb, 0),
                                 canonical_vector(nb, 1), cfg.tol);
  }
};

json corr_block_json(const RVector& v, int sb) {
  json out;
  out["dim"] = v.size();
  json nonzero = json::array();
  for (Eigen::Index f = 0; f < v.size(); ++f) {
    if (std::abs(v(f)) > kNonzeroListing) {
      json entry;
      entry["i"] = static_cast<int>(f) / sb + 1;
      entry["j"] = static_cast<int>(f) % sb + 1;
      entry["value"] = v(f);
      nonzero.push_back(std::move(entry));
    }
  }
  out["nonzero"] = std::move(nonzero);
  return out;
}

void append_corr_block_text(std::ostringstream& text, const std::string& name,
                            const RVector& v, int sb) {
  text << "  " << name << " (dim " << v.size() << "), nonzero components:\n";
  bool any = false;
  for (Eigen::Index f = 0; f < v.size(); ++f) {
    if (std::abs(v(f)) > kNonzeroListing) {
      text << "    (" << f / sb + 1 << "," << f % sb + 1 << ") = " << num(v(f)) << "\n";
      any = true;
    }
  }
  if (!any) text << "    (none)\n";
}

// ---------------------------------------------------------------------------

int cmd_generators(const RunConfig& cfg, int n) {
  const GeneratorBasis basis = gell_mann_basis(n);
  const double deviation = basis.orthonormality_deviation();
  const bool pass = deviation <= kGeneratorTol;

  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "generators";
  doc["n"] = n;
  doc["basis"] = basis.name;
  json gens = json::array();
  for (int i = 0; i < basis.size(); ++i) {
    json g;
    g["index"] = i + 1;
    g["label"] = basis.labels[i].str();
    g["matrix"] = extbloch::cli::cmatrix_json(basis.generators[i]);
    gens.push_back(std::move(g));
  }
  doc["generators"] = std::move(gens);
  doc["orthonormality"] = {{"max_deviation", deviation},
                           {"tolerance", kGeneratorTol},
                           {"pass", pass}};

  std::ostringstream text;
  text << basis.name << ": " << basis.size() << " generators\n";
  for (int i = 0; i < basis.size(); ++i) {
    text << "L" << i + 1 << "  " << basis.labels[i].str() << "\n";
    extbloch::cli::print_cmatrix(text, basis.generators[i]);
  }
  text << "orthonormality: max deviation " << num(deviation) << " (tolerance "
       << num(kGeneratorTol) << ") " << (pass ? "PASS" : "FAIL") << "\n";

  emit_doc(cfg, doc, text.str());
  return pass ? 0 : 2;
}

int cmd_convert(const RunConfig& cfg, const std::string& file, std::string to) {
  if (file.empty()) throw InputError("convert: --state-file is required");
  const StateFile sf = StateFile::load(file, cfg.tol);
  if (to == "auto") {
    to = (sf.kind == StateFile::Kind::Bloch) ? "density" : "bloch";
  }

  json doc;
  std::ostringstream text;
  if (to == "bloch") {
    const DensityOperator d = density_of(sf, cfg.tol);
    const GeneratorBasis basis = gell_mann_basis(d.dim());
    const BlochVector r = density_to_bloch(d, basis);
    doc = extbloch::cli::bloch_state_json(r);
    doc["report"] = {{"command", "convert"},
                     {"norm", r.norm()},
                     {"purity", purity(r)},
                     {"valid", true}};
    text << "bloch vector (n = " << r.n << ", basis " << r.basis_ref << ")\n  ";
    extbloch::cli::print_rvector(text, r.components);
    text << "\n  norm = " << num(r.norm()) << ", purity = " << num(purity(r)) << "\n";
  } else {
    CMatrix m;
    bool valid = true;
    double min_eig = 0.0;
    if (sf.kind == StateFile::Kind::Bloch) {
      const GeneratorBasis basis = gell_mann_basis(sf.n);
      if (sf.bloch_basis != basis.name) {
        throw InputError("convert: bloch input must use basis '" + basis.name + "'");
      }
      m = bloch_to_density({sf.n, sf.bloch, basis.name}, basis);
      min_eig = min_eigenvalue(m);
      valid = min_eig >= -cfg.tol;
    } else {
      m = density_of(sf, cfg.tol).matrix();
      min_eig = min_eigenvalue(m);
    }
    doc = extbloch::cli::density_state_json(m);
    doc["report"] = {{"command", "convert"},
                     {"trace", extbloch::cli::complex_json(m.trace())},
                     {"min_eigenvalue", min_eig},
                     {"valid", valid}};
    text << "density operator (n = " << m.rows() << ")\n";
    extbloch::cli::print_cmatrix(text, m);
    text << "  min eigenvalue = " << num(min_eig) << ", valid state: "
         << (valid ? "yes" : "no") << "\n";
  }
  emit_doc(cfg, doc, text.str());
  return 0;
}

int cmd_decompose(const RunConfig& cfg, const SpecFlags& flags) {
  const EntangledSpec spec = flags.resolve(cfg);
  const TripartiteDecomposition decomp = decompose(spec);

  bool pass = true;
  std::string failure;
  InterferenceComponents comps{};
  try {
    comps = interference_components(decomp, spec);
  } catch (const VerificationError& e) {
    pass = false;
    failure = e.what();
  }
  if (decomp.reconstruction_residual > kReconstructionTol) {
    pass = false;
    failure = "reconstruction residual " + num(decomp.reconstruction_residual) +
              " exceeds " + num(kReconstructionTol);
  }
  if (decomp.norm_identity_residual > kReconstructionTol) {
    pass = false;
    failure = "norm identity residual " + num(decomp.norm_identity_residual) +
              " exceeds " + num(kReconstructionTol);
  }

  const int sb = spec.nb * spec.nb - 1;
  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "decompose";
  doc["spec"] = extbloch::cli::spec_json(spec);
  doc["n"] = spec.joint_dim();
  doc["classification"] =
      decomp.classification == StateClass::Product ? "product" : "entangled";
  doc["coefficients"] = {{"d_a", decomp.coeff.d_a},
                         {"d_b", decomp.coeff.d_b},
                         {"d_ab", decomp.coeff.d_ab}};
  doc["basis_a"] = decomp.basis.basis_a.name;
  doc["basis_b"] = decomp.basis.basis_b.name;
  doc["r_a_bar"] = extbloch::cli::rvector_json(decomp.r_a_bar.components);
  doc["r_b_bar"] = extbloch::cli::rvector_json(decomp.r_b_bar.components);
  doc["r_ab_bar"] = corr_block_json(decomp.r_ab_bar, sb);
  doc["r_int"] = corr_block_json(decomp.r_int, sb);
  doc["r_corr"] = corr_block_json(decomp.r_corr, sb);
  doc["interference_components"] = {
      {"c11", comps.c11}, {"c22", comps.c22}, {"c12", comps.c12}, {"c21", comps.c21}};
  doc["residuals"] = {{"reconstruction", decomp.reconstruction_residual},
                      {"norm_identity", decomp.norm_identity_residual}};
  doc["norm_full"] = decomp.full.norm();
  doc["checks"] = {{"pass", pass},
                   {"tolerance", kReconstructionTol},
                   {"message", failure}};

  std::ostringstream text;
  text << "tripartite decomposition (na = " << spec.na << ", nb = " << spec.nb
       << ", N = " << spec.joint_dim() << ")\n";
  text << "  classification: "
       << (decomp.classification == StateClass::Product ? "product" : "entangled")
       << "\n";
  text << "  d_a = " << num(decomp.coeff.d_a) << ", d_b = " << num(decomp.coeff.d_b)
       << ", d_ab = " << num(decomp.coeff.d_ab) << "\n";
  text << "  r_a_bar = ";
  extbloch::cli::print_rvector(text, decomp.r_a_bar.components);
  text << "\n  r_b_bar = ";
  extbloch::cli::print_rvector(text, decomp.r_b_bar.components);
  text << "\n";
  append_corr_block_text(text, "r_ab_bar", decomp.r_ab_bar, sb);
  append_corr_block_text(text, "r_int", decomp.r_int, sb);
  append_corr_block_text(text, "r_corr", decomp.r_corr, sb);
  text << "  interference components (1,1),(2,2),(1,2),(2,1): " << num(comps.c11)
       << ", " << num(comps.c22) << ", " << num(comps.c12) << ", " << num(comps.c21)
       << "\n";
  text << "  residuals: reconstruction " << num(decomp.reconstruction_residual)
       << ", norm identity " << num(decomp.norm_identity_residual) << "\n";
  text << "  checks: " << (pass ? "PASS" : ("FAIL — " + failure)) << "\n";

  emit_doc(cfg, doc, text.str());
  return pass ? 0 : 2;
}

int cmd_reduce(const RunConfig& cfg, const SpecFlags& flags) {
  const EntangledSpec spec = flags.resolve(cfg);
  const auto [da, db] = reduced_states(spec);
  const CMatrix full = build_density(spec).matrix();
  const double residual =
      std::max(max_abs(da.matrix() - partial_trace(full, spec.na, spec.nb, Side::B)),
               max_abs(db.matrix() - partial_trace(full, spec.na, spec.nb, Side::A)));
  const bool pass = residual <= kReduceTol;

  const GeneratorBasis basis_a = gell_mann_basis(spec.na);
  const GeneratorBasis basis_b = gell_mann_basis(spec.nb);
  const BlochVector ra = density_to_bloch(da, basis_a);
  const BlochVector rb = density_to_bloch(db, basis_b);

  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "reduce";
  doc["spec"] = extbloch::cli::spec_json(spec);
  doc["reduced_a"] = extbloch::cli::density_state_json(da.matrix());
  doc["reduced_b"] = extbloch::cli::density_state_json(db.matrix());
  doc["bloch_a"] = extbloch::cli::bloch_state_json(ra);
  doc["bloch_b"] = extbloch::cli::bloch_state_json(rb);
  doc["partial_trace_residual"] = residual;
  doc["checks"] = {{"pass", pass}, {"tolerance", kReduceTol}};

  std::ostringstream text;
  text << "reduced states (na = " << spec.na << ", nb = " << spec.nb << ")\n";
  text << "D_A:\n";
  extbloch::cli::print_cmatrix(text, da.matrix());
  text << "  bloch: ";
  extbloch::cli::print_rvector(text, ra.components);
  text << "\nD_B:\n";
  extbloch::cli::print_cmatrix(text, db.matrix());
  text << "  bloch: ";
  extbloch::cli::print_rvector(text, rb.components);
  text << "\npartial-trace residual: " << num(residual) << " ("
       << (pass ? "PASS" : "FAIL") << ", tolerance " << num(kReduceTol) << ")\n";

  emit_doc(cfg, doc, text.str());
  return pass ? 0 : 2;
}

struct MeasureTarget {
  DensityOperator d;
  GeneratorBasis gen;
  std::vector<CVector> eigen;
  int n = 0;
};

MeasureTarget measure_target(const RunConfig& cfg, const SpecFlags& flags,
                             const std::string& subsystem, const std::string& basis_kind) {
  // plain state files: the given state, canonical eigenbasis
  if (!flags.state_file.empty()) {
    const StateFile sf = StateFile::load(flags.state_file, cfg.tol);
    if (sf.kind != StateFile::Kind::Spec) {
      if (subsystem != "full") {
        throw InputError("measure: --subsystem needs an entangled_spec input");
      }
      if (basis_kind != "canonical") {
        throw InputError("measure: --basis adapted needs an entangled_spec input");
      }
      DensityOperator d = density_of(sf, cfg.tol);
      const int n = d.dim();
      return {std::move(d), gell_mann_basis(n), canonical_frame(n), n};
    }
  }

  const EntangledSpec spec = flags.resolve(cfg);
  if (subsystem == "full") {
    DensityOperator d = build_density(spec);
    const int n = spec.joint_dim();
    if (basis_kind == "canonical") {
      return {std::move(d), gell_mann_basis(n), canonical_frame(n), n};
    }
    const std::vector<CVector> frame_a = orthonormal_completion(spec.psi_a, spec.phi_a);
    const std::vector<CVector> frame_b = orthonormal_completion(spec.psi_b, spec.phi_b);
    std::vector<CVector> eigen;
    eigen.reserve(n);
    for (int i = 0; i < spec.na; ++i) {
      for (int k = 0; k < spec.nb; ++k) {
        eigen.push_back(kron(frame_a[i], frame_b[k]));
      }
    }
    GeneratorBasis joint = composite_basis(adapted_basis(spec.psi_a, spec.phi_a),
                                           adapted_basis(spec.psi_b, spec.phi_b))
                               .joint;
    return {std::move(d), std::move(joint), std::move(eigen), n};
  }

  const auto [da, db] = reduced_states(spec);
  const bool side_a = subsystem == "A";
  DensityOperator d = side_a ? da : db;
  const int n = side_a ? spec.na : spec.nb;
  const CVector& psi = side_a ? spec.psi_a : spec.psi_b;
  const CVector& phi = side_a ? spec.phi_a : spec.phi_b;
  if (basis_kind == "canonical") {
    return {std::move(d), gell_mann_basis(n), canonical_frame(n), n};
  }
  return {std::move(d), adapted_basis(psi, phi), orthonormal_completion(psi, phi), n};
}

int cmd_measure(const RunConfig& cfg, const SpecFlags& flags,
                const std::string& subsystem, const std::string& basis_kind,
                std::uint64_t shots, std::uint64_t seed, int threads) {
  const MeasureTarget target = measure_target(cfg, flags, subsystem, basis_kind);
  const BlochVector r = density_to_bloch(target.d, target.gen);
  const MeasurementSimplex simplex =
      simplex_from_basis(target.eigen, target.gen, cfg.tol);

  const std::vector<double> born = born_probabilities(target.d, simplex);
  const SimplexProjection proj = project_to_simplex(r, simplex);
  double disagreement = 0.0;
  for (int k = 0; k < target.n; ++k) {
    disagreement = std::max(disagreement, std::abs(proj.lambdas(k) - born[k]));
  }
  const bool pass = disagreement <= kBornRouteTol;

  const SampleReport report = sample_outcomes(r, simplex, shots, seed, threads);

  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "measure";
  doc["n"] = target.n;
  doc["subsystem"] = subsystem;
  doc["eigenbasis"] = basis_kind;
  doc["generator_basis"] = target.gen.name;
  doc["born_trace"] = json(born);
  doc["born_geometric"] = extbloch::cli::rvector_json(proj.lambdas);
  doc["route_disagreement"] = disagreement;
  doc["shots"] = report.shots;
  doc["seed"] = report.seed;
  doc["threads"] = threads;
  doc["algorithm"] = report.algorithm;
  doc["counts"] = json(report.counts);
  doc["frequencies"] = json(report.frequencies);
  doc["max_deviation"] = report.max_deviation;
  doc["checks"] = {{"pass", pass}, {"tolerance", kBornRouteTol}};

  std::ostringstream text;
  text << "measurement (n = " << target.n << ", subsystem " << subsystem
       << ", eigenbasis " << basis_kind << ")\n";
  text << "  outcome   born(trace)      born(geometric)  counts      frequency\n";
  for (int k = 0; k < target.n; ++k) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-9d %-16.10g %-16.10g %-11llu %.10g\n", k,
                  born[k], proj.lambdas(k),
                  static_cast<unsigned long long>(report.counts[k]),
                  report.frequencies[k]);
    text << line;
  }
  text << "  shots = " << shots << ", seed = " << seed << ", algorithm = "
       << report.algorithm << "\n";
  text << "  max |frequency - born| = " << num(report.max_deviation) << "\n";
  text << "  born-route disagreement = " << num(disagreement) << " ("
       << (pass ? "PASS" : "FAIL") << ", tolerance " << num(kBornRouteTol) << ")\n";

  emit_doc(cfg, doc, text.str());
  return pass ? 0 : 2;
}

int cmd_verify(const RunConfig& cfg, const std::vector<int>& dims, int trials,
               std::uint64_t seed, bool corrupt) {
  SelfCheckOptions options;
  if (!dims.empty()) options.dims = dims;
  options.trials = trials;
  options.seed = seed;
  options.corrupt_adapted_order = corrupt;

  const std::vector<SuiteResult> results = run_selfcheck(options);
  bool all_pass = true;
  for (const SuiteResult& r : results) all_pass = all_pass && r.pass;

  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "verify";
  doc["dims"] = json(options.dims);
  json pairs = json::array();
  for (auto [na, nb] : options.pairs) pairs.push_back(json::array({na, nb}));
  doc["pairs"] = std::move(pairs);
  doc["trials"] = options.trials;
  doc["seed"] = options.seed;
  doc["corrupted"] = corrupt;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    suites.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"worst_residual", r.worst_residual},
                      {"tolerance", r.tolerance},
                      {"detail", r.detail}});
  }
  doc["suites"] = std::move(suites);
  doc["pass"] = all_pass;

  std::ostringstream text;
  text << "verify: trials = " << options.trials << ", seed = " << options.seed << "\n";
  for (const SuiteResult& r : results) {
    text << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << "  worst "
         << num(r.worst_residual) << "  tolerance " << num(r.tolerance) << "\n";
  }
  text << (all_pass ? "all suites passed\n" : "SUITE FAILURES PRESENT\n");

  emit_doc(cfg, doc, text.str());
  return all_pass ? 0 : 2;
}

int cmd_overlap(const RunConfig& cfg, const std::string& file1, const std::string& file2) {
  const StateFile sf1 = StateFile::load(file1, cfg.tol);
  const StateFile sf2 = StateFile::load(file2, cfg.tol);
  const DensityOperator d1 = density_of(sf1, cfg.tol);
  const DensityOperator d2 = density_of(sf2, cfg.tol);
  if (d1.dim() != d2.dim()) {
    throw InputError("overlap: states have different dimensions (" +
                     std::to_string(d1.dim()) + " vs " + std::to_string(d2.dim()) + ")");
  }
  const GeneratorBasis basis = gell_mann_basis(d1.dim());
  const BlochVector r1 = density_to_bloch(d1, basis);
  const BlochVector r2 = density_to_bloch(d2, basis);
  const double via_bloch = state_overlap(r1, r2);
  const double via_trace = trace_product(d1.matrix(), d2.matrix()).real();
  const double disagreement = std::abs(via_bloch - via_trace);
  const bool pass = disagreement <= kBornRouteTol;

  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "overlap";
  doc["n"] = d1.dim();
  doc["dot"] = r1.components.dot(r2.components);
  doc["overlap"] = via_bloch;
  doc["overlap_trace_route"] = via_trace;
  doc["route_disagreement"] = disagreement;
  doc["purity_1"] = purity(r1);
  doc["purity_2"] = purity(r2);
  doc["checks"] = {{"pass", pass}, {"tolerance", kBornRouteTol}};

  std::ostringstream text;
  text << "overlap (n = " << d1.dim() << ")\n";
  text << "  r1.r2 = " << num(r1.components.dot(r2.components)) << "\n";
  text << "  Tr(D1 D2) = " << num(via_bloch) << " (bloch route), " << num(via_trace)
       << " (trace route)\n";
  text << "  purities: " << num(purity(r1)) << ", " << num(purity(r2)) << "\n";
  text << "  checks: " << (pass ? "PASS" : "FAIL") << "\n";

  emit_doc(cfg, doc, text.str());
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extbloch — generalized Bloch representation toolkit: SU(N) generator "
               "bases, density/Bloch conversion, tripartite entanglement "
               "decomposition, simplex measurement simulation"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  if (const char* env = std::getenv("EXTBLOCH_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == nullptr || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
      std::cerr << "EXTBLOCH_TOL must be a positive number, got '" << env << "'\n";
      return 1;
    }
    cfg.tol = v;
  }
  app.add_option("--tol", cfg.tol, "input validation tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", cfg.output, "write the report to a file");
  app.add_flag("--degrees", cfg.degrees, "interpret --alpha/--alpha1/--alpha2 in degrees");

  int exit_code = 0;

  // generators
  auto* generators = app.add_subcommand("generators", "emit an SU(N) generator basis");
  int gen_n = 0;
  generators->add_option("-n,--dim", gen_n, "Hilbert space dimension")->required();
  generators->callback([&]() { exit_code = cmd_generators(cfg, gen_n); });

  // convert
  auto* convert = app.add_subcommand(
      "convert", "convert between density/state-vector/bloch representations");
  std::string convert_file;
  std::string convert_to = "auto";
  convert->add_option("--state-file", convert_file, "JSON state file")->required();
  convert->add_option("--to", convert_to, "target representation")
      ->check(CLI::IsMember({"auto", "bloch", "density"}));
  convert->callback([&]() { exit_code = cmd_convert(cfg, convert_file, convert_to); });

  // decompose
  auto* decompose_cmd =
      app.add_subcommand("decompose", "tripartite decomposition of a two-term state");
  SpecFlags decompose_flags;
  decompose_flags.add_to(decompose_cmd);
  decompose_cmd->callback([&]() { exit_code = cmd_decompose(cfg, decompose_flags); });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "closed-form reduced states of the pair");
  SpecFlags reduce_flags;
  reduce_flags.add_to(reduce);
  reduce->callback([&]() { exit_code = cmd_reduce(cfg, reduce_flags); });

  // measure
  auto* measure = app.add_subcommand(
      "measure", "simplex measurement: Born probabilities and seeded sampling");
  SpecFlags measure_flags;
  measure_flags.add_to(measure, /*file_only_vectors=*/false);
  std::string subsystem = "full";
  std::string basis_kind = "canonical";
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
  int threads = 1;
  measure->add_option("--subsystem", subsystem, "which state of a spec is measured")
      ->check(CLI::IsMember({"full", "A", "B"}));
  measure->add_option("--basis", basis_kind, "measurement eigenbasis")
      ->check(CLI::IsMember({"canonical", "adapted"}));
  measure->add_option("--shots", shots, "number of outcome draws");
  measure->add_option("--seed", seed, "master seed");
  measure->add_option("--threads", threads, "worker threads (counts are identical)");
  measure->callback([&]() {
    exit_code = cmd_measure(cfg, measure_flags, subsystem, basis_kind, shots, seed,
                            threads);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the module invariant suites");
  std::vector<int> dims;
  int trials = 25;
  std::uint64_t verify_seed = 0;
  bool corrupt = false;
  verify->add_option("--dims", dims, "one-entity dimensions")->delimiter(',');
  verify->add_option("--trials", trials, "random trials per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_seed, "master seed");
  verify
      ->add_flag("--inject-basis-corruption", corrupt,
                 "test mode: corrupt the adapted generator order (must fail)")
      ->group("");  // hidden
  verify->callback(
      [&]() { exit_code = cmd_verify(cfg, dims, trials, verify_seed, corrupt); });

  // overlap
  auto* overlap = app.add_subcommand("overlap", "Tr(D1 D2) of two states");
  std::string overlap_file1, overlap_file2;
  overlap->add_option("file1", overlap_file1, "first state file")->required();
  overlap->add_option("file2", overlap_file2, "second state file")->required();
  overlap->callback([&]() { exit_code = cmd_overlap(cfg, overlap_file1, overlap_file2); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
