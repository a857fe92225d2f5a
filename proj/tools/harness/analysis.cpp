// Copyright 2026 The qasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qasym/harness/analysis.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "qasym/dfa.hpp"
#include "qasym/errors.hpp"
#include "qasym/markov.hpp"
#include "qasym/pukanszky.hpp"
#include "qasym/spectral.hpp"

namespace qasym::harness {

namespace {

void analyze_channel(const InstanceSpec& spec, const AnalysisOptions& opt, AnalysisReport& r) {
  const Tolerances& tol = opt.tolerances;
  const Superoperator s = channel_superop(spec);
  const UcpReport ucp = validate_ucp(s, tol);
  r.validation.push_back({"completely_positive", ucp.is_cp, ucp.min_choi_eigenvalue});
  r.validation.push_back({"unital", ucp.is_unital, ucp.unitality_residual});
  r.validation.push_back({"trace_preserving_dual", ucp.is_trace_preserving_dual, 0.0});
  if (!ucp.ok()) {
    throw InputError("instance is not a UCP map (min Choi eigenvalue " +
                     std::to_string(ucp.min_choi_eigenvalue) + ", unitality residual " +
                     std::to_string(ucp.unitality_residual) + ")");
  }

  const DiscreteAnalysis a = analyze_discrete(s, tol, opt.seed);
  const JdlgReport jd = jdlg_verify(s, a.spectral, tol, opt.seed);

  r.spectrum_kind = "map";
  r.eigenvalues = a.spectral.eigenvalues;
  r.peripheral = a.spectral.classes.peripheral;
  r.gap = a.spectral.classes.gap;

  r.subspaces.push_back(make_subspace_record("attr", a.spectral.attr, opt.basis_cap));
  r.subspaces.push_back(make_subspace_record("fix", a.spectral.fix, opt.basis_cap));
  r.subspaces.push_back(make_subspace_record("transient", a.spectral.transient, opt.basis_cap));
  r.subspaces.push_back(make_subspace_record("n", a.dfa.subspace, opt.basis_cap));
  r.algebras.push_back(make_algebra_record("n", a.dfa));

  r.flags = {{"faithful", a.faithful.faithful},
             {"peripherally_automorphic", a.pa.peripherally_automorphic},
             {"jdlg_passed", jd.passed}};
  r.metrics = {{"sigma_min_eigenvalue", a.faithful.min_eigenvalue},
               {"pa_closure_residual", a.pa.closure_residual},
               {"pa_multiplicativity_residual", a.pa.multiplicativity_residual},
               {"jdlg_decomposition_residual", jd.decomposition_residual},
               {"jdlg_kappa", jd.kappa},
               {"jdlg_decay_ratio", jd.decay_ratio},
               {"jdlg_horizon", static_cast<double>(jd.horizon)}};

  r.verdicts = a.verdicts;
  TheoremVerdict v;
  v.name = "jdlg_decomposition";
  v.hypothesis_holds = true;
  v.conclusion_holds = jd.passed;
  v.consistent = jd.passed;
  v.residuals = {{"decomposition_residual", jd.decomposition_residual},
                 {"kappa", jd.kappa},
                 {"decay_ratio", jd.decay_ratio}};
  r.verdicts.push_back(std::move(v));
  if (!a.pa.peripherally_automorphic) {
    r.notes.push_back("not peripherally automorphic; seed " + std::to_string(r.seed));
  }
}

void analyze_generator(const InstanceSpec& spec, const AnalysisOptions& opt, AnalysisReport& r) {
  const Tolerances& tol = opt.tolerances;
  const GKLSGenerator g = generator_of(spec);
  const SemigroupAnalysis an = analyze_semigroup(g, tol, opt.markov, opt.seed);
  const UcpReport unit = validate_ucp(expm(an.generator, 1.0), tol);

  const double scale = std::max(1.0, an.generator.matrix().norm());
  r.validation.push_back({"hamiltonian_hermitian", true, 0.0});
  r.validation.push_back(
      {"spectrum_in_left_half_plane", an.spectrum.max_real_part <= tol.residual * scale,
       an.spectrum.max_real_part});
  r.validation.push_back(
      {"zero_in_spectrum", an.spectrum.zero_residual <= tol.residual * scale, an.spectrum.zero_residual});
  r.validation.push_back({"unit_time_map_ucp", unit.ok(), unit.min_choi_eigenvalue});

  r.spectrum_kind = "generator";
  r.eigenvalues = an.spectrum.eigenvalues;
  r.peripheral = an.spectrum.classes.peripheral;
  r.gap = an.spectrum.classes.gap;

  r.subspaces.push_back(make_subspace_record("attr", an.attractor.attr, opt.basis_cap));
  r.subspaces.push_back(make_subspace_record("kernel", an.fix.kernel, opt.basis_cap));
  r.subspaces.push_back(make_subspace_record("fix_unit_time", an.fix.fix_unit_time, opt.basis_cap));
  r.subspaces.push_back(make_subspace_record("n", an.dfa.algebra.subspace, opt.basis_cap));
  r.algebras.push_back(make_algebra_record("n", an.dfa.algebra));

  r.flags = {{"faithful", an.faithful.faithful},
             {"fix_strict", an.fix.strict},
             {"aliasing", an.attractor.aliasing},
             {"attractor_agrees", an.attractor.agrees},
             {"full_discrete_checked", an.dfa.full_discrete_checked}};
  r.metrics = {{"sigma_min_eigenvalue", an.faithful.min_eigenvalue},
               {"stabilized_dim", static_cast<double>(an.dfa.stabilized_dim)},
               {"multiplicative_residual", an.dfa.multiplicative_residual},
               {"invariance_residual", an.dfa.invariance_residual},
               {"unitary_residual", an.dfa.unitary_residual},
               {"discrete_containment_residual", an.dfa.discrete_containment_residual},
               {"conjugation_residual", an.spectrum.conjugation_residual}};
  r.verdicts = an.verdicts;
  if (an.fix.strict) r.notes.push_back("Ker L is strictly smaller than Fix(exp L)");
}

void analyze_pukanszky(const InstanceSpec& spec, const AnalysisOptions& opt, AnalysisReport& r) {
  const Tolerances& tol = opt.tolerances;
  const puk::TruncationConfig& c = spec.truncation;
  const puk::Prop5Report p = puk::verify_prop5(c, tol);
  const puk::TracialReport t = puk::tracial_check(c, opt.seed);

  r.validation.push_back({"selfadjoint_unitary", p.selfadjoint_unitary_residual <= 1e-10,
                          p.selfadjoint_unitary_residual});
  r.validation.push_back({"commutation_relations", p.relation_residual <= 1e-10, p.relation_residual});
  r.validation.push_back({"generator_spectrum_nonpositive",
                          p.max_generator_real_eigenvalue <= tol.residual,
                          p.max_generator_real_eigenvalue});

  const GKLSGenerator g = puk::build_generator_lambda(c);
  const GeneratorSpectrum gs = generator_spectrum_classify(gkls_superop(g), tol);
  r.spectrum_kind = "generator";
  r.eigenvalues = gs.eigenvalues;
  r.peripheral = gs.classes.peripheral;
  r.gap = gs.classes.gap;

  r.subspaces.push_back(make_subspace_record("n", p.markov.algebra.subspace, opt.basis_cap));
  r.algebras.push_back(make_algebra_record("n", p.markov.algebra));

  r.flags = {{"m_is_factor", p.m_is_factor},
             {"duality_holds", p.duality_holds},
             {"faithful", p.faithful},
             {"tracial", t.tracial},
             {"finite_checks_passed", p.passed}};
  r.metrics = {{"dim_m", static_cast<double>(p.dim_m)},
               {"m_center_dim", static_cast<double>(p.m_center_dim)},
               {"dim_commutant", static_cast<double>(p.dim_commutant)},
               {"dim_n_alg", static_cast<double>(p.dim_n_alg)},
               {"n_alg_residual", p.n_alg_residual},
               {"translation_residual", p.translation_residual},
               {"cylinder_residual", p.cylinder_residual},
               {"selfadjoint_unitary_residual", p.selfadjoint_unitary_residual},
               {"relation_residual", p.relation_residual},
               {"generator_selfadjoint_residual", p.generator_selfadjoint_residual},
               {"attr_dim", static_cast<double>(p.attr_dim)},
               {"attr_n_residual", p.attr_n_residual},
               {"sigma_min_eigenvalue", p.sigma_min_eigenvalue},
               {"tracial_residual", t.residual},
               {"phi_n1", t.phi_n1}};
  r.verdicts = p.verdicts;
  r.verdicts.push_back(t.verdict);
  for (const auto& f : p.failures) r.notes.push_back("finite check failed: " + f);
  r.notes.push_back(
      "all finite factors are type I; the type II1 / type III distinction is only probed through "
      "the tracial behaviour of the F0 vector state");
}

}  // namespace

AnalysisReport run_analysis(const InstanceSpec& spec, const AnalysisOptions& opt) {
  opt.tolerances.validate();
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.artifact_version = artifact_version();
  r.instance = instance_to_json(spec);
  r.seed = opt.seed;
  r.tolerances = opt.tolerances;
  switch (spec.kind) {
    case InstanceKind::channel:
      analyze_channel(spec, opt, r);
      break;
    case InstanceKind::generator:
      analyze_generator(spec, opt, r);
      break;
    case InstanceKind::pukanszky:
      analyze_pukanszky(spec, opt, r);
      break;
  }
  for (const auto& v : r.verdicts) {
    if (!v.consistent) r.notes.push_back("inconsistent verdict " + v.name + " at seed " + std::to_string(r.seed));
  }
  r.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int exit_code_for(const AnalysisReport& r) { return r.all_consistent() ? 0 : 3; }

}  // namespace qasym::harness
