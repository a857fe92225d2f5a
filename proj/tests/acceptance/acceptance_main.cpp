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


#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qasym/dfa.hpp"
#include "qasym/errors.hpp"
#include "qasym/harness/analysis.hpp"
#include "qasym/harness/instance.hpp"
#include "qasym/markov.hpp"
#include "qasym/pukanszky.hpp"
#include "qasym/random.hpp"
#include "qasym/spectral.hpp"

namespace {

using namespace qasym;
namespace fs = std::filesystem;

const Complex kI(0.0, 1.0);

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void at_most(const char* what, double value, double bound) {
    if (!(value <= bound)) {
      passed = false;
      detail << what << "=" << value << " > " << bound << "; ";
    }
  }
  void at_least(const char* what, double value, double bound) {
    if (!(value >= bound)) {
      passed = false;
      detail << what << "=" << value << " < " << bound << "; ";
    }
  }
  void require(const char* what, bool ok) {
    if (!ok) {
      passed = false;
      detail << what << " failed; ";
    }
  }
};

struct Context {
  std::string qasym;
  fs::path data;
  fs::path work;
};

struct Criterion {
  int id;
  std::string name;
  std::function<void(Outcome&, const Context&)> run;
};

Superoperator heis(const std::vector<Operator>& k) { return superop_from_kraus(k, Picture::heisenberg); }

Operator diag_op(std::initializer_list<Complex> v) {
  Vector d(static_cast<Index>(v.size()));
  Index i = 0;
  for (Complex z : v) d(i++) = z;
  return Operator(Matrix(d.asDiagonal()));
}

// Kraus mixture of unitaries sharing an eigenbasis; N is the commutative diagonal algebra.
Superoperator commuting_phase_channel(Index d, std::uint64_t seed) {
  Rng rng(seed);
  const Matrix w = haar_unitary(d, rng);
  std::vector<Operator> k;
  for (int i = 0; i < 2; ++i) {
    Vector ph(d);
    for (Index j = 0; j < d; ++j) ph(j) = std::exp(kI * (2.0 * M_PI * rng.uniform()));
    k.push_back(std::sqrt(0.5) * Operator(w * ph.asDiagonal() * w.adjoint()));
  }
  return heis(k);
}

Superoperator structured_channel(std::uint64_t seed, Index d) {
  switch (seed % 4) {
    case 0:
      return heis(random_unital_kraus(d, 1, seed));
    case 1:
      return commuting_phase_channel(d, seed);
    case 2:
      return heis(random_unital_kraus(d, 2, seed));
    default:
      return heis(random_stinespring_kraus(d, 2, seed));
  }
}

GKLSGenerator factorized_generator(std::uint64_t seed) {
  Rng rng(seed);
  const Matrix i2 = Matrix::Identity(2, 2);
  GKLSGenerator g;
  g.hamiltonian = Operator(kron(random_hermitian(2, rng).matrix(), i2) + kron(i2, random_hermitian(2, rng).matrix()));
  for (int k = 0; k < 2; ++k) g.jumps.emplace_back(kron(ginibre(2, 2, rng) / std::sqrt(2.0), i2));
  return g;
}

GKLSGenerator acceptance_generator(std::uint64_t i) {
  if (i % 2 == 1) return factorized_generator(1000 + i);
  return random_gkls(2 + static_cast<Index>(i % 4 == 0), 1 + static_cast<Index>(i % 3), 2000 + i);
}

double max_choi_deficit(const Superoperator& s) {
  const Eigen::SelfAdjointEigenSolver<Matrix> es(choi_matrix(s).matrix());
  return -es.eigenvalues().minCoeff();
}

// Operator-level check that Phi is multiplicative and *-preserving on the span of q.
void asymptotic_residuals(const Superoperator& s, const OperatorSubspace& attr, double& mult, double& star) {
  const std::vector<Operator> b = attr.basis();
  for (const Operator& x : b) {
    star = std::max(star, (s(x.adjoint()) - s(x).adjoint()).norm());
    for (const Operator& y : b) mult = std::max(mult, (s(x * y) - s(x) * s(y)).norm());
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

void spectrum_axioms(Outcome& o, const Context&) {
  double one = 0.0, conj = 0.0, radius = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Index d = 2 + static_cast<Index>(i % 3);
    const Superoperator s = i % 2 == 0 ? heis(random_unital_kraus(d, 1 + i % 4, 100 + i))
                                       : heis(random_stinespring_kraus(d, 1 + i % 3, 100 + i));
    const std::vector<Complex> e = full_spectrum(s);
    double closest = 1e300;
    for (Complex z : e) {
      closest = std::min(closest, std::abs(z - 1.0));
      radius = std::max(radius, std::abs(z));
    }
    one = std::max(one, closest);
    conj = std::max(conj, conjugation_pairing_residual(e));
    o.require("validate_ucp", validate_ucp(s).ok());
  }
  o.at_most("dist(1,spec)", one, 1e-8);
  o.at_most("conjugation", conj, 1e-8);
  o.at_most("max|lambda|-1", radius - 1.0, 1e-9);
  o.detail << "100 maps, dist(1)=" << one << " conj=" << conj << " rho=" << radius;
}

void dephasing(Outcome& o, const Context&) {
  const double p = 0.25;
  const std::vector<Operator> k{std::sqrt(1 - p) * Operator::identity(2), std::sqrt(p) * pauli::z()};
  const Superoperator s = heis(k);

  // Pauli-basis matrix T_ij = tr(s_i Phi(s_j)) / 2 from the entrywise superoperator.
  const Matrix sup = oracle::heisenberg_superop(oracle::matrices(k));
  const std::vector<Matrix> paulis{Matrix::Identity(2, 2), pauli::x().matrix(), pauli::y().matrix(),
                                   pauli::z().matrix()};
  Matrix t(4, 4);
  for (int j = 0; j < 4; ++j) {
    const Matrix img = oracle::unvec(sup * oracle::vec(paulis[j]), 2);
    for (int i = 0; i < 4; ++i) t(i, j) = (paulis[i].adjoint() * img).trace() / 2.0;
  }
  const std::vector<Complex> expected = oracle::eigenvalues(t);
  o.at_most("oracle vs closed form", oracle::multiset_distance(expected, {1.0, 1.0, 0.5, 0.5}), 1e-12);
  o.at_most("spectrum", oracle::multiset_distance(full_spectrum(s), expected), 1e-10);

  const DiscreteAnalysis a = analyze_discrete(s);
  o.at_most("|gap-0.5|", std::abs(a.spectral.classes.gap - 0.5), 1e-10);
  const OperatorSubspace iz = orthonormalize(std::vector<Operator>{Operator::identity(2), pauli::z()}, 1e-12);
  o.require("dim Attr=2", a.spectral.attr.size() == 2);
  o.require("dim Fix=2", a.spectral.fix.size() == 2);
  o.require("dim N=2", a.dfa.subspace.size() == 2);
  const double r = std::max({mutual_containment_residual(a.spectral.attr, iz),
                             mutual_containment_residual(a.spectral.fix, iz),
                             mutual_containment_residual(a.dfa.subspace, iz)});
  o.at_most("mutual containment", r, 1e-8);
  o.require("faithful", a.faithful.faithful);
  o.detail << "gap=" << a.spectral.classes.gap << " residual=" << r;
}

void attr_equals_n(Outcome& o, const Context&) {
  double mutual = 0.0, mult = 0.0, star = 0.0;
  int inconsistent = 0, nontrivial = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Index d = 2 + static_cast<Index>(i % 2);
    const std::uint64_t seed = 300 + i;
    Superoperator s = i % 3 == 0   ? heis(random_unital_kraus(d, 1, seed))
                      : i % 3 == 1 ? commuting_phase_channel(d, seed)
                                   : heis(random_unital_kraus(d, 2 + i % 2, seed));
    const DiscreteAnalysis a = analyze_discrete(s, {}, seed);
    o.require("faithful", a.faithful.faithful);
    for (const TheoremVerdict& v : a.verdicts) inconsistent += v.consistent ? 0 : 1;
    mutual = std::max(mutual, mutual_containment_residual(a.spectral.attr, a.dfa.subspace));
    o.require("dim Attr = dim N", a.spectral.attr.size() == a.dfa.subspace.size());
    asymptotic_residuals(s, a.spectral.attr, mult, star);
    if (a.spectral.attr.size() > 1) ++nontrivial;
  }
  o.at_most("Attr/N residual", mutual, 1e-7);
  o.at_most("multiplicativity", mult, 1e-7);
  o.at_most("star", star, 1e-7);
  o.require("zero inconsistent", inconsistent == 0);
  o.detail << "50 channels (" << nontrivial << " with dim Attr > 1), residual=" << mutual << " mult=" << mult
           << " star=" << star << " inconsistent=" << inconsistent;
}

void pa_iff(Outcome& o, const Context& ctx) {
  int inconsistent = 0, non_pa = 0;
  std::vector<std::uint64_t> logged;
  auto check = [&](const Superoperator& s, std::uint64_t seed) {
    const DiscreteAnalysis a = analyze_discrete(s, {}, seed);
    for (const TheoremVerdict& v : a.verdicts) inconsistent += v.consistent ? 0 : 1;
    const double attr_in_n = containment_residual(a.spectral.attr, a.dfa.subspace);
    const bool contained = attr_in_n <= 1e-8;
    o.require("PA <=> Attr in N", a.pa.peripherally_automorphic == contained);
    if (!a.pa.peripherally_automorphic) {
      ++non_pa;
      if (seed != 0) logged.push_back(seed);
      o.at_least("non-PA Attr outside N", attr_in_n, 1e-6);
    }
  };
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Index d = 2 + static_cast<Index>(i % 3);
    const std::uint64_t seed = 400 + i;
    check(i % 2 == 0 ? heis(random_unital_kraus(d, 1 + i % 3, seed))
                     : heis(random_stinespring_kraus(d, 1 + i % 3, seed)),
          seed);
  }
  const int random_non_pa = non_pa;
  check(channel_superop(harness::parse_instance(ctx.data / "non_pa.json")), 0);
  o.require("zero inconsistent", inconsistent == 0);
  o.require("classical example is non-PA", non_pa == random_non_pa + 1);
  o.detail << "100 random + 1 classical, random non-PA=" << random_non_pa;
  if (!logged.empty()) o.detail << " seeds:";
  for (std::uint64_t s : logged) o.detail << " " << s;
}

void hamana(Outcome& o, const Context&) {
  double defect = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Index d = 2 + static_cast<Index>(i % 2);
    const Superoperator p = peripheral_projection(structured_channel(500 + i, d));
    const HamanaResult h = hamana_check(p, 500 + i);
    defect = std::max({defect, h.left_defect, h.right_defect});
  }
  o.at_most("defect", defect, 1e-8);
  o.detail << "50 projections, max defect=" << defect;
}

void gkls_axioms(Outcome& o, const Context&) {
  double zero = 0.0, re = -1e300, choi = -1e300;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const GKLSGenerator g = random_gkls(2 + static_cast<Index>(i % 2), 1 + static_cast<Index>(i % 3), 600 + i);
    const Superoperator l = gkls_superop(g);
    const GeneratorSpectrum sp = generator_spectrum_classify(l);
    zero = std::max(zero, sp.zero_residual);
    re = std::max(re, sp.max_real_part);
    for (double t : {0.3, 1.0}) {
      const Superoperator e = expm(l, t);
      o.require("expm UCP", validate_ucp(e).ok());
      choi = std::max(choi, max_choi_deficit(e));
      o.at_most("expm vs eig oracle", (e.matrix() - oracle::expm_eig(l.matrix(), t)).norm(), 1e-8);
    }
  }
  o.at_most("dist(0,spec)", zero, 1e-8);
  o.at_most("max Re", re, 1e-8);
  o.at_most("-min Choi eig", choi, 1e-8);
  o.detail << "50 generators, dist(0)=" << zero << " maxRe=" << re << " min Choi eig=" << -choi;
}

void markov_dephasing(Outcome& o, const Context&) {
  const GKLSGenerator g{Operator::zero(2), {pauli::z()}};
  const SemigroupAnalysis a = analyze_semigroup(g);
  const std::vector<Complex> expected{0.0, 0.0, -2.0, -2.0};
  o.at_most("spectrum", oracle::multiset_distance(a.spectrum.eigenvalues, expected), 1e-10);
  const OperatorSubspace iz = orthonormalize(std::vector<Operator>{Operator::identity(2), pauli::z()}, 1e-12);
  o.require("dim Ker=2", a.fix.kernel.size() == 2);
  o.require("dim N=2", a.dfa.algebra.subspace.size() == 2);
  const double r = std::max(mutual_containment_residual(a.fix.kernel, iz),
                            mutual_containment_residual(a.dfa.algebra.subspace, iz));
  o.at_most("Ker/N residual", r, 1e-8);
  const Operator off = expm(a.generator, 1.0)(Operator::unit(2, 0, 1));
  const double mult = std::abs(off.matrix()(0, 1) - std::exp(-2.0));
  o.at_most("|multiplier-e^-2|", mult, 1e-10);
  o.detail << "residual=" << r << " multiplier error=" << mult;
}

void strict_inclusion(Outcome& o, const Context&) {
  const GKLSGenerator g{diag_op({0.0, 2.0 * M_PI}), {}};
  const SemigroupFix f = semigroup_fix(gkls_superop(g));
  o.require("dim Ker=2", f.kernel.size() == 2);
  o.require("dim Fix=4", f.fix_unit_time.size() == 4);
  o.require("strict", f.strict);
  o.detail << "dim Ker=" << f.kernel.size() << " dim Fix=" << f.fix_unit_time.size();
}

void unitary_containment(Outcome& o, const Context&) {
  const std::vector<double> times{0.1, 0.7, 1.3};
  double worst = 0.0;
  Index nontrivial = 0;
  for (std::uint64_t i = 0; i < 30; ++i) {
    const GKLSGenerator g = acceptance_generator(i);
    const MarkovDfa n = dfa_markov(g);
    if (n.algebra.subspace.size() > 1) ++nontrivial;
    // e^{itH} from the eigen-oracle, Phi_t from expm.
    const Superoperator l = gkls_superop(g);
    for (double t : times) {
      const Matrix u = oracle::expm_eig(kI * g.hamiltonian.matrix(), t);
      const Superoperator e = expm(l, t);
      for (const Operator& b : n.algebra.subspace.basis()) {
        worst = std::max(worst, (e(b).matrix() - u * b.matrix() * u.adjoint()).norm());
      }
    }
    worst = std::max(worst, unitary_containment_check(g, n.algebra.subspace, times));
  }
  o.at_most("residual", worst, 1e-7);
  o.detail << "30 generators (" << nontrivial << " with dim N > 1), max residual=" << worst;
}

void gauge_invariance(Outcome& o, const Context&) {
  double sup = 0.0, nres = 0.0;
  Rng rng(700);
  for (std::uint64_t i = 0; i < 30; ++i) {
    const GKLSGenerator g = acceptance_generator(i);
    std::vector<Complex> shifts;
    for (std::size_t k = 0; k < g.jumps.size(); ++k) shifts.push_back(rng.complex_normal());
    const GKLSGenerator h = gauge_transform(g, shifts, rng.normal());
    sup = std::max(sup, (gkls_superop(h).matrix() - gkls_superop(g).matrix()).norm());
    nres = std::max(nres, mutual_containment_residual(dfa_markov(g).algebra.subspace, dfa_markov(h).algebra.subspace));
  }
  o.at_most("superop residual", sup, 1e-10);
  o.at_most("N residual", nres, 1e-8);
  o.detail << "30 generators, superop=" << sup << " N=" << nres;
}

void pukanszky_factor(Outcome& o, const Context&) {
  for (int n = 1; n <= 3; ++n) {
    for (double lambda : {0.5, 0.3}) {
      const auto t0 = std::chrono::steady_clock::now();
      const puk::TruncationConfig c = puk::TruncationConfig::geometric(n, lambda);
      const puk::Prop5Report r = puk::verify_prop5(c);
      o.require("dim M = 4^n", r.dim_m == (Index{1} << (2 * n)));
      o.require("center dim 1", r.m_center_dim == 1);
      o.require("dim N = dim commutant", r.dim_n_alg == r.dim_commutant);
      o.at_most("N vs commutant", r.n_alg_residual, 1e-9);
      o.require("faithful", r.faithful);
      o.require("dim Attr = dim N", r.attr_dim == r.dim_n_alg);
      o.at_most("Attr vs N", r.attr_n_residual, 1e-8);
      o.at_most("self-adjoint unitary", r.selfadjoint_unitary_residual, 1e-10);
      if (n <= 2) {
        // Commutant from the stacked Kronecker system, independent of the sequential solver.
        const puk::PukOperators ops = puk::build_operators(c);
        std::vector<Matrix> gens;
        for (const Operator& m : ops.m) gens.push_back(m.matrix());
        for (const Operator& m : ops.n) gens.push_back(m.matrix());
        const Matrix bf = oracle::brute_force_commutant(gens);
        o.require("commutant dim vs oracle", bf.cols() == r.dim_commutant);
        o.at_most("N vs oracle commutant", oracle::subspace_distance(r.markov.algebra.subspace.columns(), bf), 1e-9);
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.detail << (n == 1 && lambda == 0.5 ? "" : "; ") << "n=" << n << " l=" << lambda << " dimN=" << r.dim_n_alg
               << " res=" << r.n_alg_residual << " (" << static_cast<int>(secs) << "s)";
    }
  }
}

void tracial(Outcome& o, const Context&) {
  const puk::TracialReport half = puk::tracial_check(puk::TruncationConfig::geometric(2, 0.5), 12);
  o.at_most("residual at 1/2", half.residual, 1e-10);
  const puk::TracialReport biased = puk::tracial_check(puk::TruncationConfig::geometric(2, 0.3), 12);
  // phi(N_1) = sum_x mu(x) (-1)^{x_1}.
  double expected = 0.0;
  for (unsigned x = 0; x < 4; ++x) expected += oracle::product_measure(x, 2, 0.3) * (((x >> 1) & 1U) ? -1.0 : 1.0);
  o.at_most("oracle vs 2l-1", std::abs(expected + 0.4), 1e-14);
  o.at_most("|phi(N1)+0.4|", std::abs(biased.phi_n1 - expected), 1e-10);
  o.at_least("residual at 0.3", biased.residual, 0.1);
  o.require("verdicts consistent", half.verdict.consistent && biased.verdict.consistent);
  o.detail << "residual(0.5)=" << half.residual << " residual(0.3)=" << biased.residual
           << " phi(N1)=" << biased.phi_n1;
}

void oracle_equivalence(Outcome& o, const Context&) {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Superoperator s = structured_channel(800 + i, 2);
    const AlgebraDescription n = dfa_discrete(s);
    const Matrix bf = oracle::brute_force_dfa(s.matrix(), 2);
    o.require("dim", n.subspace.size() == bf.cols());
    worst = std::max(worst, oracle::subspace_distance(n.subspace.columns(), bf));
  }
  o.at_most("subspace residual", worst, 1e-8);
  o.detail << "20 channels, max residual=" << worst;
}

void determinism(Outcome& o, const Context& ctx) {
  fs::create_directories(ctx.work);
  std::vector<std::string> texts;
  for (int run = 0; run < 2; ++run) {
    const fs::path out = ctx.work / ("campaign_" + std::to_string(run) + ".json");
    fs::remove(out);
    const std::string cmd = "\"" + ctx.qasym + "\" campaign --family unital --dim 2 --trials 20 --seed 7 --out \"" +
                            out.string() + "\" 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    o.require("exit 0", rc == 0);
    texts.push_back(std::regex_replace(slurp(out), std::regex(".*wall_clock_seconds.*\n"), ""));
  }
  o.require("non-empty", !texts[0].empty());
  o.require("byte-identical", texts[0] == texts[1]);
  o.detail << texts[0].size() << " bytes compared";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qasym acceptance suite"};
  Context ctx;
  std::vector<int> only;
  app.add_option("--qasym", ctx.qasym, "path to the qasym executable")->required();
  app.add_option("--data", ctx.data, "test data directory")->required();
  app.add_option("--work", ctx.work, "scratch directory")->required();
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "spectrum axioms", spectrum_axioms},
      {2, "dephasing micro-instance", dephasing},
      {3, "faithful Attr = N", attr_equals_n},
      {4, "PA iff Attr in N", pa_iff},
      {5, "Hamana lemma", hamana},
      {6, "GKLS axioms", gkls_axioms},
      {7, "Markovian dephasing", markov_dephasing},
      {8, "strict inclusion", strict_inclusion},
      {9, "unitary containment", unitary_containment},
      {10, "gauge invariance", gauge_invariance},
      {11, "Pukanszky finite factor", pukanszky_factor},
      {12, "tracial dichotomy", tracial},
      {13, "oracle equivalence for N", oracle_equivalence},
      {14, "campaign determinism", determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o, ctx);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char id[8];
    std::snprintf(id, sizeof id, "%02d", c.id);
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << id << " " << c.name << " (" << o.detail.str() << ", "
              << std::fixed << std::setprecision(1) << secs << "s)" << std::defaultfloat << std::endl;
    failed += o.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
