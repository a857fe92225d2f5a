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

#include "qasym/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>
#include <unsupported/Eigen/MatrixFunctions>

#include "qasym/errors.hpp"
#include "qasym/random.hpp"

namespace qasym {

void GKLSGenerator::validate(double herm_tol) const {
  const Index d = hamiltonian.dim();
  if (d < 1) throw InputError("generator: empty Hamiltonian");
  if (!hamiltonian.is_hermitian(herm_tol * std::max(1.0, hamiltonian.norm()))) {
    throw InputError("generator: Hamiltonian is not hermitian");
  }
  for (const auto& l : jumps) require_same_dim(d, l.dim(), "generator jump operator");
}

namespace {

// out += s * (a (x) b), skipping zero entries of a.
void add_kron(Matrix& out, const Matrix& a, const Matrix& b, Complex s) {
  const Index br = b.rows();
  const Index bc = b.cols();
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      const Complex c = a(i, j);
      if (c == Complex(0.0, 0.0)) continue;
      out.block(i * br, j * bc, br, bc) += (s * c) * b;
    }
  }
}

}  // namespace

Superoperator gkls_superop(const GKLSGenerator& g) {
  g.validate();
  const Index d = g.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix& h = g.hamiltonian.matrix();
  Matrix m = Matrix::Zero(d * d, d * d);
  add_kron(m, id, h, kI);
  add_kron(m, h.transpose(), id, -kI);
  Matrix k = Matrix::Zero(d, d);
  for (const auto& jump : g.jumps) {
    const Matrix& l = jump.matrix();
    add_kron(m, l.transpose(), l.adjoint(), 1.0);
    k += l.adjoint() * l;
  }
  add_kron(m, id, k, -0.5);
  add_kron(m, k.transpose(), id, -0.5);
  return Superoperator(std::move(m));
}

Operator apply_gkls(const GKLSGenerator& g, const Operator& x) {
  g.validate();
  require_same_dim(g.dim(), x.dim(), "apply_gkls");
  const Operator& h = g.hamiltonian;
  Operator out = kI * commutator(h, x);
  for (const auto& l : g.jumps) {
    const Operator ll = l.adjoint() * l;
    out += l.adjoint() * x * l - 0.5 * (ll * x + x * ll);
  }
  return out;
}

Superoperator expm(const Superoperator& s, double t) {
  if (!std::isfinite(t)) throw InputError("expm: non-finite time");
  const Matrix& a = s.matrix();
  const Index n = a.rows();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& idx : sparsity_components(a)) {
    const auto m = static_cast<Index>(idx.size());
    Matrix sub(m, m);
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) sub(i, j) = t * a(idx[i], idx[j]);
    }
    Matrix e = m == 1 ? Matrix::Constant(1, 1, std::exp(sub(0, 0))) : Matrix(sub.exp());
    if (!e.allFinite()) throw NumericalFailure("expm: overflow");
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) out(idx[i], idx[j]) = e(i, j);
    }
  }
  return Superoperator(std::move(out));
}

Matrix apply_columns(const Superoperator& s, const Matrix& x) {
  const Matrix& a = s.matrix();
  if (a.rows() < 256) return a * x;
  const Eigen::SparseMatrix<Complex> sp = a.sparseView();
  if (sp.nonZeros() * 4 > a.size()) return a * x;
  return sp * x;
}

GeneratorSpectrum generator_spectrum_classify(const Superoperator& l, const Tolerances& tol) {
  GeneratorSpectrum g;
  SpectralSplit split(l.matrix(), [](Complex) { return false; });
  g.eigenvalues = split.eigenvalues();
  std::stable_sort(g.eigenvalues.begin(), g.eigenvalues.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() < b.imag();
  });
  double scale = 1.0;
  g.max_real_part = -std::numeric_limits<double>::infinity();
  g.zero_residual = std::numeric_limits<double>::infinity();
  for (const auto& e : g.eigenvalues) {
    scale = std::max(scale, std::abs(e));
    g.max_real_part = std::max(g.max_real_part, e.real());
    g.zero_residual = std::min(g.zero_residual, std::abs(e));
  }
  if (g.max_real_part > tol.residual * scale) {
    throw InvalidGenerator("generator has an eigenvalue with real part " +
                           std::to_string(g.max_real_part));
  }
  g.conjugation_residual = conjugation_pairing_residual(g.eigenvalues);
  g.classes = classify_and_gap(g.eigenvalues, tol.peripheral, SpectrumKind::generator);
  return g;
}

SemigroupAttractor semigroup_attractor(const Superoperator& l, const Tolerances& tol) {
  SemigroupAttractor r;
  const auto split = peripheral_split(l, tol, SpectrumKind::generator);
  r.attr = OperatorSubspace::from_orthonormal_columns(l.dim(), split.leading_basis());
  const auto pe = split.leading_eigenvalues();
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < pe.size() && !r.aliasing; ++i) {
    for (std::size_t j = i + 1; j < pe.size(); ++j) {
      const Complex diff = pe[i] - pe[j];
      if (std::abs(diff) <= 1e-6) continue;
      const double k = std::round(diff.imag() / two_pi);
      if (k != 0.0 && std::abs(diff - Complex(0.0, two_pi * k)) <= 1e-6) {
        r.aliasing = true;
        break;
      }
    }
  }
  r.attr_unit_time = attractor_subspace(expm(l, 1.0), tol);
  r.mutual_residual = mutual_containment_residual(r.attr, r.attr_unit_time);
  r.agrees = r.attr.size() == r.attr_unit_time.size() && r.mutual_residual <= tol.residual;
  return r;
}

SemigroupFix semigroup_fix(const Superoperator& l, const Tolerances& tol) {
  SemigroupFix r;
  r.kernel = fixed_point_subspace(l, tol, SpectrumKind::generator);
  r.fix_unit_time = fixed_point_subspace(expm(l, 1.0), tol, SpectrumKind::map);
  r.containment_residual = containment_residual(r.fix_unit_time, r.kernel);
  r.contained = r.containment_residual <= tol.residual;
  r.strict = r.contained && r.fix_unit_time.size() > r.kernel.size();
  return r;
}

namespace {

Eigen::Map<const Matrix> as_matrix(const Matrix& cols, Index c, Index d) {
  return Eigen::Map<const Matrix>(cols.col(c).data(), d, d);
}

// Worst multiplicative-domain and invariance defects of exp(tL) on the basis q.
std::pair<double, double> sampled_defects(const Superoperator& l, const Matrix& q, Index d,
                                          double t) {
  const Superoperator phi = expm(l, t);
  const Index r = q.cols();
  Matrix in(d * d, 3 * r);
  in.leftCols(r) = q;
  for (Index i = 0; i < r; ++i) {
    const auto b = as_matrix(q, i, d);
    Matrix bb = b.adjoint() * b;
    Matrix bbs = b * b.adjoint();
    in.col(r + i) = Eigen::Map<const Vector>(bb.data(), d * d);
    in.col(2 * r + i) = Eigen::Map<const Vector>(bbs.data(), d * d);
  }
  const Matrix out = apply_columns(phi, in);
  double mult = 0.0;
  for (Index i = 0; i < r; ++i) {
    const auto pb = as_matrix(out, i, d);
    mult = std::max(mult, (as_matrix(out, r + i, d) - pb.adjoint() * pb).norm());
    mult = std::max(mult, (as_matrix(out, 2 * r + i, d) - pb * pb.adjoint()).norm());
  }
  const Matrix img = out.leftCols(r);
  const double inv = r == 0 ? 0.0 : (img - q * (q.adjoint() * img)).colwise().norm().maxCoeff();
  return {mult, inv};
}

}  // namespace

double unitary_containment_check(const GKLSGenerator& g, const OperatorSubspace& n,
                                 std::span<const double> sample_times) {
  const Index d = g.dim();
  require_same_dim(d, n.ambient_dim(), "unitary_containment_check");
  if (n.empty()) return 0.0;
  const Superoperator l = gkls_superop(g);
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      (g.hamiltonian.matrix() + g.hamiltonian.matrix().adjoint()) / 2.0);
  const Matrix& v = es.eigenvectors();
  double worst = 0.0;
  for (double t : sample_times) {
    const Vector phases = (kI * t * es.eigenvalues().cast<Complex>()).array().exp();
    const Matrix u = v * phases.asDiagonal() * v.adjoint();
    const Matrix img = apply_columns(expm(l, t), n.columns());
    for (Index i = 0; i < n.size(); ++i) {
      const Matrix expect = u * as_matrix(n.columns(), i, d) * u.adjoint();
      worst = std::max(worst, (as_matrix(img, i, d) - expect).norm());
    }
  }
  return worst;
}

MarkovDfa dfa_markov(const GKLSGenerator& g, const Tolerances& tol, const MarkovOptions& opt) {
  g.validate();
  const Index d = g.dim();
  MarkovDfa r;
  std::vector<Operator> gens;
  for (const auto& l : g.jumps) {
    if (l.norm() == 0.0) continue;
    gens.push_back(l);
    gens.push_back(l.adjoint());
  }
  OperatorSubspace n;
  if (gens.empty()) {
    n = OperatorSubspace::full(d);
  } else {
    OperatorSubspace w = orthonormalize(gens, tol.rank);
    const Operator& h = g.hamiltonian;
    for (Index iter = 0;; ++iter) {
      if (iter > d * d) throw InternalLogicError("dfa_markov: delta_H span did not stabilize");
      std::vector<Operator> next = w.basis();
      for (const auto& b : w.basis()) next.push_back(commutator(h, b));
      OperatorSubspace grown = orthonormalize(next, tol.rank);
      if (grown.size() == w.size()) break;
      w = std::move(grown);
    }
    r.stabilized_dim = w.size();
    n = commutant(w, tol);
  }
  r.algebra = algebra_structure(n, tol);

  const Superoperator l = gkls_superop(g);
  for (double t : opt.sample_times) {
    const auto [mult, inv] = sampled_defects(l, n.columns(), d, t);
    r.multiplicative_residual = std::max(r.multiplicative_residual, mult);
    r.invariance_residual = std::max(r.invariance_residual, inv);
  }
  r.unitary_residual = unitary_containment_check(g, n, opt.sample_times);
  if (d <= opt.full_discrete_check_max_dim) {
    const AlgebraDescription disc = dfa_discrete(expm(l, 1.0), tol);
    r.full_discrete_checked = true;
    r.discrete_dim = disc.subspace.size();
    r.discrete_containment_residual = containment_residual(disc.subspace, n);
  }

  const bool ok = r.multiplicative_residual <= tol.residual &&
                  r.invariance_residual <= tol.residual && r.unitary_residual <= tol.residual &&
                  r.discrete_containment_residual <= tol.residual;
  if (!ok) {
    std::string msg = "dfa_markov cross-validation failed: N dim " + std::to_string(n.size()) +
                      ", multiplicative " + std::to_string(r.multiplicative_residual) +
                      ", invariance " + std::to_string(r.invariance_residual) + ", unitary " +
                      std::to_string(r.unitary_residual) + ", discrete " +
                      std::to_string(r.discrete_containment_residual);
    if (d <= opt.full_discrete_check_max_dim) {
      OperatorSubspace fallback = OperatorSubspace::full(d);
      for (double t : {0.1, 0.37, 0.7, 1.3, 2.1}) {
        const Superoperator phi = expm(l, t);
        const OperatorSubspace nt = largest_invariant_subspace(phi, bimodule_domain(phi, tol), tol);
        fallback = subspace_intersect(fallback, nt, tol.residual);
      }
      msg += "; sampled fallback dim " + std::to_string(fallback.size());
    }
    throw NumericalFailure(msg);
  }
  return r;
}

GKLSGenerator gauge_transform(const GKLSGenerator& g, std::span<const Complex> shifts, double r) {
  g.validate();
  if (shifts.size() != g.jumps.size()) {
    throw InputError("gauge_transform: need one shift per jump operator");
  }
  const Index d = g.dim();
  const Matrix id = Matrix::Identity(d, d);
  GKLSGenerator out;
  Matrix h = g.hamiltonian.matrix() + r * id;
  for (std::size_t k = 0; k < shifts.size(); ++k) {
    const Complex c = shifts[k];
    const Matrix& l = g.jumps[k].matrix();
    h += (std::conj(c) * l - c * l.adjoint()) / Complex(0.0, 2.0);
    out.jumps.emplace_back(l + c * id);
  }
  out.hamiltonian = Operator((h + h.adjoint()) / 2.0);
  const double diff = (gkls_superop(out).matrix() - gkls_superop(g).matrix()).norm();
  if (diff > 1e-10) {
    throw InternalLogicError("gauge_transform changed the generator by " + std::to_string(diff));
  }
  return out;
}

SemigroupFaithful semigroup_faithful(const GKLSGenerator& g, const OperatorSubspace& attr,
                                     const OperatorSubspace& n, const Tolerances& tol) {
  const Superoperator l = gkls_superop(g);
  const StationaryStates st = stationary_states(l.adjoint(), tol, SpectrumKind::generator);
  SemigroupFaithful r;
  r.min_eigenvalue = st.min_eigenvalue;
  r.sigma = st.sigma;
  r.faithful = st.min_eigenvalue > tol.rank;
  TheoremVerdict& v = r.verdict;
  v.name = "faithful_qds_attr_equals_n";
  v.hypothesis_holds = r.faithful;
  const double mutual = mutual_containment_residual(attr, n);
  v.conclusion_holds = attr.size() == n.size() && mutual <= tol.residual;
  v.consistent = !v.hypothesis_holds || v.conclusion_holds;
  v.residuals = {{"attr_dim", static_cast<double>(attr.size())},
                 {"n_dim", static_cast<double>(n.size())},
                 {"attr_n_mutual_residual", mutual},
                 {"sigma_min_eigenvalue", r.min_eigenvalue}};
  if (!v.hypothesis_holds && v.conclusion_holds) {
    v.note = "Attr = N without a faithful stationary state";
  }
  return r;
}

SemigroupFaithful semigroup_faithful(const GKLSGenerator& g, const Tolerances& tol) {
  const Superoperator l = gkls_superop(g);
  const auto split = peripheral_split(l, tol, SpectrumKind::generator);
  const OperatorSubspace attr =
      OperatorSubspace::from_orthonormal_columns(g.dim(), split.leading_basis());
  return semigroup_faithful(g, attr, dfa_markov(g, tol).algebra.subspace, tol);
}

SemigroupAnalysis analyze_semigroup(const GKLSGenerator& g, const Tolerances& tol,
                                    const MarkovOptions& opt, std::uint64_t seed) {
  tol.validate();
  SemigroupAnalysis a;
  a.generator = gkls_superop(g);
  a.spectrum = generator_spectrum_classify(a.generator, tol);
  a.attractor = semigroup_attractor(a.generator, tol);
  a.fix = semigroup_fix(a.generator, tol);
  a.dfa = dfa_markov(g, tol, opt);
  a.faithful = semigroup_faithful(g, a.attractor.attr, a.dfa.algebra.subspace, tol);
  a.verdicts.push_back(a.faithful.verdict);

  TheoremVerdict att;
  att.name = "attractor_matches_unit_time_map";
  att.hypothesis_holds = !a.attractor.aliasing;
  att.conclusion_holds = a.attractor.agrees;
  att.consistent = !att.hypothesis_holds || att.conclusion_holds;
  att.residuals = {{"mutual_residual", a.attractor.mutual_residual}};
  if (a.attractor.aliasing) att.note = "peripheral eigenvalues differ by a multiple of 2*pi*i";
  a.verdicts.push_back(std::move(att));

  TheoremVerdict fx;
  fx.name = "kernel_in_unit_time_fix";
  fx.hypothesis_holds = true;
  fx.conclusion_holds = a.fix.contained;
  fx.consistent = fx.conclusion_holds;
  fx.residuals = {{"containment_residual", a.fix.containment_residual},
                  {"kernel_dim", static_cast<double>(a.fix.kernel.size())},
                  {"unit_time_fix_dim", static_cast<double>(a.fix.fix_unit_time.size())}};
  if (a.fix.strict) fx.note = "strict inclusion";
  a.verdicts.push_back(std::move(fx));

  TheoremVerdict uc;
  uc.name = "unitary_containment";
  uc.hypothesis_holds = true;
  uc.conclusion_holds = a.dfa.unitary_residual <= tol.residual &&
                        a.dfa.multiplicative_residual <= tol.residual;
  uc.consistent = uc.conclusion_holds;
  uc.residuals = {{"unitary_residual", a.dfa.unitary_residual},
                  {"multiplicative_residual", a.dfa.multiplicative_residual},
                  {"invariance_residual", a.dfa.invariance_residual}};
  a.verdicts.push_back(std::move(uc));

  Rng rng(seed);
  std::vector<Complex> shifts;
  for (std::size_t k = 0; k < g.jumps.size(); ++k) shifts.push_back(rng.complex_normal());
  const double shift_r = rng.normal();
  const GKLSGenerator g2 = gauge_transform(g, shifts, shift_r);
  const double superop_residual = (gkls_superop(g2).matrix() - a.generator.matrix()).norm();
  const MarkovDfa dfa2 = dfa_markov(g2, tol, opt);
  const double n_residual = mutual_containment_residual(a.dfa.algebra.subspace, dfa2.algebra.subspace);
  TheoremVerdict gi;
  gi.name = "gauge_invariance";
  gi.hypothesis_holds = true;
  gi.conclusion_holds = superop_residual <= 1e-10 && n_residual <= tol.residual &&
                        dfa2.algebra.subspace.size() == a.dfa.algebra.subspace.size();
  gi.consistent = gi.conclusion_holds;
  gi.residuals = {{"superop_residual", superop_residual}, {"n_residual", n_residual}};
  a.verdicts.push_back(std::move(gi));
  return a;
}

}  // namespace qasym
