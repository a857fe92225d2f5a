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

#include "qasym/dfa.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qasym/errors.hpp"
#include "qasym/random.hpp"

namespace qasym {

double TheoremVerdict::residual(const std::string& key) const {
  for (const auto& [k, v] : residuals) {
    if (k == key) return v;
  }
  throw InputError("verdict " + name + " has no residual named " + key);
}

namespace {

Eigen::Map<const Matrix> as_matrix(const Matrix& cols, Index c, Index d) {
  return Eigen::Map<const Matrix>(cols.col(c).data(), d, d);
}

// Worst ||B_i B_j - P(B_i B_j)|| and ||B_i^* - P(B_i^*)|| over the (orthonormal) basis.
std::pair<double, double> closure_residuals(const OperatorSubspace& v) {
  const Index d = v.ambient_dim();
  const Index r = v.size();
  const Matrix& q = v.columns();
  double prod = 0.0;
  double star = 0.0;
  Matrix cols(d * d, r);
  for (Index i = 0; i < r; ++i) {
    const auto bi = as_matrix(q, i, d);
    for (Index j = 0; j < r; ++j) {
      Matrix p = bi * as_matrix(q, j, d);
      cols.col(j) = Eigen::Map<const Vector>(p.data(), d * d);
    }
    const Matrix res = cols - q * (q.adjoint() * cols);
    prod = std::max(prod, res.colwise().norm().maxCoeff());
    Matrix a = bi.adjoint();
    const Vector av = Eigen::Map<const Vector>(a.data(), d * d);
    star = std::max(star, (av - q * (q.adjoint() * av)).norm());
  }
  return {prod, star};
}

// Worst ||S(B_i B_j) - S(B_i) S(B_j)|| over the basis.
double multiplicativity_residual(const Superoperator& s, const OperatorSubspace& v) {
  const Index d = v.ambient_dim();
  const Index r = v.size();
  const Matrix& q = v.columns();
  const Matrix sq = s.matrix() * q;
  double worst = 0.0;
  for (Index i = 0; i < r; ++i) {
    Matrix prods(d * d, r);
    Matrix images(d * d, r);
    const auto bi = as_matrix(q, i, d);
    const auto si = as_matrix(sq, i, d);
    for (Index j = 0; j < r; ++j) {
      Matrix p = bi * as_matrix(q, j, d);
      prods.col(j) = Eigen::Map<const Vector>(p.data(), d * d);
      Matrix m = si * as_matrix(sq, j, d);
      images.col(j) = Eigen::Map<const Vector>(m.data(), d * d);
    }
    const Matrix diff = s.matrix() * prods - images;
    worst = std::max(worst, diff.colwise().norm().maxCoeff());
  }
  return worst;
}

double star_preservation_residual(const Superoperator& s, const OperatorSubspace& v) {
  const Index d = v.ambient_dim();
  const Matrix& q = v.columns();
  const Matrix sq = s.matrix() * q;
  double worst = 0.0;
  for (Index i = 0; i < v.size(); ++i) {
    Matrix a = as_matrix(q, i, d).adjoint();
    const Vector sa = s.matrix() * Eigen::Map<const Vector>(a.data(), d * d);
    const Matrix lhs = Eigen::Map<const Matrix>(sa.data(), d, d);
    worst = std::max(worst, (lhs - as_matrix(sq, i, d).adjoint()).norm());
  }
  return worst;
}

double min_singular_value(const Matrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().minCoeff();
}

TheoremVerdict verdict_faithful(const Superoperator& s, const OperatorSubspace& attr,
                                const AlgebraDescription& dfa, const FaithfulResult& faithful,
                                const Tolerances& tol) {
  TheoremVerdict v;
  v.name = "faithful_attr_equals_n";
  v.hypothesis_holds = faithful.faithful;
  const OperatorSubspace& n = dfa.subspace;
  const double mutual = mutual_containment_residual(attr, n);
  const double mult = multiplicativity_residual(s, attr);
  const double star = star_preservation_residual(s, attr);
  const double smin = min_singular_value(asymptotic_map(s, attr));
  v.residuals = {{"attr_dim", static_cast<double>(attr.size())},
                 {"n_dim", static_cast<double>(n.size())},
                 {"attr_n_mutual_residual", mutual},
                 {"asymptotic_multiplicativity", mult},
                 {"asymptotic_star", star},
                 {"asymptotic_min_singular_value", smin},
                 {"sigma_min_eigenvalue", faithful.min_eigenvalue}};
  v.conclusion_holds = attr.size() == n.size() && mutual <= tol.residual &&
                       mult <= tol.residual && star <= tol.residual && smin > tol.rank;
  v.consistent = !v.hypothesis_holds || v.conclusion_holds;
  if (!v.hypothesis_holds && attr.size() < n.size() &&
      containment_residual(n, attr) <= tol.residual) {
    v.note = "not faithful; Attr is a proper subspace of N";
  }
  return v;
}

TheoremVerdict verdict_pa(const OperatorSubspace& attr, const OperatorSubspace& fix,
                          const AlgebraDescription& dfa, const PaResult& pa,
                          const Tolerances& tol) {
  TheoremVerdict v;
  v.name = "pa_iff_attr_in_n";
  v.hypothesis_holds = pa.peripherally_automorphic;
  const double attr_in_n = containment_residual(dfa.subspace, attr);
  const double fix_in_n = containment_residual(dfa.subspace, fix);
  v.conclusion_holds = attr_in_n <= tol.residual;
  v.residuals = {{"attr_closure_residual", pa.closure_residual},
                 {"attr_multiplicativity_residual", pa.multiplicativity_residual},
                 {"attr_in_n_residual", attr_in_n},
                 {"fix_in_n_residual", fix_in_n}};
  const bool corollary = !v.hypothesis_holds || fix_in_n <= tol.residual;
  v.consistent = v.hypothesis_holds == v.conclusion_holds && corollary;
  if (!v.hypothesis_holds) v.note = "not peripherally automorphic";
  return v;
}

}  // namespace

//----------------------------------------------------------------------------

AlgebraDescription algebra_structure(const OperatorSubspace& v, const Tolerances& tol) {
  AlgebraDescription a;
  a.subspace = v;
  const Index d = v.ambient_dim();
  a.center = OperatorSubspace(d);
  if (v.empty()) return a;
  const auto [prod, star] = closure_residuals(v);
  a.product_residual = prod;
  a.star_residual = star;
  a.is_product_closed = prod <= tol.residual;
  a.is_star_closed = star <= tol.residual;
  const Operator id = Operator::identity(d);
  a.contains_identity = v.relative_residual(id) <= tol.residual;

  // Center: coefficients c with [B_i, Q c] = 0 for every basis element B_i.
  const Matrix& q = v.columns();
  linalg::StackedNullspace stack(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    stack.add(linalg::commutator_columns(as_matrix(q, i, d), q));
  }
  const Matrix null = stack.solve(tol.rank, 2.0);
  a.center = orthonormalize_columns(d, q * null, 1e-12);
  a.is_factor = a.center.size() == 1 && a.center.relative_residual(id) <= tol.residual;
  return a;
}

OperatorSubspace bimodule_domain(const Superoperator& s, const Tolerances& tol) {
  const Index d = s.dim();
  const Index d2 = d * d;
  const Matrix& m = s.matrix();
  auto idx = [d](Index i, Index j) { return j * d + i; };
  linalg::StackedNullspace stack(d2);
  Matrix left(d2, d2);
  Matrix right(d2, d2);
  for (Index aj = 0; aj < d; ++aj) {
    for (Index ai = 0; ai < d; ++ai) {
      const auto fa = as_matrix(m, idx(ai, aj), d);
      // Column (p, q) is the condition evaluated at X = E_pq.
      for (Index q = 0; q < d; ++q) {
        for (Index p = 0; p < d; ++p) {
          const Index col = idx(p, q);
          const auto sx = as_matrix(m, col, d);
          Matrix l = -(fa * sx);
          if (aj == p) l += as_matrix(m, idx(ai, q), d);
          Matrix r = -(sx * fa);
          if (q == ai) r += as_matrix(m, idx(p, aj), d);
          left.col(col) = Eigen::Map<const Vector>(l.data(), d2);
          right.col(col) = Eigen::Map<const Vector>(r.data(), d2);
        }
      }
      stack.add(left);
      stack.add(right);
    }
  }
  return OperatorSubspace::from_orthonormal_columns(d, stack.solve(tol.rank, 1.0));
}

OperatorSubspace largest_invariant_subspace(const Superoperator& s, const OperatorSubspace& v,
                                            const Tolerances& tol) {
  require_same_dim(s.dim(), v.ambient_dim(), "largest_invariant_subspace");
  const Index d = s.dim();
  Matrix q = v.columns();
  for (Index iter = 0; iter <= d * d; ++iter) {
    if (q.cols() == 0) return OperatorSubspace(d);
    const Matrix sq = s.matrix() * q;
    const Matrix outside = sq - q * (q.adjoint() * sq);
    const Matrix null = linalg::nullspace(outside, tol.rank, 1.0);
    if (null.cols() == q.cols()) return OperatorSubspace::from_orthonormal_columns(d, q);
    q = q * null;
  }
  throw InternalLogicError("invariant-subspace iteration did not stabilize");
}

AlgebraDescription dfa_discrete(const Superoperator& s, const Tolerances& tol) {
  const Index d = s.dim();
  if (d == 1) return algebra_structure(OperatorSubspace::full(1), tol);
  const OperatorSubspace dom = bimodule_domain(s, tol);
  const OperatorSubspace n = largest_invariant_subspace(s, dom, tol);
  AlgebraDescription a = algebra_structure(n, tol);
  if (!a.is_unital_star_algebra()) {
    throw PropertyViolation("decoherence-free algebra is not a unital *-algebra (product " +
                            std::to_string(a.product_residual) + ", star " +
                            std::to_string(a.star_residual) + ")");
  }
  return a;
}

PaResult is_peripherally_automorphic(const Superoperator& s, const OperatorSubspace& attr,
                                     const Tolerances& tol) {
  require_same_dim(s.dim(), attr.ambient_dim(), "is_peripherally_automorphic");
  PaResult r;
  r.closure_residual = closure_residuals(attr).first;
  r.multiplicativity_residual = multiplicativity_residual(s, attr);
  const bool a = r.closure_residual <= tol.residual;
  const bool b = r.multiplicativity_residual <= tol.residual;
  if (a != b) {
    throw NumericalFailure("peripheral automorphism criteria disagree (closure " +
                           std::to_string(r.closure_residual) + ", multiplicativity " +
                           std::to_string(r.multiplicativity_residual) + ")");
  }
  r.peripherally_automorphic = a;
  return r;
}

StationaryStates stationary_states(const Superoperator& s_dual, const Tolerances& tol,
                                   SpectrumKind kind) {
  const Index d = s_dual.dim();
  StationaryStates st;
  st.fixed = fixed_point_subspace(s_dual, tol, kind);
  const double tp = tol.peripheral;
  SpectralSplit split(s_dual.matrix(), [kind, tp](Complex l) {
    return kind == SpectrumKind::map ? std::abs(l - 1.0) <= tp : std::abs(l) <= tp;
  });
  const Vector v = split.apply_projector(vectorize(Operator::identity(d)) / static_cast<double>(d));
  Matrix sigma = Eigen::Map<const Matrix>(v.data(), d, d);
  sigma = (sigma + sigma.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const double tr = ev.sum();
  if (tr <= tol.residual) throw NumericalFailure("distinguished stationary state has zero trace");
  ev /= tr;
  st.sigma = Operator(es.eigenvectors() * ev.cast<Complex>().asDiagonal() *
                      es.eigenvectors().adjoint());
  st.min_eigenvalue = ev.minCoeff();
  return st;
}

FaithfulResult is_faithful(const Superoperator& s, const Tolerances& tol) {
  const StationaryStates st = stationary_states(s.adjoint(), tol);
  return {st.min_eigenvalue > tol.rank, st.min_eigenvalue, st.sigma};
}

TheoremVerdict check_theorem_faithful(const Superoperator& s, const Tolerances& tol) {
  const OperatorSubspace attr = attractor_subspace(s, tol);
  return verdict_faithful(s, attr, dfa_discrete(s, tol), is_faithful(s, tol), tol);
}

TheoremVerdict check_theorem_pa(const Superoperator& s, const Tolerances& tol) {
  const OperatorSubspace attr = attractor_subspace(s, tol);
  const OperatorSubspace fix = fixed_point_subspace(s, tol);
  return verdict_pa(attr, fix, dfa_discrete(s, tol), is_peripherally_automorphic(s, attr, tol),
                    tol);
}

HamanaResult hamana_check(const Superoperator& p, std::uint64_t seed, const Tolerances& tol) {
  const double scale = std::max(1.0, p.matrix().norm());
  if ((p.matrix() * p.matrix() - p.matrix()).norm() > tol.residual * scale) {
    throw InputError("hamana_check: map is not idempotent");
  }
  const Index d = p.dim();
  Rng rng(seed);
  HamanaResult r;
  for (int k = 0; k < 20; ++k) {
    const Operator x = random_operator(d, rng);
    const Operator y = random_operator(d, rng);
    const Operator px = p(x);
    const Operator py = p(y);
    const Operator both = p(px * py);
    r.left_defect = std::max(r.left_defect, (both - p(px * y)).norm());
    r.right_defect = std::max(r.right_defect, (both - p(x * py)).norm());
  }
  return r;
}

DiscreteAnalysis analyze_discrete(const Superoperator& s, const Tolerances& tol,
                                  std::uint64_t seed) {
  DiscreteAnalysis a;
  a.spectral = analyze_spectrum(s, tol);
  a.dfa = dfa_discrete(s, tol);
  a.pa = is_peripherally_automorphic(s, a.spectral.attr, tol);
  a.faithful = is_faithful(s, tol);

  a.verdicts.push_back(verdict_faithful(s, a.spectral.attr, a.dfa, a.faithful, tol));
  a.verdicts.push_back(verdict_pa(a.spectral.attr, a.spectral.fix, a.dfa, a.pa, tol));

  TheoremVerdict fpa;
  fpa.name = "faithful_implies_pa";
  fpa.hypothesis_holds = a.faithful.faithful;
  fpa.conclusion_holds = a.pa.peripherally_automorphic;
  fpa.consistent = !fpa.hypothesis_holds || fpa.conclusion_holds;
  fpa.residuals = {{"attr_closure_residual", a.pa.closure_residual}};
  a.verdicts.push_back(std::move(fpa));

  TheoremVerdict ham;
  ham.name = "hamana_peripheral_projection";
  const Matrix& p = a.spectral.p_peripheral.matrix();
  const double idem = (p * p - p).norm();
  ham.hypothesis_holds = idem <= tol.residual * std::max(1.0, p.norm());
  const HamanaResult h = ham.hypothesis_holds ? hamana_check(a.spectral.p_peripheral, seed, tol)
                                              : HamanaResult{};
  ham.conclusion_holds = h.left_defect <= tol.residual && h.right_defect <= tol.residual;
  ham.consistent = !ham.hypothesis_holds || ham.conclusion_holds;
  ham.residuals = {{"idempotency", idem},
                   {"left_defect", h.left_defect},
                   {"right_defect", h.right_defect}};
  a.verdicts.push_back(std::move(ham));

  TheoremVerdict fa;
  fa.name = "fix_in_attr";
  fa.hypothesis_holds = true;
  const double fr = containment_residual(a.spectral.attr, a.spectral.fix);
  fa.conclusion_holds = fr <= tol.residual;
  fa.consistent = fa.conclusion_holds;
  fa.residuals = {{"fix_in_attr_residual", fr}};
  a.verdicts.push_back(std::move(fa));
  return a;
}

}  // namespace qasym
