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

#include "qasym/pukanszky.hpp"

#include <algorithm>
#include <cmath>

#include "qasym/errors.hpp"
#include "qasym/random.hpp"
#include "qasym/spectral.hpp"

namespace qasym::puk {

BinaryWord::BinaryWord(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int b : bits_) {
    if (b != 0 && b != 1) throw InputError("binary word entries must be 0 or 1");
  }
}

BinaryWord BinaryWord::from_index(int n, Index idx) {
  if (n < 0 || idx < 0 || idx >= (Index{1} << n)) throw InputError("binary word index out of range");
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) bits[static_cast<std::size_t>(k - 1)] = (idx >> (n - k)) & 1;
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::unit(int n, int k) {
  if (k < 1 || k > n) throw InputError("unit word index out of range");
  auto w = zero(n);
  w.bits_[static_cast<std::size_t>(k - 1)] = 1;
  return w;
}

Index BinaryWord::index() const {
  Index idx = 0;
  for (int b : bits_) idx = (idx << 1) | b;
  return idx;
}

int BinaryWord::ones() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

BinaryWord operator^(const BinaryWord& a, const BinaryWord& b) {
  require_same_dim(a.size(), b.size(), "binary word xor");
  std::vector<int> bits(a.bits_.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a.bits_[i] ^ b.bits_[i];
  return BinaryWord(std::move(bits));
}

TruncationConfig TruncationConfig::geometric(int n, double lambda, double ratio) {
  TruncationConfig c;
  c.n = n;
  c.lambda = lambda;
  for (int k = 1; k <= n; ++k) {
    c.m_weights.push_back(std::pow(ratio, k));
    c.n_weights.push_back(std::pow(ratio, k));
  }
  return c;
}

void TruncationConfig::validate() const {
  if (n < 1 || n > 4) throw InputError("truncation n must lie in 1..4");
  if (!(lambda > 0.0) || !(lambda <= 0.5)) throw InputError("lambda must lie in (0, 1/2]");
  if (m_weights.size() != static_cast<std::size_t>(n) ||
      n_weights.size() != static_cast<std::size_t>(n)) {
    throw InputError("need n weights m_k and n weights n_k");
  }
  for (double w : m_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw InputError("weights must be positive");
  }
  for (double w : n_weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw InputError("weights must be positive");
  }
}

Index basis_index(const BinaryWord& x, const BinaryWord& xo) {
  require_same_dim(x.size(), xo.size(), "basis_index");
  return (x.index() << x.size()) + xo.index();
}

double mu_weight(const BinaryWord& x, double lambda) {
  if (!(lambda > 0.0) || !(lambda <= 1.0)) throw InputError("mu_weight: lambda must lie in (0, 1]");
  const int ones = x.ones();
  return std::pow(lambda, x.size() - ones) * std::pow(1.0 - lambda, ones);
}

double rn_factor(const BinaryWord& x, const BinaryWord& yo, double lambda) {
  if (!(lambda > 0.0) || !(lambda < 1.0)) throw InputError("rn_factor: lambda must lie in (0, 1)");
  return mu_weight(x ^ yo, lambda) / mu_weight(x, lambda);
}

Operator build_translation(const BinaryWord& yo, const TruncationConfig& c, Basis basis) {
  c.validate();
  require_same_dim(c.n, yo.size(), "build_translation");
  const Index words = Index{1} << c.n;
  Matrix v = Matrix::Zero(c.dim(), c.dim());
  for (Index xi = 0; xi < words; ++xi) {
    const auto x = BinaryWord::from_index(c.n, xi);
    const double w = basis == Basis::delta ? std::sqrt(rn_factor(x, yo, c.lambda)) : 1.0;
    for (Index oi = 0; oi < words; ++oi) {
      const auto xo = BinaryWord::from_index(c.n, oi);
      v(basis_index(x, xo), basis_index(x ^ yo, xo ^ yo)) = w;
    }
  }
  return Operator(std::move(v));
}

Operator build_multiplication(const std::function<double(const BinaryWord&)>& phi,
                              const TruncationConfig& c) {
  c.validate();
  const Index words = Index{1} << c.n;
  std::vector<Complex> diag(static_cast<std::size_t>(c.dim()));
  for (Index xi = 0; xi < words; ++xi) {
    const double value = phi(BinaryWord::from_index(c.n, xi));
    for (Index oi = 0; oi < words; ++oi) diag[static_cast<std::size_t>(xi * words + oi)] = value;
  }
  return Operator::diagonal(diag);
}

Operator psi_operator(int k, const TruncationConfig& c) {
  if (k < 1 || k > c.n) throw InputError("psi_operator: k out of range");
  return build_multiplication([k](const BinaryWord& x) { return x.bit(k) == 0 ? 1.0 : -1.0; }, c);
}

Operator cylinder_indicator(std::span<const int> y, const TruncationConfig& c) {
  c.validate();
  if (y.size() > static_cast<std::size_t>(c.n)) throw InputError("cylinder longer than n");
  const Operator id = Operator::identity(c.dim());
  Operator out = id;
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (y[k] != 0 && y[k] != 1) throw InputError("cylinder entries must be 0 or 1");
    const double s = 1.0 - 2.0 * y[k];
    out = out * (0.5 * (id + s * psi_operator(static_cast<int>(k) + 1, c)));
  }
  return out;
}

double weighted_unitarity_residual(const Operator& v_delta, const TruncationConfig& c) {
  c.validate();
  const Index words = Index{1} << c.n;
  Eigen::VectorXcd w(c.dim());
  for (Index xi = 0; xi < words; ++xi) {
    const double m = mu_weight(BinaryWord::from_index(c.n, xi), c.lambda);
    for (Index oi = 0; oi < words; ++oi) w(xi * words + oi) = m;
  }
  const Matrix& v = v_delta.matrix();
  const Matrix gram = w.asDiagonal();
  return (v.adjoint() * gram * v - gram).norm();
}

PukOperators build_operators(const TruncationConfig& c) {
  c.validate();
  PukOperators p;
  for (int k = 1; k <= c.n; ++k) {
    p.m.push_back(build_translation(BinaryWord::unit(c.n, k), c));
    p.n.push_back(psi_operator(k, c));
  }
  p.generator.hamiltonian = Operator::zero(c.dim());
  for (int k = 0; k < c.n; ++k) {
    p.generator.jumps.push_back(std::sqrt(c.m_weights[static_cast<std::size_t>(k)]) * p.m[static_cast<std::size_t>(k)]);
  }
  for (int k = 0; k < c.n; ++k) {
    p.generator.jumps.push_back(std::sqrt(c.n_weights[static_cast<std::size_t>(k)]) * p.n[static_cast<std::size_t>(k)]);
  }
  return p;
}

GKLSGenerator build_generator_lambda(const TruncationConfig& c) {
  return build_operators(c).generator;
}

Vector distinguished_vector(const TruncationConfig& c) {
  c.validate();
  const Index words = Index{1} << c.n;
  Vector f = Vector::Zero(c.dim());
  for (Index xi = 0; xi < words; ++xi) {
    f(xi * words) = std::sqrt(mu_weight(BinaryWord::from_index(c.n, xi), c.lambda));
  }
  return f;
}

namespace {

// The 4^n words V_y L_{psi_S}; they span the algebra generated by {M_k, N_k}.
std::vector<Operator> algebra_words(const TruncationConfig& c) {
  const Index words = Index{1} << c.n;
  std::vector<Operator> psi;
  for (int k = 1; k <= c.n; ++k) psi.push_back(psi_operator(k, c));
  std::vector<Operator> out;
  for (Index yi = 0; yi < words; ++yi) {
    const Operator v = build_translation(BinaryWord::from_index(c.n, yi), c);
    for (Index si = 0; si < words; ++si) {
      Operator w = v;
      const auto s = BinaryWord::from_index(c.n, si);
      for (int k = 1; k <= c.n; ++k) {
        if (s.bit(k)) w = w * psi[static_cast<std::size_t>(k - 1)];
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

Prop5Report verify_prop5(const TruncationConfig& c, const Tolerances& tol) {
  c.validate();
  if (c.n > 3) {
    throw NumericalFailure("verify_prop5: n = 4 needs a 65536 x 65536 superoperator");
  }
  Prop5Report r;
  r.n = c.n;
  r.lambda = c.lambda;
  r.dim = c.dim();
  const Index d = c.dim();
  const PukOperators ops = build_operators(c);
  const Operator id = Operator::identity(d);

  std::vector<Operator> gens;
  for (int k = 0; k < c.n; ++k) {
    const auto& m = ops.m[static_cast<std::size_t>(k)];
    const auto& nk = ops.n[static_cast<std::size_t>(k)];
    gens.push_back(m);
    gens.push_back(nk);
    for (const Operator* op : {&m, &nk}) {
      r.selfadjoint_unitary_residual = std::max(
          {r.selfadjoint_unitary_residual, (*op - op->adjoint()).norm(), (*op * *op - id).norm()});
    }
  }
  for (int k = 0; k < c.n; ++k) {
    for (int j = 0; j < c.n; ++j) {
      const auto& mk = ops.m[static_cast<std::size_t>(k)];
      const auto& mj = ops.m[static_cast<std::size_t>(j)];
      const auto& nk = ops.n[static_cast<std::size_t>(k)];
      const auto& nj = ops.n[static_cast<std::size_t>(j)];
      const Operator mn = k == j ? mk * nj + nj * mk : commutator(mk, nj);
      r.relation_residual = std::max({r.relation_residual, commutator(mk, mj).norm(),
                                      commutator(nk, nj).norm(), mn.norm()});
    }
  }

  const OperatorSubspace comm = commutant(gens, tol);
  const OperatorSubspace m_alg = commutant(comm, tol);
  r.dim_commutant = comm.size();
  r.dim_m = m_alg.size();
  r.duality_holds = r.dim_m * r.dim_commutant == d * d;
  const AlgebraDescription m_desc = algebra_structure(m_alg, tol);
  r.m_center_dim = m_desc.center.size();
  r.m_is_factor = m_desc.is_factor;

  const Index words = Index{1} << c.n;
  for (Index yi = 0; yi < words; ++yi) {
    const Operator v = build_translation(BinaryWord::from_index(c.n, yi), c);
    r.translation_residual = std::max(r.translation_residual, m_alg.relative_residual(v));
  }
  for (int len = 0; len <= c.n; ++len) {
    for (Index yi = 0; yi < (Index{1} << len); ++yi) {
      const auto y = BinaryWord::from_index(len, yi);
      const Operator ind = cylinder_indicator(y.bits(), c);
      r.cylinder_residual = std::max(r.cylinder_residual, m_alg.relative_residual(ind));
    }
  }

  r.markov = dfa_markov(ops.generator, tol);
  const OperatorSubspace& n_alg = r.markov.algebra.subspace;
  r.dim_n_alg = n_alg.size();
  r.n_alg_residual = mutual_containment_residual(n_alg, comm);

  const Superoperator l = gkls_superop(ops.generator);
  r.generator_selfadjoint_residual = (l.matrix() - l.matrix().adjoint()).norm();
  const auto split = peripheral_split(l, tol, SpectrumKind::generator);
  double max_re = -1e300;
  for (const auto& e : split.eigenvalues()) max_re = std::max(max_re, e.real());
  r.max_generator_real_eigenvalue = max_re;
  const OperatorSubspace attr =
      OperatorSubspace::from_orthonormal_columns(d, split.leading_basis());
  r.attr_dim = attr.size();
  const SemigroupFaithful f = semigroup_faithful(ops.generator, attr, n_alg, tol);
  r.faithful = f.faithful;
  r.sigma_min_eigenvalue = f.min_eigenvalue;
  r.attr_n_residual = f.verdict.residual("attr_n_mutual_residual");
  r.verdicts.push_back(f.verdict);

  auto check = [&r](bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
  };
  check(r.dim_m == d, "dim M != 4^n");
  check(r.m_is_factor, "M has a nontrivial center");
  check(r.duality_holds, "dim M * dim M' != d^2");
  check(r.dim_n_alg == r.dim_commutant && r.n_alg_residual <= 1e-9,
        "decoherence-free algebra differs from the commutant of the jumps");
  check(r.translation_residual <= tol.residual, "a translation V_y lies outside M");
  check(r.cylinder_residual <= tol.residual, "a cylinder indicator lies outside M");
  check(r.selfadjoint_unitary_residual <= 1e-10, "M_k or N_k is not a self-adjoint unitary");
  check(r.relation_residual <= 1e-10, "commutation relations of M_k, N_k fail");
  check(r.max_generator_real_eigenvalue <= tol.residual, "generator spectrum leaves (-inf, 0]");
  check(r.faithful, "semigroup is not faithful");
  check(r.attr_dim == r.dim_n_alg && r.attr_n_residual <= tol.residual, "Attr != N");
  r.passed = r.failures.empty();

  TheoremVerdict v;
  v.name = "finite_factor_shadow";
  v.hypothesis_holds = true;
  v.conclusion_holds = r.passed;
  v.consistent = r.passed;
  v.residuals = {{"dim_m", static_cast<double>(r.dim_m)},
                 {"m_center_dim", static_cast<double>(r.m_center_dim)},
                 {"n_alg_residual", r.n_alg_residual},
                 {"translation_residual", r.translation_residual},
                 {"cylinder_residual", r.cylinder_residual},
                 {"selfadjoint_unitary_residual", r.selfadjoint_unitary_residual}};
  v.note = "finite truncation: every finite factor is type I; type II1 versus III is probed by "
           "the tracial check only";
  r.verdicts.push_back(std::move(v));
  return r;
}

TracialReport tracial_check(const TruncationConfig& c, std::uint64_t seed) {
  c.validate();
  const Index d = c.dim();
  const PukOperators ops = build_operators(c);
  const Vector f0 = distinguished_vector(c);

  std::vector<Matrix> elems;
  for (int k = 0; k < c.n; ++k) {
    const auto& m = ops.m[static_cast<std::size_t>(k)].matrix();
    const auto& nk = ops.n[static_cast<std::size_t>(k)].matrix();
    elems.push_back(m);
    elems.push_back(nk);
    elems.push_back(m * nk);
  }
  const auto words = algebra_words(c);
  Rng rng(seed);
  for (int i = 0; i < 20; ++i) {
    Matrix a = Matrix::Zero(d, d);
    for (const auto& w : words) a += rng.complex_normal() * w.matrix();
    a *= std::sqrt(static_cast<double>(d)) / a.norm();
    elems.push_back(std::move(a));
  }

  TracialReport r;
  // phi(AB) = <A^* F0, B F0>.
  std::vector<Vector> left;
  std::vector<Vector> right;
  for (const auto& a : elems) {
    left.push_back(a.adjoint() * f0);
    right.push_back(a * f0);
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Complex ab = left[i].dot(right[j]);
      const Complex ba = left[j].dot(right[i]);
      r.residual = std::max(r.residual, std::abs(ab - ba));
    }
  }
  r.phi_n1 = f0.dot(ops.n.front().matrix() * f0).real();
  r.tracial = r.residual <= 1e-10;

  TheoremVerdict& v = r.verdict;
  v.name = "tracial_dichotomy";
  v.hypothesis_holds = std::abs(c.lambda - 0.5) <= 1e-12;
  v.conclusion_holds = r.tracial;
  v.consistent = v.hypothesis_holds == v.conclusion_holds;
  v.residuals = {{"state_commutator_residual", r.residual}, {"phi_n1", r.phi_n1}};
  v.note = "vector state of F0 on the truncated algebra";
  return r;
}

}  // namespace qasym::puk
