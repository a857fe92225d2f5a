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

#include "qasym/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/QR>

#include "qasym/errors.hpp"
#include "qasym/random.hpp"

namespace qasym {

bool is_peripheral(Complex lambda, SpectrumKind kind, double tol_peripheral) {
  if (kind == SpectrumKind::map) return std::abs(lambda) >= 1.0 - tol_peripheral;
  return lambda.real() >= -tol_peripheral;
}

std::vector<Complex> full_spectrum(const Superoperator& s) {
  SpectralSplit split(s.matrix(), [](Complex) { return false; });
  auto eigs = split.eigenvalues();
  std::stable_sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
  return eigs;
}

double conjugation_pairing_residual(std::span<const Complex> eigs) {
  std::vector<bool> used(eigs.size(), false);
  double worst = 0.0;
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    std::size_t best = eigs.size();
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < eigs.size(); ++j) {
      if (used[j]) continue;
      const double dj = std::abs(eigs[i] - std::conj(eigs[j]));
      if (dj < dist) {
        dist = dj;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, dist);
  }
  return worst;
}

SpectrumClassification classify_and_gap(std::span<const Complex> eigs, double tol_peripheral,
                                        SpectrumKind kind) {
  SpectrumClassification c;
  for (const auto& l : eigs) {
    (is_peripheral(l, kind, tol_peripheral) ? c.peripheral : c.bulk).push_back(l);
  }
  if (kind == SpectrumKind::map) {
    double m = 0.0;
    for (const auto& l : c.bulk) m = std::max(m, std::abs(l));
    c.gap = c.bulk.empty() ? 1.0 : 1.0 - m;
  } else {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& l : c.bulk) m = std::max(m, l.real());
    c.gap = c.bulk.empty() ? std::numeric_limits<double>::infinity() : -m;
  }
  return c;
}

SpectralSplit peripheral_split(const Superoperator& s, const Tolerances& tol, SpectrumKind kind) {
  const double tp = tol.peripheral;
  SpectralSplit split(s.matrix(), [kind, tp](Complex l) { return is_peripheral(l, kind, tp); });
  if (split.leading_defect() > 0) {
    throw NumericalFailure("peripheral spectrum is not semisimple");
  }
  return split;
}

OperatorSubspace attractor_subspace(const Superoperator& s, const Tolerances& tol) {
  const auto split = peripheral_split(s, tol);
  return OperatorSubspace::from_orthonormal_columns(s.dim(), split.leading_basis());
}

OperatorSubspace fixed_point_subspace(const Superoperator& s, const Tolerances& tol,
                                      SpectrumKind kind) {
  const Matrix& a = s.matrix();
  const Index n = a.rows();
  std::vector<Vector> cols;
  for (const auto& idx : sparsity_components(a)) {
    const auto m = static_cast<Index>(idx.size());
    Matrix sub(m, m);
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) sub(i, j) = a(idx[i], idx[j]);
    }
    if (kind == SpectrumKind::map) sub -= Matrix::Identity(m, m);
    const Matrix null = linalg::nullspace(sub, tol.rank, 1.0);
    for (Index c = 0; c < null.cols(); ++c) {
      Vector v = Vector::Zero(n);
      for (Index i = 0; i < m; ++i) v(idx[i]) = null(i, c);
      cols.push_back(std::move(v));
    }
  }
  Matrix q(n, static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) q.col(static_cast<Index>(c)) = cols[c];
  return OperatorSubspace::from_orthonormal_columns(s.dim(), std::move(q));
}

Superoperator peripheral_projection(const Superoperator& s, const Tolerances& tol) {
  return Superoperator(peripheral_split(s, tol).projector());
}

OperatorSubspace transient_subspace(const Superoperator& s, const Tolerances& tol) {
  const auto split = peripheral_split(s, tol);
  return OperatorSubspace::from_orthonormal_columns(s.dim(), split.trailing_basis());
}

Matrix asymptotic_map(const Superoperator& s, const OperatorSubspace& attr) {
  require_same_dim(s.dim(), attr.ambient_dim(), "asymptotic_map");
  const Matrix& q = attr.columns();
  return q.adjoint() * (s.matrix() * q);
}

SpectralAnalysis analyze_spectrum(const Superoperator& s, const Tolerances& tol) {
  tol.validate();
  SpectralAnalysis a;
  const auto split = peripheral_split(s, tol);
  a.eigenvalues = split.eigenvalues();
  std::stable_sort(a.eigenvalues.begin(), a.eigenvalues.end(), [](Complex x, Complex y) {
    const double mx = std::abs(x);
    const double my = std::abs(y);
    if (mx != my) return mx > my;
    return std::arg(x) < std::arg(y);
  });
  a.classes = classify_and_gap(a.eigenvalues, tol.peripheral);
  a.attr = OperatorSubspace::from_orthonormal_columns(s.dim(), split.leading_basis());
  a.fix = fixed_point_subspace(s, tol);
  a.transient = OperatorSubspace::from_orthonormal_columns(s.dim(), split.trailing_basis());
  a.p_peripheral = Superoperator(split.projector());
  a.asymptotic = asymptotic_map(s, a.attr);
  return a;
}

JdlgReport jdlg_verify(const Superoperator& s, const SpectralAnalysis& analysis,
                       const Tolerances& tol, std::uint64_t seed) {
  const Index d = s.dim();
  const Index d2 = d * d;
  JdlgReport r;
  r.attr_dim = analysis.attr.size();
  r.transient_dim = analysis.transient.size();
  r.dims_sum = r.attr_dim + r.transient_dim == d2;
  r.intersection_trivial =
      subspace_intersect(analysis.attr, analysis.transient, tol.residual).empty();

  Matrix joint(d2, r.attr_dim + r.transient_dim);
  joint << analysis.attr.columns(), analysis.transient.columns();
  Eigen::ColPivHouseholderQR<Matrix> qr(joint);
  const Matrix& p = analysis.p_peripheral.matrix();

  Rng rng(seed);
  double worst = 0.0;
  std::vector<Vector> transients;
  for (int trial = 0; trial < 5; ++trial) {
    const Vector x = vectorize(random_operator(d, rng));
    const Vector c = qr.solve(x);
    const Vector xa = analysis.attr.columns() * c.head(r.attr_dim);
    const Vector xt = analysis.transient.columns() * c.tail(r.transient_dim);
    worst = std::max(worst, (xa + xt - x).norm());
    worst = std::max(worst, (xa - p * x).norm());
    transients.push_back(x - p * x);
  }
  r.decomposition_residual = worst;

  if (r.transient_dim > 0) {
    const double gap = std::max(analysis.classes.gap, 1e-12);
    r.horizon = std::min<Index>(static_cast<Index>(std::ceil(20.0 / gap)), 5000);
    const double base = 1.0 - gap + 0.05;
    for (const auto& x0 : transients) {
      const double n0 = x0.norm();
      if (n0 == 0.0) continue;
      Vector y = x0;
      double bound = 1.0;
      double rate = 0.0;
      for (Index n = 1; n <= r.horizon; ++n) {
        y = s.matrix() * y;
        bound *= base;
        const double ny = y.norm() / n0;
        r.kappa = std::max(r.kappa, ny / bound);
        // decayed to rounding level
        if (ny <= 64.0 * std::numeric_limits<double>::epsilon()) {
          rate = 0.0;
          break;
        }
        rate = std::pow(ny, 1.0 / static_cast<double>(n));
      }
      r.decay_ratio = std::max(r.decay_ratio, rate);
    }
  }
  r.passed = r.dims_sum && r.intersection_trivial && r.decomposition_residual <= tol.residual &&
             r.kappa <= 1e6;
  return r;
}

}  // namespace qasym
