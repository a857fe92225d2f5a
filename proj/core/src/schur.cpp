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

#include "qasym/schur.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qasym/errors.hpp"

namespace qasym {

SchurForm complex_schur(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("complex_schur: matrix is not square");
  if (a.rows() == 1) return {a, Matrix::Identity(1, 1)};
  Eigen::ComplexSchur<Matrix> cs(a, true);
  if (cs.info() != Eigen::Success) {
    throw NumericalFailure("complex Schur decomposition did not converge");
  }
  SchurForm s{cs.matrixT(), cs.matrixU()};
  s.t.triangularView<Eigen::StrictlyLower>().setZero();
  return s;
}

void swap_adjacent(SchurForm& s, Index k) {
  const Index n = s.t.rows();
  if (k < 0 || k + 1 >= n) throw InputError("swap_adjacent: index out of range");
  const Complex a = s.t(k, k);
  const Complex b = s.t(k, k + 1);
  const Complex c = s.t(k + 1, k + 1);
  // First column: eigenvector of [[a, b], [0, c]] for c.
  const Complex v0 = b;
  const Complex v1 = c - a;
  const double r = std::hypot(std::abs(v0), std::abs(v1));
  if (r == 0.0) return;
  Eigen::Matrix2cd q;
  q << v0 / r, -std::conj(v1) / r, v1 / r, std::conj(v0) / r;
  s.t.middleRows(k, 2) = q.adjoint() * s.t.middleRows(k, 2);
  s.t.middleCols(k, 2) = s.t.middleCols(k, 2) * q;
  s.u.middleCols(k, 2) = s.u.middleCols(k, 2) * q;
  s.t(k + 1, k) = 0.0;
  s.t(k, k) = c;
  s.t(k + 1, k + 1) = a;
}

Index reorder_schur(SchurForm& s, const std::function<bool(Complex)>& select) {
  Index k = 0;
  for (Index i = 0; i < s.t.rows(); ++i) {
    if (!select(s.t(i, i))) continue;
    for (Index j = i - 1; j >= k; --j) swap_adjacent(s, j);
    ++k;
  }
  return k;
}

Matrix solve_triangular_sylvester(const Matrix& t11, const Matrix& t22, const Matrix& c) {
  const Index m = t11.rows();
  const Index p = t22.rows();
  if (c.rows() != m || c.cols() != p) throw DimensionMismatch("sylvester: right-hand side");
  double scale = 1.0;
  if (m > 0) scale = std::max(scale, t11.cwiseAbs().maxCoeff());
  if (p > 0) scale = std::max(scale, t22.cwiseAbs().maxCoeff());
  const double thr = 1e-13 * scale;
  Matrix y(m, p);
  for (Index j = 0; j < p; ++j) {
    Vector rhs = c.col(j);
    if (j > 0) rhs += y.leftCols(j) * t22.col(j).head(j);
    const Complex mu = t22(j, j);
    for (Index i = m - 1; i >= 0; --i) {
      Complex acc = rhs(i);
      for (Index l = i + 1; l < m; ++l) acc -= t11(i, l) * y(l, j);
      const Complex diag = t11(i, i) - mu;
      if (std::abs(diag) <= thr) {
        throw NumericalFailure("sylvester: eigenvalue collision between the split blocks");
      }
      y(i, j) = acc / diag;
    }
  }
  return y;
}

std::vector<std::vector<Index>> sparsity_components(const Matrix& a) {
  const Index n = a.rows();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      if (i == j || a(i, j) == Complex(0.0, 0.0)) continue;
      const Index ri = find(i);
      const Index rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::vector<std::vector<Index>> groups(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<Index>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

//----------------------------------------------------------------------------

SpectralSplit::SpectralSplit(const Matrix& a, const std::function<bool(Complex)>& select)
    : n_(a.rows()) {
  if (a.rows() != a.cols()) throw DimensionMismatch("spectral split: matrix is not square");
  if (!a.allFinite()) throw NumericalFailure("spectral split: non-finite entries");
  for (auto& idx : sparsity_components(a)) {
    const auto m = static_cast<Index>(idx.size());
    Matrix sub(m, m);
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) sub(i, j) = a(idx[i], idx[j]);
    }
    Block b;
    b.index = std::move(idx);
    b.schur = complex_schur(sub);
    b.lead = reorder_schur(b.schur, select);
    const Matrix& t = b.schur.t;
    b.y = solve_triangular_sylvester(t.topLeftCorner(b.lead, b.lead),
                                     t.bottomRightCorner(m - b.lead, m - b.lead),
                                     -t.topRightCorner(b.lead, m - b.lead));
    lead_ += b.lead;
    blocks_.push_back(std::move(b));
  }
}

std::vector<Complex> SpectralSplit::eigenvalues() const {
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (const auto& b : blocks_) {
    for (Index i = 0; i < b.schur.t.rows(); ++i) out.push_back(b.schur.t(i, i));
  }
  return out;
}

std::vector<Complex> SpectralSplit::leading_eigenvalues() const {
  std::vector<Complex> out;
  for (const auto& b : blocks_) {
    for (Index i = 0; i < b.lead; ++i) out.push_back(b.schur.t(i, i));
  }
  return out;
}

Matrix SpectralSplit::leading_basis() const {
  Matrix q = Matrix::Zero(n_, lead_);
  Index col = 0;
  for (const auto& b : blocks_) {
    for (Index c = 0; c < b.lead; ++c, ++col) {
      for (std::size_t r = 0; r < b.index.size(); ++r) {
        q(b.index[r], col) = b.schur.u(static_cast<Index>(r), c);
      }
    }
  }
  return q;
}

Matrix SpectralSplit::trailing_basis() const {
  Matrix q = Matrix::Zero(n_, n_ - lead_);
  Index col = 0;
  for (const auto& b : blocks_) {
    const Index m = b.schur.t.rows();
    const Index rest = m - b.lead;
    if (rest == 0) continue;
    Matrix w(m, rest);
    w.topRows(b.lead) = b.y;
    w.bottomRows(rest) = Matrix::Identity(rest, rest);
    w = b.schur.u * w;
    Eigen::HouseholderQR<Matrix> qr(w);
    const Matrix thin = qr.householderQ() * Matrix::Identity(m, rest);
    for (Index c = 0; c < rest; ++c, ++col) {
      for (Index r = 0; r < m; ++r) q(b.index[r], col) = thin(r, c);
    }
  }
  return q;
}

Matrix SpectralSplit::leading_restriction() const {
  Matrix r = Matrix::Zero(lead_, lead_);
  Index off = 0;
  for (const auto& b : blocks_) {
    r.block(off, off, b.lead, b.lead) = b.schur.t.topLeftCorner(b.lead, b.lead);
    off += b.lead;
  }
  return r;
}

Matrix SpectralSplit::projector() const {
  Matrix p = Matrix::Zero(n_, n_);
  for (const auto& b : blocks_) {
    if (b.lead == 0) continue;
    const Index m = b.schur.t.rows();
    const auto u1 = b.schur.u.leftCols(b.lead);
    const auto u2 = b.schur.u.rightCols(m - b.lead);
    const Matrix pb = u1 * (u1.adjoint() - b.y * u2.adjoint());
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < m; ++i) p(b.index[i], b.index[j]) = pb(i, j);
    }
  }
  return p;
}

Vector SpectralSplit::apply_projector(const Vector& v) const {
  if (v.size() != n_) throw DimensionMismatch("apply_projector: vector length");
  Vector out = Vector::Zero(n_);
  for (const auto& b : blocks_) {
    if (b.lead == 0) continue;
    const Index m = b.schur.t.rows();
    Vector vb(m);
    for (Index i = 0; i < m; ++i) vb(i) = v(b.index[i]);
    const Vector w = b.schur.u.adjoint() * vb;
    const Vector z = w.head(b.lead) - b.y * w.tail(m - b.lead);
    const Vector pb = b.schur.u.leftCols(b.lead) * z;
    for (Index i = 0; i < m; ++i) out(b.index[i]) = pb(i);
  }
  return out;
}

Index SpectralSplit::leading_defect(double cluster_tol, double null_tol) const {
  Index worst = 0;
  for (const auto& b : blocks_) {
    if (b.lead == 0) continue;
    const Matrix t11 = b.schur.t.topLeftCorner(b.lead, b.lead);
    const double scale = std::max(1.0, t11.cwiseAbs().maxCoeff());
    std::vector<int> label(static_cast<std::size_t>(b.lead), -1);
    int clusters = 0;
    for (Index i = 0; i < b.lead; ++i) {
      if (label[i] >= 0) continue;
      label[i] = clusters;
      // Single-linkage growth of the cluster containing i.
      bool grew = true;
      while (grew) {
        grew = false;
        for (Index j = 0; j < b.lead; ++j) {
          if (label[j] >= 0) continue;
          for (Index k = 0; k < b.lead; ++k) {
            if (label[k] == clusters &&
                std::abs(t11(j, j) - t11(k, k)) <= cluster_tol * scale) {
              label[j] = clusters;
              grew = true;
              break;
            }
          }
        }
      }
      ++clusters;
    }
    for (int c = 0; c < clusters; ++c) {
      Complex mu = 0.0;
      Index mult = 0;
      for (Index i = 0; i < b.lead; ++i) {
        if (label[i] == c) {
          mu += t11(i, i);
          ++mult;
        }
      }
      mu /= static_cast<double>(mult);
      Matrix shifted = t11 - mu * Matrix::Identity(b.lead, b.lead);
      Eigen::JacobiSVD<Matrix> svd(shifted);
      const auto& sv = svd.singularValues();
      Index nullity = 0;
      for (Index i = 0; i < sv.size(); ++i) {
        if (sv(i) <= null_tol * scale) ++nullity;
      }
      worst = std::max(worst, mult - nullity);
    }
  }
  return worst;
}

}  // namespace qasym
