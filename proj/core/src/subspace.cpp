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

#include "qasym/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qasym/errors.hpp"

namespace qasym {

OperatorSubspace::OperatorSubspace(Index d) : d_(d), q_(d * d, 0) {}

OperatorSubspace OperatorSubspace::from_orthonormal_columns(Index d, Matrix columns) {
  if (columns.rows() != d * d) {
    throw DimensionMismatch("subspace columns must have length d^2");
  }
  OperatorSubspace s(d);
  s.q_ = std::move(columns);
  if (s.orthonormality_defect() > 1e-10) {
    throw InternalLogicError("subspace basis is not orthonormal (defect " +
                             std::to_string(s.orthonormality_defect()) + ")");
  }
  return s;
}

OperatorSubspace OperatorSubspace::full(Index d) {
  OperatorSubspace s(d);
  s.q_ = Matrix::Identity(d * d, d * d);
  return s;
}

Operator OperatorSubspace::element(Index i) const {
  return Operator(Eigen::Map<const Matrix>(q_.col(i).data(), d_, d_));
}

std::vector<Operator> OperatorSubspace::basis() const {
  std::vector<Operator> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Index i = 0; i < size(); ++i) out.push_back(element(i));
  return out;
}

Vector OperatorSubspace::project(const Vector& v) const {
  if (empty()) return Vector::Zero(v.size());
  return q_ * (q_.adjoint() * v);
}

Operator OperatorSubspace::project(const Operator& x) const {
  require_same_dim(d_, x.dim(), "subspace projection");
  return devectorize(project(vectorize(x)));
}

double OperatorSubspace::relative_residual(const Operator& x) const {
  require_same_dim(d_, x.dim(), "subspace residual");
  const Vector v = vectorize(x);
  const double n = v.norm();
  if (n == 0.0) return 0.0;
  return (v - project(v)).norm() / n;
}

double OperatorSubspace::orthonormality_defect() const {
  if (empty()) return 0.0;
  const Matrix g = q_.adjoint() * q_;
  return (g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

//----------------------------------------------------------------------------

OperatorSubspace orthonormalize_columns(Index d, const Matrix& columns, double tol_rank) {
  if (columns.rows() != d * d) throw DimensionMismatch("orthonormalize: column length != d^2");
  double max_norm = 0.0;
  for (Index j = 0; j < columns.cols(); ++j) max_norm = std::max(max_norm, columns.col(j).norm());
  Matrix q(d * d, columns.cols());
  Index r = 0;
  if (max_norm > 0.0) {
    for (Index j = 0; j < columns.cols(); ++j) {
      Vector w = columns.col(j);
      for (int pass = 0; pass < 2; ++pass) {
        for (Index k = 0; k < r; ++k) w -= q.col(k) * q.col(k).dot(w);
      }
      const double n = w.norm();
      if (n <= tol_rank * max_norm) continue;
      q.col(r++) = w / n;
    }
  }
  return OperatorSubspace::from_orthonormal_columns(d, q.leftCols(r));
}

OperatorSubspace orthonormalize(std::span<const Operator> ops, double tol_rank) {
  if (ops.empty()) return OperatorSubspace(0);
  const Index d = ops.front().dim();
  Matrix cols(d * d, static_cast<Index>(ops.size()));
  for (std::size_t j = 0; j < ops.size(); ++j) {
    require_same_dim(d, ops[j].dim(), "orthonormalize");
    cols.col(static_cast<Index>(j)) = vectorize(ops[j]);
  }
  return orthonormalize_columns(d, cols, tol_rank);
}

double containment_residual(const OperatorSubspace& a, const OperatorSubspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace containment");
  double worst = 0.0;
  for (Index j = 0; j < b.size(); ++j) {
    const Vector v = b.columns().col(j);
    worst = std::max(worst, (v - a.project(v)).norm());
  }
  return worst;
}

bool subspace_contains(const OperatorSubspace& a, const OperatorSubspace& b, double tol) {
  return containment_residual(a, b) <= tol;
}

double mutual_containment_residual(const OperatorSubspace& a, const OperatorSubspace& b) {
  return std::max(containment_residual(a, b), containment_residual(b, a));
}

bool subspaces_equal(const OperatorSubspace& a, const OperatorSubspace& b, double tol) {
  return a.size() == b.size() && mutual_containment_residual(a, b) <= tol;
}

OperatorSubspace subspace_intersect(const OperatorSubspace& a, const OperatorSubspace& b,
                                    double tol) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  const Index d = a.ambient_dim();
  if (a.empty() || b.empty()) return OperatorSubspace(d);
  // x = Q_A c lies in B iff (I - Q_B Q_B^*) Q_A c = 0.
  const Matrix& qa = a.columns();
  const Matrix& qb = b.columns();
  const Matrix k = qa - qb * (qb.adjoint() * qa);
  Eigen::BDCSVD<Matrix> svd(k, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  const Matrix null = svd.matrixV().rightCols(qa.cols() - rank);
  return orthonormalize_columns(d, qa * null, 1e-12);
}

OperatorSubspace subspace_sum(const OperatorSubspace& a, const OperatorSubspace& b,
                              double tol_rank) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace sum");
  Matrix cols(a.columns().rows(), a.size() + b.size());
  cols << a.columns(), b.columns();
  return orthonormalize_columns(a.ambient_dim(), cols, tol_rank);
}

//----------------------------------------------------------------------------

namespace linalg {

Matrix nullspace(const Matrix& a, double tol, double ref_scale) {
  const Index n = a.cols();
  if (n == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Matrix m;
  if (a.rows() > n) {
    Eigen::HouseholderQR<Matrix> qr(a);
    m = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    m = a;
  }
  Matrix v;
  Eigen::VectorXd sv;
  if (n <= 32) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    v = svd.matrixV();
    sv = svd.singularValues();
  } else {
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
    v = svd.matrixV();
    sv = svd.singularValues();
  }
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = tol * std::max(smax, ref_scale);
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > thr) ++rank;
  }
  return v.rightCols(n - rank);
}

StackedNullspace::StackedNullspace(Index cols) : n_(cols), r_(0, cols) {}

void StackedNullspace::add(const Matrix& block) {
  if (block.cols() != n_) throw DimensionMismatch("stacked nullspace: column count");
  Matrix stacked(r_.rows() + block.rows(), n_);
  stacked << r_, block;
  if (stacked.rows() > n_) {
    Eigen::HouseholderQR<Matrix> qr(stacked);
    r_ = qr.matrixQR().topRows(n_).triangularView<Eigen::Upper>();
  } else {
    r_ = std::move(stacked);
  }
}

Matrix StackedNullspace::solve(double tol, double ref_scale) const {
  return nullspace(r_, tol, ref_scale);
}

Matrix commutator_columns(const Matrix& g, const Matrix& q) {
  const Index d = g.rows();
  Matrix out(d * d, q.cols());
  for (Index i = 0; i < q.cols(); ++i) {
    Eigen::Map<const Matrix> b(q.col(i).data(), d, d);
    Matrix c = g * b - b * g;
    out.col(i) = Eigen::Map<const Vector>(c.data(), d * d);
  }
  return out;
}

}  // namespace linalg

//----------------------------------------------------------------------------

namespace {

// Fixed-seed coefficients: the reduction below is valid for any real coefficients, the
// seed only makes the run reproducible.
std::vector<double> combination_coefficients(std::size_t n) {
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
  std::vector<double> c(n);
  for (auto& v : c) v = 0.5 + static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return c;
}

// Orthonormal basis of the commutant of a hermitian h, read off its eigenspaces. Near
// degenerate eigenvalues are merged, which can only enlarge the returned space.
Matrix hermitian_commutant_basis(const Matrix& h) {
  const Index d = h.rows();
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const Matrix& w = es.eigenvectors();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<std::pair<Index, Index>> clusters;
  Index start = 0;
  for (Index i = 1; i <= d; ++i) {
    if (i == d || ev(i) - ev(i - 1) > 1e-7 * scale) {
      clusters.emplace_back(start, i);
      start = i;
    }
  }
  Index r = 0;
  for (auto [s, e] : clusters) r += (e - s) * (e - s);
  Matrix q(d * d, r);
  Index col = 0;
  for (auto [s, e] : clusters) {
    for (Index b = s; b < e; ++b) {
      for (Index a = s; a < e; ++a) {
        // vec(w_a w_b^*) = conj(w_b) (x) w_a
        q.col(col++) = kron(w.col(b).conjugate(), w.col(a));
      }
    }
  }
  return q;
}

bool span_is_star_closed(std::span<const Operator> gens, const Tolerances& tol) {
  const OperatorSubspace span = orthonormalize(gens, tol.rank);
  for (const auto& g : gens) {
    if (g.norm() == 0.0) continue;
    if (span.relative_residual(g.adjoint()) > tol.residual) return false;
  }
  return true;
}

}  // namespace

OperatorSubspace commutant(std::span<const Operator> gens, const Tolerances& tol) {
  if (gens.empty()) throw InputError("commutant: empty generator list");
  const Index d = gens.front().dim();
  for (const auto& g : gens) require_same_dim(d, g.dim(), "commutant");

  Matrix q;
  if (span_is_star_closed(gens, tol)) {
    // The commutant of a *-closed set lies inside the commutant of any hermitian
    // element of its span.
    const auto coeff = combination_coefficients(2 * gens.size());
    Matrix h = Matrix::Zero(d, d);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const double n = gens[j].norm();
      if (n == 0.0) continue;
      const Matrix& g = gens[j].matrix();
      h += coeff[2 * j] * (g + g.adjoint()) / (2.0 * n);
      h += coeff[2 * j + 1] * (g - g.adjoint()) / (Complex(0.0, 2.0) * n);
    }
    q = hermitian_commutant_basis(h);
  } else {
    q = Matrix::Identity(d * d, d * d);
  }

  for (const auto& g : gens) {
    if (q.cols() == 0) break;
    const double n = g.norm();
    if (n == 0.0) continue;
    const Matrix a = linalg::commutator_columns(g.matrix(), q);
    const Matrix null = linalg::nullspace(a, tol.rank, n);
    q = q * null;
  }
  return orthonormalize_columns(d, q, 1e-12);
}

OperatorSubspace commutant(const OperatorSubspace& s, const Tolerances& tol) {
  if (s.empty()) return OperatorSubspace::full(s.ambient_dim());
  const auto b = s.basis();
  return commutant(std::span<const Operator>(b), tol);
}

OperatorSubspace generated_algebra(std::span<const Operator> gens, const Tolerances& tol) {
  if (gens.empty()) throw InputError("generated_algebra: empty generator list");
  const Index d = gens.front().dim();
  std::vector<Operator> seed{Operator::identity(d)};
  seed.insert(seed.end(), gens.begin(), gens.end());
  OperatorSubspace alg = orthonormalize(seed, tol.rank);
  for (Index iter = 0; iter <= d * d; ++iter) {
    const auto b = alg.basis();
    const Index r = alg.size();
    Matrix cols(d * d, r + r * r);
    cols.leftCols(r) = alg.columns();
    Index c = r;
    for (const auto& x : b) {
      for (const auto& y : b) cols.col(c++) = vectorize(x * y);
    }
    OperatorSubspace next = orthonormalize_columns(d, cols, tol.rank);
    if (next.size() == alg.size()) return alg;
    alg = std::move(next);
  }
  throw InternalLogicError("generated_algebra: span did not stabilize");
}

}  // namespace qasym
