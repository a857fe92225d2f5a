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

#include "qasym/operator.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qasym/errors.hpp"

namespace qasym {

Operator::Operator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw InputError("operator must be a non-empty square matrix, got " +
                     std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  }
  if (!m_.allFinite()) throw InputError("operator has non-finite entries");
}

Operator Operator::zero(Index d) { return Operator(Matrix::Zero(d, d)); }
Operator Operator::identity(Index d) { return Operator(Matrix::Identity(d, d)); }

Operator Operator::unit(Index d, Index i, Index j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return Operator(std::move(m));
}

Operator Operator::diagonal(std::span<const Complex> entries) {
  const auto d = static_cast<Index>(entries.size());
  Matrix m = Matrix::Zero(d, d);
  for (Index i = 0; i < d; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return Operator(std::move(m));
}

Operator& Operator::operator+=(const Operator& o) {
  require_same_dim(dim(), o.dim(), "operator +");
  m_ += o.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  require_same_dim(dim(), o.dim(), "operator -");
  m_ -= o.m_;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim(), "operator product");
  return Operator(a.m_ * b.m_, Operator::Unchecked{});
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

namespace pauli {
Operator x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(m);
}
Operator y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return Operator(m);
}
Operator z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(m);
}
}  // namespace pauli

Vector vectorize(const Operator& x) {
  const Matrix& m = x.matrix();
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Operator devectorize(const Vector& v) {
  const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (d < 1 || d * d != v.size()) {
    throw InputError("devectorize: length " + std::to_string(v.size()) + " is not a square");
  }
  return Operator(Eigen::Map<const Matrix>(v.data(), d, d));
}

Complex hs_inner(const Operator& x, const Operator& y) {
  require_same_dim(x.dim(), y.dim(), "hs_inner");
  // tr(X^* Y) = sum_ij conj(X_ij) Y_ij
  return x.matrix().conjugate().cwiseProduct(y.matrix()).sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

//----------------------------------------------------------------------------

Superoperator::Superoperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1) {
    throw InputError("superoperator matrix must be square and non-empty");
  }
  d_ = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(m_.rows()))));
  if (d_ * d_ != m_.rows()) {
    throw InputError("superoperator side " + std::to_string(m_.rows()) + " is not a square d^2");
  }
  if (!m_.allFinite()) throw InputError("superoperator has non-finite entries");
}

Superoperator Superoperator::identity(Index d) {
  return Superoperator(Matrix::Identity(d * d, d * d));
}

Superoperator Superoperator::zero(Index d) { return Superoperator(Matrix::Zero(d * d, d * d)); }

Operator Superoperator::operator()(const Operator& x) const {
  require_same_dim(d_, x.dim(), "superoperator application");
  Vector v = m_ * vectorize(x);
  return Operator(Eigen::Map<const Matrix>(v.data(), d_, d_));
}

Superoperator Superoperator::adjoint() const { return Superoperator(m_.adjoint()); }

Superoperator Superoperator::power(unsigned long long n) const {
  Matrix result = Matrix::Identity(m_.rows(), m_.cols());
  Matrix base = m_;
  while (n > 0) {
    if (n & 1ULL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return Superoperator(std::move(result));
}

Superoperator& Superoperator::operator+=(const Superoperator& o) {
  require_same_dim(d_, o.d_, "superoperator +");
  m_ += o.m_;
  return *this;
}

Superoperator& Superoperator::operator-=(const Superoperator& o) {
  require_same_dim(d_, o.d_, "superoperator -");
  m_ -= o.m_;
  return *this;
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
  require_same_dim(a.d_, b.d_, "superoperator composition");
  return Superoperator(a.m_ * b.m_);
}

Superoperator operator*(Complex s, Superoperator a) {
  a.m_ *= s;
  return a;
}

//----------------------------------------------------------------------------

Superoperator superop_from_kraus(std::span<const Operator> kraus, Picture picture) {
  if (kraus.empty()) throw InputError("superop_from_kraus: empty Kraus list");
  const Index d = kraus.front().dim();
  Matrix m = Matrix::Zero(d * d, d * d);
  for (const auto& k : kraus) {
    require_same_dim(d, k.dim(), "superop_from_kraus");
    if (picture == Picture::heisenberg) {
      // vec(K^* X K) = (K^T (x) K^*) vec(X)
      m += kron(k.matrix().transpose(), k.matrix().adjoint());
    } else {
      // vec(K rho K^*) = (conj(K) (x) K) vec(rho)
      m += kron(k.matrix().conjugate(), k.matrix());
    }
  }
  return Superoperator(std::move(m));
}

Superoperator hs_adjoint(const Superoperator& s) { return s.adjoint(); }

Operator choi_matrix(const Superoperator& s) {
  const Index d = s.dim();
  Matrix c(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      // S(E_ij) is column j*d + i of the superoperator, reshaped.
      c.block(i * d, j * d, d, d) = Eigen::Map<const Matrix>(s.matrix().col(j * d + i).data(), d, d);
    }
  }
  return Operator(std::move(c));
}

UcpReport validate_ucp(const Superoperator& s, const Tolerances& tol) {
  const Index d = s.dim();
  UcpReport r;
  Matrix c = choi_matrix(s).matrix();
  // The Choi matrix of a hermiticity-preserving map is hermitian; symmetrize before
  // the eigensolve and fold the anti-hermitian part into the reported minimum.
  const double anti = (c - c.adjoint()).norm() / 2.0;
  Matrix herm = (c + c.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  r.min_choi_eigenvalue = es.eigenvalues().minCoeff() - anti;
  r.is_cp = r.min_choi_eigenvalue >= -tol.psd;

  const Operator id = Operator::identity(d);
  r.unitality_residual = (s(id) - id).norm();
  r.is_unital = r.unitality_residual <= tol.residual;

  // Trace preservation of the HS dual, checked on matrix units: tr(S^dag(E_ij)) = delta_ij.
  const Matrix dual = s.matrix().adjoint();
  double tp = 0.0;
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      Complex tr = 0.0;
      for (Index k = 0; k < d; ++k) tr += dual(k * d + k, j * d + i);
      tp = std::max(tp, std::abs(tr - (i == j ? 1.0 : 0.0)));
    }
  }
  r.is_trace_preserving_dual = tp <= tol.residual;
  return r;
}

}  // namespace qasym
