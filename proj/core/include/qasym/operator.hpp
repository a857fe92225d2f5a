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

#ifndef QASYM_OPERATOR_HPP
#define QASYM_OPERATOR_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qasym/tolerances.hpp"

namespace qasym {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

//============================================================================
// Operator: an element of B(H), H = C^d.
//============================================================================

class Operator {
 public:
  Operator() = default;
  /// Takes ownership of a square matrix with finite entries.
  explicit Operator(Matrix m);

  static Operator zero(Index d);
  static Operator identity(Index d);
  /// |i><j|.
  static Operator unit(Index d, Index i, Index j);
  static Operator diagonal(std::span<const Complex> entries);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  Operator adjoint() const { return Operator(m_.adjoint(), Unchecked{}); }
  Operator transpose() const { return Operator(m_.transpose(), Unchecked{}); }
  Complex trace() const { return m_.trace(); }
  /// Hilbert-Schmidt (Frobenius) norm.
  double norm() const { return m_.norm(); }
  bool is_hermitian(double tol) const { return (m_ - m_.adjoint()).norm() <= tol; }

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(Complex s) {
    m_ *= s;
    return *this;
  }

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }

 private:
  struct Unchecked {};
  Operator(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

/// [a, b] = ab - ba.
Operator commutator(const Operator& a, const Operator& b);

namespace pauli {
Operator x();
Operator y();
Operator z();
}  // namespace pauli

//============================================================================
// Vectorization (column stacking): vec(AXB) = (B^T (x) A) vec(X).
//============================================================================

Vector vectorize(const Operator& x);
Operator devectorize(const Vector& v);

/// Hilbert-Schmidt inner product tr(X^* Y), conjugate-linear in X.
Complex hs_inner(const Operator& x, const Operator& y);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

//============================================================================
// Superoperator: a linear map on B(H), stored as a d^2 x d^2 matrix acting on
// column-stacked operators.
//============================================================================

class Superoperator {
 public:
  Superoperator() = default;
  /// The matrix must be square with side a perfect square d^2.
  explicit Superoperator(Matrix m);

  static Superoperator identity(Index d);
  static Superoperator zero(Index d);
  /// Builds the matrix column by column from the images of the matrix units.
  template <typename F>
  static Superoperator from_action(Index d, F&& f);

  Index dim() const { return d_; }
  const Matrix& matrix() const { return m_; }

  Operator operator()(const Operator& x) const;
  Superoperator adjoint() const;
  Superoperator power(unsigned long long n) const;

  Superoperator& operator+=(const Superoperator& o);
  Superoperator& operator-=(const Superoperator& o);
  friend Superoperator operator+(Superoperator a, const Superoperator& b) { return a += b; }
  friend Superoperator operator-(Superoperator a, const Superoperator& b) { return a -= b; }
  /// Composition (a o b).
  friend Superoperator operator*(const Superoperator& a, const Superoperator& b);
  friend Superoperator operator*(Complex s, Superoperator a);

 private:
  Index d_ = 0;
  Matrix m_;
};

template <typename F>
Superoperator Superoperator::from_action(Index d, F&& f) {
  Matrix m(d * d, d * d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      m.col(j * d + i) = vectorize(f(Operator::unit(d, i, j)));
    }
  }
  return Superoperator(std::move(m));
}

enum class Picture { heisenberg, schrodinger };

/// Heisenberg: X -> sum K_i^* X K_i. Schrodinger: rho -> sum K_i rho K_i^*.
Superoperator superop_from_kraus(std::span<const Operator> kraus, Picture picture);

/// Adjoint with respect to the Hilbert-Schmidt inner product.
Superoperator hs_adjoint(const Superoperator& s);

/// C = sum_ij E_ij (x) S(E_ij), a d^2 x d^2 operator.
Operator choi_matrix(const Superoperator& s);

struct UcpReport {
  bool is_cp = false;
  bool is_unital = false;
  bool is_trace_preserving_dual = false;
  double min_choi_eigenvalue = 0.0;
  double unitality_residual = 0.0;

  bool ok() const { return is_cp && is_unital; }
};

UcpReport validate_ucp(const Superoperator& s, const Tolerances& tol = {});

}  // namespace qasym

#endif  // QASYM_OPERATOR_HPP
