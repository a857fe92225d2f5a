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

#ifndef QASYM_SUBSPACE_HPP
#define QASYM_SUBSPACE_HPP

#include <span>
#include <vector>

#include "qasym/operator.hpp"

namespace qasym {

/// A subspace of B(H) carried by a Hilbert-Schmidt orthonormal basis.
///
/// The basis is stored as the columns of a d^2 x r matrix of vectorized operators, so
/// projections are plain matrix products.
class OperatorSubspace {
 public:
  OperatorSubspace() = default;
  /// The zero subspace of B(C^d).
  explicit OperatorSubspace(Index d);

  /// Wraps columns that are already orthonormal (checked to 1e-10).
  static OperatorSubspace from_orthonormal_columns(Index d, Matrix columns);
  static OperatorSubspace full(Index d);

  Index ambient_dim() const { return d_; }
  Index size() const { return q_.cols(); }
  bool empty() const { return q_.cols() == 0; }

  Operator element(Index i) const;
  std::vector<Operator> basis() const;
  const Matrix& columns() const { return q_; }

  Vector project(const Vector& v) const;
  Operator project(const Operator& x) const;
  /// ||x - P x|| / ||x||; zero for x = 0.
  double relative_residual(const Operator& x) const;
  /// Largest deviation of the Gram matrix from the identity.
  double orthonormality_defect() const;

 private:
  Index d_ = 0;
  Matrix q_;
};

/// Modified Gram-Schmidt with one re-orthogonalization pass, processing inputs in order.
/// A vector whose residual norm is <= tol_rank * (largest input norm) is dropped.
OperatorSubspace orthonormalize(std::span<const Operator> ops, double tol_rank);
OperatorSubspace orthonormalize_columns(Index d, const Matrix& columns, double tol_rank);

/// Largest projection residual of a B-basis element onto A.
double containment_residual(const OperatorSubspace& a, const OperatorSubspace& b);
/// B ⊆ A.
bool subspace_contains(const OperatorSubspace& a, const OperatorSubspace& b, double tol);
/// Max of the two containment residuals; meaningful together with equal sizes.
double mutual_containment_residual(const OperatorSubspace& a, const OperatorSubspace& b);
bool subspaces_equal(const OperatorSubspace& a, const OperatorSubspace& b, double tol);
OperatorSubspace subspace_intersect(const OperatorSubspace& a, const OperatorSubspace& b,
                                    double tol);
OperatorSubspace subspace_sum(const OperatorSubspace& a, const OperatorSubspace& b,
                              double tol_rank);

/// {X : [G, X] = 0 for all G in gens}.
OperatorSubspace commutant(std::span<const Operator> gens, const Tolerances& tol = {});
OperatorSubspace commutant(const OperatorSubspace& s, const Tolerances& tol = {});

/// Span of all finite products of {I} ∪ gens.
OperatorSubspace generated_algebra(std::span<const Operator> gens, const Tolerances& tol = {});

namespace linalg {

/// Orthonormal basis of {x : ||A x|| <= thr ||x||}, thr = tol * max(sigma_max(A), ref_scale).
Matrix nullspace(const Matrix& a, double tol, double ref_scale = 0.0);

/// Nullspace of the vertical stack of `blocks`, which all share a column count. The stack
/// is never formed: its R factor is accumulated block by block.
class StackedNullspace {
 public:
  explicit StackedNullspace(Index cols);
  void add(const Matrix& block);
  Matrix solve(double tol, double ref_scale = 0.0) const;
  Index cols() const { return n_; }

 private:
  Index n_;
  Matrix r_;
};

/// Columns vec([G, B_i]) for the operators B_i stored as columns of q.
Matrix commutator_columns(const Matrix& g, const Matrix& q);

}  // namespace linalg

}  // namespace qasym

#endif  // QASYM_SUBSPACE_HPP
