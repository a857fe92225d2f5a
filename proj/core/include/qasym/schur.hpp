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

#ifndef QASYM_SCHUR_HPP
#define QASYM_SCHUR_HPP

#include <functional>
#include <vector>

#include "qasym/operator.hpp"

namespace qasym {

/// A = U T U^*, T upper triangular, U unitary.
struct SchurForm {
  Matrix t;
  Matrix u;
};

SchurForm complex_schur(const Matrix& a);

/// Exchanges the diagonal entries k and k+1 by a unitary rotation.
void swap_adjacent(SchurForm& s, Index k);

/// Moves every diagonal entry with select(lambda) to the front, keeping relative order.
/// Returns the number of selected entries.
Index reorder_schur(SchurForm& s, const std::function<bool(Complex)>& select);

/// Solves T11 Y - Y T22 = C for upper-triangular T11, T22. Throws NumericalFailure when
/// the two diagonals share an eigenvalue.
Matrix solve_triangular_sylvester(const Matrix& t11, const Matrix& t22, const Matrix& c);

/// Index sets of the connected components of the graph with an edge i-j whenever
/// a(i,j) or a(j,i) is nonzero. Components are sorted by their smallest index.
std::vector<std::vector<Index>> sparsity_components(const Matrix& a);

/// Invariant-subspace split of a square matrix into the eigenvalues chosen by a predicate
/// ("leading") and the rest ("trailing"), computed block by block on the sparsity
/// components.
class SpectralSplit {
 public:
  struct Block {
    std::vector<Index> index;
    SchurForm schur;
    Index lead = 0;
    /// T11 Y - Y T22 = -T12.
    Matrix y;
  };

  SpectralSplit(const Matrix& a, const std::function<bool(Complex)>& select);

  Index size() const { return n_; }
  Index leading_dim() const { return lead_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  std::vector<Complex> eigenvalues() const;
  std::vector<Complex> leading_eigenvalues() const;

  /// Orthonormal basis of the leading invariant subspace (n x leading_dim).
  Matrix leading_basis() const;
  /// Orthonormal basis of the trailing invariant subspace.
  Matrix trailing_basis() const;
  /// A restricted to the leading subspace in the leading_basis() coordinates.
  Matrix leading_restriction() const;
  /// Dense spectral projector onto the leading subspace along the trailing one.
  Matrix projector() const;
  Vector apply_projector(const Vector& v) const;

  /// Largest failure of semisimplicity among leading eigenvalues: for each cluster of
  /// nearly equal leading eigenvalues, multiplicity minus the numerical nullity of
  /// T11 - mu I. Zero for a diagonalizable leading block.
  Index leading_defect(double cluster_tol = 1e-6, double null_tol = 1e-6) const;

 private:
  Index n_ = 0;
  Index lead_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace qasym

#endif  // QASYM_SCHUR_HPP
