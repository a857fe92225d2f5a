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


// Reference computations for the tests. Everything here goes straight to Eigen or to
// explicit index formulas and shares no code with the library algorithms it checks.

#ifndef QASYM_TESTS_ORACLES_HPP
#define QASYM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qasym/operator.hpp"

namespace oracle {

using qasym::Complex;
using qasym::Index;
using qasym::Matrix;
using qasym::Operator;
using qasym::Vector;

/// Heisenberg map X -> sum K^* X K entry by entry: the column of E_kl (index l d + k) has
/// entry sum_K conj(K_ki) K_lj in row j d + i.
inline Matrix heisenberg_superop(const std::vector<Matrix>& kraus) {
  const Index d = kraus.front().rows();
  Matrix s = Matrix::Zero(d * d, d * d);
  for (const auto& k : kraus) {
    for (Index kk = 0; kk < d; ++kk) {
      for (Index l = 0; l < d; ++l) {
        for (Index i = 0; i < d; ++i) {
          for (Index j = 0; j < d; ++j) {
            s(j * d + i, l * d + kk) += std::conj(k(kk, i)) * k(l, j);
          }
        }
      }
    }
  }
  return s;
}

inline std::vector<Matrix> matrices(const std::vector<Operator>& ops) {
  std::vector<Matrix> out;
  for (const auto& o : ops) out.push_back(o.matrix());
  return out;
}

inline std::vector<Complex> eigenvalues(const Matrix& a) {
  Eigen::ComplexEigenSolver<Matrix> es(a, false);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

/// Largest distance in a greedy matching of two multisets of equal size.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  std::vector<bool> used(b.size(), false);
  for (const auto& z : a) {
    double best = INFINITY;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(z - b[j]) < best) {
        best = std::abs(z - b[j]);
        arg = j;
      }
    }
    used[arg] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

/// Orthonormal basis of the column span, rank decided by rank-revealing QR.
inline Matrix orthonormal_span(const Matrix& a, double tol = 1e-9) {
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  qr.setThreshold(tol);
  const Index r = qr.rank();
  Matrix q = qr.householderQ() * Matrix::Identity(a.rows(), r);
  return q;
}

/// Right nullspace through a full SVD with an absolute cut tol * sigma_max.
inline Matrix nullspace(const Matrix& a, double tol = 1e-9) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol * std::max(smax, 1.0)) ++rank;
  }
  return svd.matrixV().rightCols(a.cols() - rank);
}

/// Largest ||(I - Q Q^*) b|| over orthonormal columns b of `b`.
inline double containment_gap(const Matrix& q, const Matrix& b) {
  double worst = 0.0;
  for (Index j = 0; j < b.cols(); ++j) {
    const Vector v = b.col(j);
    const Vector r = q.cols() == 0 ? v : Vector(v - q * (q.adjoint() * v));
    worst = std::max(worst, r.norm());
  }
  return worst;
}

inline double subspace_distance(const Matrix& q1, const Matrix& q2) {
  if (q1.cols() != q2.cols()) return INFINITY;
  return std::max(containment_gap(q1, q2), containment_gap(q2, q1));
}

inline Matrix vec(const Matrix& x) {
  return Eigen::Map<const Vector>(x.data(), x.size());
}

inline Matrix unvec(const Vector& v, Index d) { return Eigen::Map<const Matrix>(v.data(), d, d); }

inline Matrix unit(Index d, Index i, Index j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

/// Decoherence-free algebra straight from its definition: X with
/// S^n(Y X) = S^n(Y) S^n(X) and S^n(X Y) = S^n(X) S^n(Y) for all matrix units Y and
/// 1 <= n <= nmax. Each condition is linear in X; all of them are stacked.
inline Matrix brute_force_dfa(const Matrix& s, Index d, int nmax = 8) {
  std::vector<Matrix> blocks;
  Matrix sn = Matrix::Identity(d * d, d * d);
  for (int n = 1; n <= nmax; ++n) {
    sn = s * sn;
    auto apply = [&](const Matrix& x) { return unvec(sn * Vector(vec(x)), d); };
    for (Index a = 0; a < d; ++a) {
      for (Index b = 0; b < d; ++b) {
        const Matrix y = unit(d, a, b);
        const Matrix sy = apply(y);
        Matrix left(d * d, d * d);
        Matrix right(d * d, d * d);
        for (Index c = 0; c < d * d; ++c) {
          const Matrix x = unvec(Matrix::Identity(d * d, d * d).col(c), d);
          left.col(c) = vec(apply(y * x) - sy * apply(x));
          right.col(c) = vec(apply(x * y) - apply(x) * sy);
        }
        blocks.push_back(left);
        blocks.push_back(right);
      }
    }
  }
  Matrix stacked(static_cast<Index>(blocks.size()) * d * d, d * d);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    stacked.middleRows(static_cast<Index>(i) * d * d, d * d) = blocks[i];
  }
  return nullspace(stacked, 1e-10);
}

/// {X : [G, X] = 0 for all G}: stacked (I (x) G - G^T (x) I) nullspace.
inline Matrix brute_force_commutant(const std::vector<Matrix>& gens) {
  const Index d = gens.front().rows();
  const Matrix id = Matrix::Identity(d, d);
  Matrix stacked(static_cast<Index>(gens.size()) * d * d, d * d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Matrix& g = gens[i];
    Matrix c(d * d, d * d);
    for (Index a = 0; a < d; ++a) {
      for (Index b = 0; b < d; ++b) {
        // block (a, b) of I (x) G - G^T (x) I
        c.block(a * d, b * d, d, d) = id(a, b) * g - g(b, a) * id;
      }
    }
    stacked.middleRows(static_cast<Index>(i) * d * d, d * d) = c;
  }
  return nullspace(stacked, 1e-10);
}

/// exp(t A) through the eigendecomposition; valid for diagonalizable A with a
/// well-conditioned eigenbasis.
inline Matrix expm_eig(const Matrix& a, double t) {
  Eigen::ComplexEigenSolver<Matrix> es(a);
  const Matrix& v = es.eigenvectors();
  Vector e = (t * es.eigenvalues()).array().exp();
  return v * e.asDiagonal() * v.inverse();
}

/// mu_lambda(x) = prod_k (lambda if x_k = 0 else 1 - lambda) for the n-bit index x.
inline double product_measure(unsigned x, int n, double lambda) {
  double m = 1.0;
  for (int k = 0; k < n; ++k) m *= ((x >> k) & 1U) ? 1.0 - lambda : lambda;
  return m;
}

}  // namespace oracle

#endif  // QASYM_TESTS_ORACLES_HPP
