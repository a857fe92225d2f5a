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

#include "qasym/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "qasym/errors.hpp"

namespace qasym {

double Rng::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix ginibre(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

Matrix haar_unitary(Index d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix& r = qr.matrixQR();
  for (Index i = 0; i < d; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

Operator random_operator(Index d, Rng& rng) {
  Matrix g = ginibre(d, d, rng);
  g /= g.norm();
  return Operator(std::move(g));
}

Operator random_hermitian(Index d, Rng& rng) {
  const Matrix g = ginibre(d, d, rng);
  return Operator((g + g.adjoint()) / 2.0);
}

std::vector<Operator> random_unital_kraus(Index d, Index k, std::uint64_t seed) {
  if (d < 1 || k < 1) throw InputError("random_unital_kraus: need d >= 1 and k >= 1");
  Rng rng(seed);
  std::vector<double> w(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(1.0 - rng.uniform());
    total += x;
  }
  std::vector<Operator> kraus;
  for (Index i = 0; i < k; ++i) {
    kraus.emplace_back(std::sqrt(w[static_cast<std::size_t>(i)] / total) * haar_unitary(d, rng));
  }
  return kraus;
}

std::vector<Operator> random_stinespring_kraus(Index d, Index env, std::uint64_t seed) {
  if (d < 1 || env < 1) throw InputError("random_stinespring_kraus: need d >= 1 and env >= 1");
  Rng rng(seed);
  const Matrix v = haar_unitary(d * env, rng).leftCols(d);
  // Row index of C^d (x) C^env is a * env + i.
  std::vector<Operator> kraus;
  for (Index i = 0; i < env; ++i) {
    Matrix k(d, d);
    for (Index a = 0; a < d; ++a) k.row(a) = v.row(a * env + i);
    kraus.emplace_back(std::move(k));
  }
  return kraus;
}

GKLSGenerator random_gkls(Index d, Index jumps, std::uint64_t seed) {
  if (d < 1 || jumps < 0) throw InputError("random_gkls: need d >= 1 and jumps >= 0");
  Rng rng(seed);
  GKLSGenerator g;
  g.hamiltonian = random_hermitian(d, rng);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index k = 0; k < jumps; ++k) g.jumps.emplace_back(s * ginibre(d, d, rng));
  return g;
}

}  // namespace qasym
