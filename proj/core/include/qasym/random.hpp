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

#ifndef QASYM_RANDOM_HPP
#define QASYM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qasym/markov.hpp"
#include "qasym/operator.hpp"

namespace qasym {

/// Seeded generator with platform-independent output: std::mt19937_64 for the bit
/// stream, 53-bit uniforms and Box-Muller normals on top of it.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double normal();
  /// Standard complex normal, E|z|^2 = 1.
  Complex complex_normal();

 private:
  std::mt19937_64 gen_;
};

/// splitmix64 mix of (base, index); used to give every trial its own stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

Matrix ginibre(Index rows, Index cols, Rng& rng);
/// Haar-distributed unitary: QR of a Ginibre matrix with the phases of diag(R) removed.
Matrix haar_unitary(Index d, Rng& rng);
/// Ginibre operator scaled to unit Hilbert-Schmidt norm.
Operator random_operator(Index d, Rng& rng);
Operator random_hermitian(Index d, Rng& rng);

/// Kraus operators sqrt(p_i) U_i of a random mixture of k unitary conjugations.
std::vector<Operator> random_unital_kraus(Index d, Index k, std::uint64_t seed);
/// Kraus operators (I (x) <i|) V of a Haar isometry V : C^d -> C^d (x) C^env.
std::vector<Operator> random_stinespring_kraus(Index d, Index env, std::uint64_t seed);
/// Gaussian hermitian Hamiltonian and Gaussian jumps scaled by 1/sqrt(d).
GKLSGenerator random_gkls(Index d, Index jumps, std::uint64_t seed);

}  // namespace qasym

#endif  // QASYM_RANDOM_HPP
