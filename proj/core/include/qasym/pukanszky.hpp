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

#ifndef QASYM_PUKANSZKY_HPP
#define QASYM_PUKANSZKY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qasym/dfa.hpp"
#include "qasym/markov.hpp"
#include "qasym/operator.hpp"

namespace qasym::puk {

/// x = (x_1, ..., x_n) in {0,1}^n. As an index, x_1 is the most significant bit.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<int> bits);
  static BinaryWord from_index(int n, Index idx);
  static BinaryWord zero(int n) { return BinaryWord(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  /// e_k, 1-based.
  static BinaryWord unit(int n, int k);

  int size() const { return static_cast<int>(bits_.size()); }
  /// 1-based access.
  int bit(int k) const { return bits_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& bits() const { return bits_; }
  Index index() const;
  int ones() const;

  friend BinaryWord operator^(const BinaryWord& a, const BinaryWord& b);
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<int> bits_;
};

struct TruncationConfig {
  int n = 1;
  double lambda = 0.5;
  std::vector<double> m_weights;
  std::vector<double> n_weights;

  /// m_k = n_k = ratio^k.
  static TruncationConfig geometric(int n, double lambda, double ratio = 0.5);
  Index dim() const { return Index{1} << (2 * n); }
  void validate() const;
};

/// Coordinates of the truncated Hilbert space. `delta` uses the functions delta_(x,x°),
/// which are orthogonal with norm^2 mu(x); `orthonormal` rescales them by 1/sqrt(mu(x)).
enum class Basis { orthonormal, delta };

/// Basis index of (x, x°): index(x) * 2^n + index(x°).
Index basis_index(const BinaryWord& x, const BinaryWord& xo);

double mu_weight(const BinaryWord& x, double lambda);
/// mu(x ⊕ y°) / mu(x).
double rn_factor(const BinaryWord& x, const BinaryWord& yo, double lambda);

/// (V F)(x, x°) = sqrt(rn(x, y°)) F(x ⊕ y°, x° ⊕ y°).
Operator build_translation(const BinaryWord& yo, const TruncationConfig& c,
                           Basis basis = Basis::orthonormal);
/// Multiplication by phi(x), identical in both bases.
Operator build_multiplication(const std::function<double(const BinaryWord&)>& phi,
                              const TruncationConfig& c);
/// L_{psi_k}: +1 where x_k = 0, -1 where x_k = 1.
Operator psi_operator(int k, const TruncationConfig& c);
/// Product over k <= m of (I + (1 - 2 y_k) L_{psi_k}) / 2.
Operator cylinder_indicator(std::span<const int> y, const TruncationConfig& c);

/// max ||V^* W V - W|| with W = diag(mu(x)), the Gram matrix of the delta basis.
double weighted_unitarity_residual(const Operator& v_delta, const TruncationConfig& c);

struct PukOperators {
  std::vector<Operator> m;
  std::vector<Operator> n;
  GKLSGenerator generator;
};

PukOperators build_operators(const TruncationConfig& c);
/// H = 0, jumps sqrt(m_k) M_k and sqrt(n_k) N_k.
GKLSGenerator build_generator_lambda(const TruncationConfig& c);

/// F0(x, x°) = delta_(x°, 0) in orthonormal coordinates: sqrt(mu(x)) on (x, 0).
Vector distinguished_vector(const TruncationConfig& c);

struct Prop5Report {
  int n = 0;
  double lambda = 0.0;
  Index dim = 0;
  Index dim_m = 0;
  Index m_center_dim = 0;
  bool m_is_factor = false;
  Index dim_commutant = 0;
  Index dim_n_alg = 0;
  /// Mutual containment residual between dfa_markov and the commutant of {M_k, N_k}.
  double n_alg_residual = 0.0;
  bool duality_holds = false;
  double translation_residual = 0.0;
  double cylinder_residual = 0.0;
  double selfadjoint_unitary_residual = 0.0;
  double relation_residual = 0.0;
  double generator_selfadjoint_residual = 0.0;
  double max_generator_real_eigenvalue = 0.0;
  bool faithful = false;
  double sigma_min_eigenvalue = 0.0;
  Index attr_dim = 0;
  double attr_n_residual = 0.0;
  MarkovDfa markov;
  std::vector<TheoremVerdict> verdicts;
  std::vector<std::string> failures;
  bool passed = false;
};

/// Finite-truncation checks of the factor statement. n = 4 is rejected with
/// NumericalFailure (the dense superoperator would be 65536^2).
Prop5Report verify_prop5(const TruncationConfig& c, const Tolerances& tol = {});

struct TracialReport {
  double residual = 0.0;
  double phi_n1 = 0.0;
  bool tracial = false;
  TheoremVerdict verdict;
};

/// max |phi(AB) - phi(BA)| for the vector state of F0 over the words M_k, N_k, M_k N_k and
/// 20 seeded random elements of the algebra generated by them.
TracialReport tracial_check(const TruncationConfig& c, std::uint64_t seed = 0);

}  // namespace qasym::puk

#endif  // QASYM_PUKANSZKY_HPP
