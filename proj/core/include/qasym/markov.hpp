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

#ifndef QASYM_MARKOV_HPP
#define QASYM_MARKOV_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qasym/dfa.hpp"
#include "qasym/operator.hpp"
#include "qasym/spectral.hpp"
#include "qasym/subspace.hpp"

namespace qasym {

/// L(X) = i[H, X] + sum_k (L_k^* X L_k - 1/2 {L_k^* L_k, X}).
struct GKLSGenerator {
  Operator hamiltonian;
  std::vector<Operator> jumps;

  Index dim() const { return hamiltonian.dim(); }
  /// Throws InputError on a non-hermitian H or mixed dimensions.
  void validate(double herm_tol = 1e-12) const;
};

Superoperator gkls_superop(const GKLSGenerator& g);
/// Direct evaluation of L(X) from the operator formula.
Operator apply_gkls(const GKLSGenerator& g, const Operator& x);

/// Scaling-and-squaring exponential of t S, computed on the sparsity blocks of S.
Superoperator expm(const Superoperator& s, double t = 1.0);

/// Multiplies S into the columns of x, switching to sparse storage for large sparse S.
Matrix apply_columns(const Superoperator& s, const Matrix& x);

struct GeneratorSpectrum {
  /// Sorted by decreasing real part, then increasing imaginary part.
  std::vector<Complex> eigenvalues;
  SpectrumClassification classes;
  double max_real_part = 0.0;
  /// Smallest |lambda|; zero up to rounding for a valid generator.
  double zero_residual = 0.0;
  double conjugation_residual = 0.0;
};

/// Throws InvalidGenerator when an eigenvalue has real part above tol_residual (relative to
/// the spectral scale).
GeneratorSpectrum generator_spectrum_classify(const Superoperator& l, const Tolerances& tol = {});

struct SemigroupAttractor {
  OperatorSubspace attr;
  OperatorSubspace attr_unit_time;
  /// Two distinct peripheral eigenvalues differ by a nonzero multiple of 2 pi i.
  bool aliasing = false;
  bool agrees = false;
  double mutual_residual = 0.0;
};

SemigroupAttractor semigroup_attractor(const Superoperator& l, const Tolerances& tol = {});

struct SemigroupFix {
  OperatorSubspace kernel;
  OperatorSubspace fix_unit_time;
  bool contained = false;
  bool strict = false;
  double containment_residual = 0.0;
};

SemigroupFix semigroup_fix(const Superoperator& l, const Tolerances& tol = {});

struct MarkovOptions {
  std::vector<double> sample_times{0.1, 0.7, 1.3};
  /// Largest d for which N is also compared with the discrete algorithm on exp(L).
  Index full_discrete_check_max_dim = 8;
};

struct MarkovDfa {
  AlgebraDescription algebra;
  /// Dimension of the stabilized span of delta_H^j({L_k, L_k^*}).
  Index stabilized_dim = 0;
  /// Worst ||Phi_t(B^*B) - Phi_t(B)^*Phi_t(B)|| (and B B^*) over N and the sample times.
  double multiplicative_residual = 0.0;
  double invariance_residual = 0.0;
  double unitary_residual = 0.0;
  bool full_discrete_checked = false;
  double discrete_containment_residual = 0.0;
  Index discrete_dim = 0;
};

/// N for the semigroup: commutant of the delta_H-stabilized set {L_k, L_k^*}. Throws
/// NumericalFailure (with the sampled fallback dimension) if the runtime cross-checks fail.
MarkovDfa dfa_markov(const GKLSGenerator& g, const Tolerances& tol = {},
                     const MarkovOptions& opt = {});

/// max ||exp(tL)(B) - e^{itH} B e^{-itH}|| over the basis of n and the sample times.
double unitary_containment_check(const GKLSGenerator& g, const OperatorSubspace& n,
                                 std::span<const double> sample_times);

/// L_k -> L_k + c_k I, H -> H + (1/2i) sum_k (conj(c_k) L_k - c_k L_k^*) + r I. Throws
/// InternalLogicError if the superoperator changes by more than 1e-10.
GKLSGenerator gauge_transform(const GKLSGenerator& g, std::span<const Complex> shifts, double r);

struct SemigroupFaithful {
  bool faithful = false;
  double min_eigenvalue = 0.0;
  Operator sigma;
  TheoremVerdict verdict;
};

SemigroupFaithful semigroup_faithful(const GKLSGenerator& g, const OperatorSubspace& attr,
                                     const OperatorSubspace& n, const Tolerances& tol = {});
SemigroupFaithful semigroup_faithful(const GKLSGenerator& g, const Tolerances& tol = {});

struct SemigroupAnalysis {
  Superoperator generator;
  GeneratorSpectrum spectrum;
  SemigroupAttractor attractor;
  SemigroupFix fix;
  MarkovDfa dfa;
  SemigroupFaithful faithful;
  std::vector<TheoremVerdict> verdicts;
};

SemigroupAnalysis analyze_semigroup(const GKLSGenerator& g, const Tolerances& tol = {},
                                    const MarkovOptions& opt = {}, std::uint64_t seed = 0);

}  // namespace qasym

#endif  // QASYM_MARKOV_HPP
