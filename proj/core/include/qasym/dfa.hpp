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

#ifndef QASYM_DFA_HPP
#define QASYM_DFA_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qasym/operator.hpp"
#include "qasym/spectral.hpp"
#include "qasym/subspace.hpp"

namespace qasym {

struct AlgebraDescription {
  OperatorSubspace subspace;
  bool is_star_closed = false;
  bool is_product_closed = false;
  bool contains_identity = false;
  OperatorSubspace center;
  bool is_factor = false;
  /// Worst relative residuals behind the two closure flags.
  double star_residual = 0.0;
  double product_residual = 0.0;

  bool is_unital_star_algebra() const {
    return is_star_closed && is_product_closed && contains_identity;
  }
};

struct TheoremVerdict {
  std::string name;
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  bool consistent = false;
  std::vector<std::pair<std::string, double>> residuals;
  std::string note;

  double residual(const std::string& key) const;
};

/// Closure tests, center V ∩ V' and the factor flag for the span V.
AlgebraDescription algebra_structure(const OperatorSubspace& v, const Tolerances& tol = {});

/// {X : S(E_a X) = S(E_a) S(X) and S(X E_a) = S(X) S(E_a) for every matrix unit E_a}.
OperatorSubspace bimodule_domain(const Superoperator& s, const Tolerances& tol = {});

/// Largest S-invariant subspace of a given subspace.
OperatorSubspace largest_invariant_subspace(const Superoperator& s, const OperatorSubspace& v,
                                            const Tolerances& tol = {});

/// Decoherence-free algebra of a UCP map. Throws PropertyViolation if the computed space
/// is not a unital *-algebra invariant under S.
AlgebraDescription dfa_discrete(const Superoperator& s, const Tolerances& tol = {});

struct PaResult {
  bool peripherally_automorphic = false;
  /// Worst relative residual of B_i B_j outside span(attr).
  double closure_residual = 0.0;
  /// Worst ||S(B_i B_j) - S(B_i) S(B_j)||.
  double multiplicativity_residual = 0.0;
};

/// Throws NumericalFailure when the product-closure and multiplicativity criteria disagree.
PaResult is_peripherally_automorphic(const Superoperator& s, const OperatorSubspace& attr,
                                     const Tolerances& tol = {});

struct StationaryStates {
  OperatorSubspace fixed;
  Operator sigma;
  double min_eigenvalue = 0.0;
};

/// Stationary states of a trace-preserving dual and the distinguished state obtained by
/// projecting I/d onto the eigenvalue-1 (maps) or eigenvalue-0 (generators) eigenspace.
StationaryStates stationary_states(const Superoperator& s_dual, const Tolerances& tol = {},
                                   SpectrumKind kind = SpectrumKind::map);

struct FaithfulResult {
  bool faithful = false;
  double min_eigenvalue = 0.0;
  Operator sigma;
};

FaithfulResult is_faithful(const Superoperator& s, const Tolerances& tol = {});

/// Faithful UCP map: Attr = N and the asymptotic map is a *-automorphism of N.
TheoremVerdict check_theorem_faithful(const Superoperator& s, const Tolerances& tol = {});

/// Peripherally automorphic iff Attr ⊆ N; Fix ⊆ N whenever PA holds.
TheoremVerdict check_theorem_pa(const Superoperator& s, const Tolerances& tol = {});

struct HamanaResult {
  double left_defect = 0.0;
  double right_defect = 0.0;
};

/// Max over 20 seeded unit-norm pairs (X, Y) of ||P(P(X)P(Y)) - P(P(X)Y)|| and
/// ||P(P(X)P(Y)) - P(X P(Y))||. Requires P idempotent.
HamanaResult hamana_check(const Superoperator& p, std::uint64_t seed = 0,
                          const Tolerances& tol = {});

/// Everything the discrete pipeline needs from one spectral decomposition.
struct DiscreteAnalysis {
  SpectralAnalysis spectral;
  AlgebraDescription dfa;
  PaResult pa;
  FaithfulResult faithful;
  std::vector<TheoremVerdict> verdicts;
};

DiscreteAnalysis analyze_discrete(const Superoperator& s, const Tolerances& tol = {},
                                  std::uint64_t seed = 0);

}  // namespace qasym

#endif  // QASYM_DFA_HPP
