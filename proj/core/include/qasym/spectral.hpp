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

#ifndef QASYM_SPECTRAL_HPP
#define QASYM_SPECTRAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qasym/operator.hpp"
#include "qasym/schur.hpp"
#include "qasym/subspace.hpp"

namespace qasym {

/// Discrete-time maps have their peripheral spectrum on the unit circle, generators on
/// the imaginary axis.
enum class SpectrumKind { map, generator };

bool is_peripheral(Complex lambda, SpectrumKind kind, double tol_peripheral);

/// Eigenvalues (with multiplicity) sorted by decreasing modulus, then increasing argument.
std::vector<Complex> full_spectrum(const Superoperator& s);

struct SpectrumClassification {
  std::vector<Complex> peripheral;
  std::vector<Complex> bulk;
  /// 1 - max bulk modulus for maps, -max bulk real part for generators. Maps with an
  /// empty bulk get 1, generators get +infinity.
  double gap = 1.0;
};

/// Greedy nearest-neighbour matching of the multiset against its conjugate; returns the
/// largest matched distance.
double conjugation_pairing_residual(std::span<const Complex> eigs);

SpectrumClassification classify_and_gap(std::span<const Complex> eigs, double tol_peripheral,
                                        SpectrumKind kind = SpectrumKind::map);

/// Peripheral/bulk split of a superoperator. Throws NumericalFailure if a peripheral
/// eigenvalue is not semisimple.
SpectralSplit peripheral_split(const Superoperator& s, const Tolerances& tol,
                               SpectrumKind kind = SpectrumKind::map);

OperatorSubspace attractor_subspace(const Superoperator& s, const Tolerances& tol = {});
/// Kernel of S - I (maps) or of S (generators).
OperatorSubspace fixed_point_subspace(const Superoperator& s, const Tolerances& tol = {},
                                      SpectrumKind kind = SpectrumKind::map);
Superoperator peripheral_projection(const Superoperator& s, const Tolerances& tol = {});
OperatorSubspace transient_subspace(const Superoperator& s, const Tolerances& tol = {});

/// Q^* S Q for the orthonormal attractor basis Q.
Matrix asymptotic_map(const Superoperator& s, const OperatorSubspace& attr);

struct SpectralAnalysis {
  std::vector<Complex> eigenvalues;
  SpectrumClassification classes;
  OperatorSubspace attr;
  OperatorSubspace fix;
  OperatorSubspace transient;
  Superoperator p_peripheral;
  Matrix asymptotic;
};

SpectralAnalysis analyze_spectrum(const Superoperator& s, const Tolerances& tol = {});

struct JdlgReport {
  Index attr_dim = 0;
  Index transient_dim = 0;
  bool dims_sum = false;
  bool intersection_trivial = false;
  double decomposition_residual = 0.0;
  /// max_n ||S^n x_T|| / (||x_T|| (1 - gap + 0.05)^n) over the checked horizon.
  double kappa = 0.0;
  /// ||S x_T|| / ||x_T|| averaged geometrically over the horizon.
  double decay_ratio = 0.0;
  Index horizon = 0;
  bool passed = false;
};

JdlgReport jdlg_verify(const Superoperator& s, const SpectralAnalysis& analysis,
                       const Tolerances& tol = {}, std::uint64_t seed = 0);

}  // namespace qasym

#endif  // QASYM_SPECTRAL_HPP
