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

#ifndef QASYM_TOLERANCES_HPP
#define QASYM_TOLERANCES_HPP

#include "qasym/errors.hpp"

namespace qasym {

/// Numerical thresholds shared by every module.
///
/// `peripheral` separates |lambda| >= 1 - peripheral (maps) or Re lambda >= -peripheral
/// (generators) from the bulk. `rank` is the relative singular-value cut used for
/// nullspaces and orthonormalization. `residual` bounds identities that hold exactly in
/// exact arithmetic. `psd` is the slack allowed below zero for positive semidefiniteness.
struct Tolerances {
  double peripheral = 1e-9;
  double rank = 1e-9;
  double residual = 1e-8;
  double psd = 1e-9;

  void validate() const {
    auto check = [](double v, const char* name) {
      if (!(v > 0.0) || !(v < 1e-2)) {
        throw InputError(std::string("tolerance ") + name + " must lie in (0, 1e-2)");
      }
    };
    check(peripheral, "peripheral");
    check(rank, "rank");
    check(residual, "residual");
    check(psd, "psd");
  }
};

}  // namespace qasym

#endif  // QASYM_TOLERANCES_HPP
