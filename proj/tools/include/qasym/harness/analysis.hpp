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


#ifndef QASYM_HARNESS_ANALYSIS_HPP
#define QASYM_HARNESS_ANALYSIS_HPP

#include <cstdint>

#include "qasym/harness/instance.hpp"
#include "qasym/harness/report.hpp"

namespace qasym::harness {

struct AnalysisOptions {
  Tolerances tolerances;
  std::uint64_t seed = 0;
  /// Subspace bases are written out only for d up to this size.
  Index basis_cap = 8;
  MarkovOptions markov;
};

/// Full pipeline for one instance. Throws InputError for inputs that fail validation and
/// NumericalFailure for numerical breakdown; theorem inconsistencies are reported in the
/// verdicts.
AnalysisReport run_analysis(const InstanceSpec& spec, const AnalysisOptions& opt = {});

/// 0 when every verdict is consistent, 3 otherwise.
int exit_code_for(const AnalysisReport& r);

}  // namespace qasym::harness

#endif  // QASYM_HARNESS_ANALYSIS_HPP
