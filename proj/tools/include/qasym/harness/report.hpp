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


#ifndef QASYM_HARNESS_REPORT_HPP
#define QASYM_HARNESS_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qasym/dfa.hpp"
#include "qasym/harness/json_io.hpp"
#include "qasym/operator.hpp"
#include "qasym/tolerances.hpp"

namespace qasym::harness {

inline constexpr int kReportFormatVersion = 1;
std::string artifact_version();

struct CheckRecord {
  std::string name;
  bool passed = false;
  double value = 0.0;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct SubspaceRecord {
  std::string name;
  Index dim = 0;
  /// Operators of an orthonormal basis; left empty above the report's basis cap.
  std::vector<Matrix> basis;
};

struct AlgebraRecord {
  std::string name;
  Index dim = 0;
  bool star_closed = false;
  bool product_closed = false;
  bool contains_identity = false;
  Index center_dim = 0;
  bool is_factor = false;
  double star_residual = 0.0;
  double product_residual = 0.0;
};

struct AnalysisReport {
  std::string artifact_version;
  int format_version = kReportFormatVersion;
  Json instance;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  std::vector<CheckRecord> validation;
  /// "map" or "generator".
  std::string spectrum_kind = "map";
  std::vector<Complex> eigenvalues;
  std::vector<Complex> peripheral;
  /// +infinity (serialized as null) for a generator without bulk spectrum.
  double gap = 0.0;
  std::vector<SubspaceRecord> subspaces;
  std::vector<AlgebraRecord> algebras;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<TheoremVerdict> verdicts;
  std::vector<std::string> notes;
  double wall_clock_seconds = 0.0;

  bool all_consistent() const;
  const SubspaceRecord* subspace(std::string_view name) const;
  const AlgebraRecord* algebra(std::string_view name) const;
  /// Throws InputError on a missing key.
  bool flag(std::string_view name) const;
  double metric(std::string_view name) const;
};

SubspaceRecord make_subspace_record(std::string name, const OperatorSubspace& s,
                                    Index basis_cap);
AlgebraRecord make_algebra_record(std::string name, const AlgebraDescription& a);

Json verdict_to_json(const TheoremVerdict& v);
TheoremVerdict verdict_from_json(const Json& j, const std::string& pointer);

Json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const Json& j);
/// Two-space indented JSON with a trailing newline.
std::string serialize_report(const AnalysisReport& r);
AnalysisReport parse_report(std::string_view text);
std::string dump_json(const Json& j);

}  // namespace qasym::harness

#endif  // QASYM_HARNESS_REPORT_HPP
