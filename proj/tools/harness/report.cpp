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


#include "qasym/harness/report.hpp"

#include <cmath>
#include <limits>

#include "qasym/errors.hpp"

namespace qasym::harness {

namespace {

Json pairs_to_json(const std::vector<std::pair<std::string, double>>& v) {
  Json j = Json::object();
  for (const auto& [k, x] : v) j[k] = number_to_json(x);
  return j;
}

std::vector<std::pair<std::string, double>> pairs_from_json(const Json& j,
                                                            const std::string& pointer) {
  if (!j.is_object()) throw InputError("at " + pointer + ": expected an object");
  std::vector<std::pair<std::string, double>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    out.emplace_back(it.key(), number_from_json(it.value(), pointer + "/" + it.key()));
  }
  return out;
}

Json complex_list(const std::vector<Complex>& v) {
  Json j = Json::array();
  for (const auto& z : v) j.push_back(complex_to_json(z));
  return j;
}

std::vector<Complex> complex_list_from(const Json& j, const std::string& pointer) {
  if (!j.is_array()) throw InputError("at " + pointer + ": expected an array");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(complex_from_json(j[i], pointer + "/" + std::to_string(i)));
  }
  return out;
}

Index index_from(const Json& j, const std::string& pointer) {
  return static_cast<Index>(require_integer(j, pointer));
}

}  // namespace

std::string artifact_version() { return QASYM_VERSION; }

bool AnalysisReport::all_consistent() const {
  for (const auto& v : verdicts) {
    if (!v.consistent) return false;
  }
  return true;
}

const SubspaceRecord* AnalysisReport::subspace(std::string_view name) const {
  for (const auto& s : subspaces) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const AlgebraRecord* AnalysisReport::algebra(std::string_view name) const {
  for (const auto& a : algebras) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

bool AnalysisReport::flag(std::string_view name) const {
  for (const auto& [k, v] : flags) {
    if (k == name) return v;
  }
  throw InputError("report has no flag " + std::string(name));
}

double AnalysisReport::metric(std::string_view name) const {
  for (const auto& [k, v] : metrics) {
    if (k == name) return v;
  }
  throw InputError("report has no metric " + std::string(name));
}

SubspaceRecord make_subspace_record(std::string name, const OperatorSubspace& s,
                                    Index basis_cap) {
  SubspaceRecord r;
  r.name = std::move(name);
  r.dim = s.size();
  if (s.ambient_dim() <= basis_cap) {
    for (const auto& b : s.basis()) r.basis.push_back(b.matrix());
  }
  return r;
}

AlgebraRecord make_algebra_record(std::string name, const AlgebraDescription& a) {
  AlgebraRecord r;
  r.name = std::move(name);
  r.dim = a.subspace.size();
  r.star_closed = a.is_star_closed;
  r.product_closed = a.is_product_closed;
  r.contains_identity = a.contains_identity;
  r.center_dim = a.center.size();
  r.is_factor = a.is_factor;
  r.star_residual = a.star_residual;
  r.product_residual = a.product_residual;
  return r;
}

Json verdict_to_json(const TheoremVerdict& v) {
  Json j;
  j["name"] = v.name;
  j["hypothesis_holds"] = v.hypothesis_holds;
  j["conclusion_holds"] = v.conclusion_holds;
  j["consistent"] = v.consistent;
  j["residuals"] = pairs_to_json(v.residuals);
  j["note"] = v.note;
  return j;
}

TheoremVerdict verdict_from_json(const Json& j, const std::string& p) {
  TheoremVerdict v;
  v.name = require_string(require_field(j, "name", p), p + "/name");
  v.hypothesis_holds = require_bool(require_field(j, "hypothesis_holds", p), p + "/hypothesis_holds");
  v.conclusion_holds = require_bool(require_field(j, "conclusion_holds", p), p + "/conclusion_holds");
  v.consistent = require_bool(require_field(j, "consistent", p), p + "/consistent");
  v.residuals = pairs_from_json(require_field(j, "residuals", p), p + "/residuals");
  v.note = require_string(require_field(j, "note", p), p + "/note");
  return v;
}

Json report_to_json(const AnalysisReport& r) {
  Json j;
  j["artifact"] = "qasym";
  j["artifact_version"] = r.artifact_version;
  j["format_version"] = r.format_version;
  j["seed"] = r.seed;
  Json tol;
  tol["peripheral"] = r.tolerances.peripheral;
  tol["rank"] = r.tolerances.rank;
  tol["residual"] = r.tolerances.residual;
  tol["psd"] = r.tolerances.psd;
  j["tolerances"] = std::move(tol);
  j["instance"] = r.instance;

  Json val = Json::array();
  for (const auto& c : r.validation) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["value"] = number_to_json(c.value);
    val.push_back(std::move(e));
  }
  j["validation"] = std::move(val);

  Json spec;
  spec["kind"] = r.spectrum_kind;
  spec["eigenvalues"] = complex_list(r.eigenvalues);
  spec["peripheral"] = complex_list(r.peripheral);
  spec["gap"] = number_to_json(r.gap);
  j["spectrum"] = std::move(spec);

  Json subs = Json::array();
  for (const auto& s : r.subspaces) {
    Json e;
    e["name"] = s.name;
    e["dim"] = s.dim;
    Json basis = Json::array();
    for (const auto& b : s.basis) basis.push_back(matrix_to_json(b));
    e["basis"] = std::move(basis);
    subs.push_back(std::move(e));
  }
  j["subspaces"] = std::move(subs);

  Json algs = Json::array();
  for (const auto& a : r.algebras) {
    Json e;
    e["name"] = a.name;
    e["dim"] = a.dim;
    e["star_closed"] = a.star_closed;
    e["product_closed"] = a.product_closed;
    e["contains_identity"] = a.contains_identity;
    e["center_dim"] = a.center_dim;
    e["is_factor"] = a.is_factor;
    e["star_residual"] = number_to_json(a.star_residual);
    e["product_residual"] = number_to_json(a.product_residual);
    algs.push_back(std::move(e));
  }
  j["algebras"] = std::move(algs);

  Json flags = Json::object();
  for (const auto& [k, v] : r.flags) flags[k] = v;
  j["flags"] = std::move(flags);
  j["metrics"] = pairs_to_json(r.metrics);

  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(verdicts);
  j["all_consistent"] = r.all_consistent();
  j["notes"] = r.notes;
  j["wall_clock_seconds"] = number_to_json(r.wall_clock_seconds);
  return j;
}

AnalysisReport report_from_json(const Json& j) {
  AnalysisReport r;
  r.artifact_version = require_string(require_field(j, "artifact_version", ""), "/artifact_version");
  r.format_version = static_cast<int>(require_integer(require_field(j, "format_version", ""), "/format_version"));
  if (r.format_version != kReportFormatVersion) {
    throw InputError("unsupported report format version " + std::to_string(r.format_version));
  }
  r.seed = require_unsigned(require_field(j, "seed", ""), "/seed");
  const Json& tol = require_field(j, "tolerances", "");
  r.tolerances.peripheral = number_from_json(require_field(tol, "peripheral", "/tolerances"), "/tolerances/peripheral");
  r.tolerances.rank = number_from_json(require_field(tol, "rank", "/tolerances"), "/tolerances/rank");
  r.tolerances.residual = number_from_json(require_field(tol, "residual", "/tolerances"), "/tolerances/residual");
  r.tolerances.psd = number_from_json(require_field(tol, "psd", "/tolerances"), "/tolerances/psd");
  r.instance = require_field(j, "instance", "");

  const Json& val = require_field(j, "validation", "");
  if (!val.is_array()) throw InputError("at /validation: expected an array");
  for (std::size_t i = 0; i < val.size(); ++i) {
    const std::string p = "/validation/" + std::to_string(i);
    CheckRecord c;
    c.name = require_string(require_field(val[i], "name", p), p + "/name");
    c.passed = require_bool(require_field(val[i], "passed", p), p + "/passed");
    c.value = number_from_json(require_field(val[i], "value", p), p + "/value");
    r.validation.push_back(std::move(c));
  }

  const Json& spec = require_field(j, "spectrum", "");
  r.spectrum_kind = require_string(require_field(spec, "kind", "/spectrum"), "/spectrum/kind");
  r.eigenvalues = complex_list_from(require_field(spec, "eigenvalues", "/spectrum"), "/spectrum/eigenvalues");
  r.peripheral = complex_list_from(require_field(spec, "peripheral", "/spectrum"), "/spectrum/peripheral");
  r.gap = number_from_json(require_field(spec, "gap", "/spectrum"), "/spectrum/gap",
                           std::numeric_limits<double>::infinity());

  const Json& subs = require_field(j, "subspaces", "");
  if (!subs.is_array()) throw InputError("at /subspaces: expected an array");
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const std::string p = "/subspaces/" + std::to_string(i);
    SubspaceRecord s;
    s.name = require_string(require_field(subs[i], "name", p), p + "/name");
    s.dim = index_from(require_field(subs[i], "dim", p), p + "/dim");
    const Json& basis = require_field(subs[i], "basis", p);
    if (!basis.is_array()) throw InputError("at " + p + "/basis: expected an array");
    for (std::size_t k = 0; k < basis.size(); ++k) {
      s.basis.push_back(matrix_from_json(basis[k], p + "/basis/" + std::to_string(k)));
    }
    r.subspaces.push_back(std::move(s));
  }

  const Json& algs = require_field(j, "algebras", "");
  if (!algs.is_array()) throw InputError("at /algebras: expected an array");
  for (std::size_t i = 0; i < algs.size(); ++i) {
    const std::string p = "/algebras/" + std::to_string(i);
    const Json& e = algs[i];
    AlgebraRecord a;
    a.name = require_string(require_field(e, "name", p), p + "/name");
    a.dim = index_from(require_field(e, "dim", p), p + "/dim");
    a.star_closed = require_bool(require_field(e, "star_closed", p), p + "/star_closed");
    a.product_closed = require_bool(require_field(e, "product_closed", p), p + "/product_closed");
    a.contains_identity = require_bool(require_field(e, "contains_identity", p), p + "/contains_identity");
    a.center_dim = index_from(require_field(e, "center_dim", p), p + "/center_dim");
    a.is_factor = require_bool(require_field(e, "is_factor", p), p + "/is_factor");
    a.star_residual = number_from_json(require_field(e, "star_residual", p), p + "/star_residual");
    a.product_residual = number_from_json(require_field(e, "product_residual", p), p + "/product_residual");
    r.algebras.push_back(std::move(a));
  }

  const Json& flags = require_field(j, "flags", "");
  if (!flags.is_object()) throw InputError("at /flags: expected an object");
  for (auto it = flags.begin(); it != flags.end(); ++it) {
    r.flags.emplace_back(it.key(), require_bool(it.value(), "/flags/" + it.key()));
  }
  r.metrics = pairs_from_json(require_field(j, "metrics", ""), "/metrics");

  const Json& verdicts = require_field(j, "verdicts", "");
  if (!verdicts.is_array()) throw InputError("at /verdicts: expected an array");
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    r.verdicts.push_back(verdict_from_json(verdicts[i], "/verdicts/" + std::to_string(i)));
  }
  const Json& notes = require_field(j, "notes", "");
  if (!notes.is_array()) throw InputError("at /notes: expected an array");
  for (std::size_t i = 0; i < notes.size(); ++i) {
    r.notes.push_back(require_string(notes[i], "/notes/" + std::to_string(i)));
  }
  r.wall_clock_seconds = number_from_json(require_field(j, "wall_clock_seconds", ""), "/wall_clock_seconds");
  return r;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize_report(const AnalysisReport& r) { return dump_json(report_to_json(r)); }

AnalysisReport parse_report(std::string_view text) {
  return report_from_json(parse_json_text(text, "<report>"));
}

}  // namespace qasym::harness
