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


#include "qasym/harness/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "qasym/errors.hpp"
#include "qasym/random.hpp"

namespace qasym::harness {

Family parse_family(const std::string& name) {
  if (name == "unital") return Family::unital;
  if (name == "generic") return Family::generic;
  if (name == "gkls") return Family::gkls;
  throw InputError("unknown family \"" + name + "\" (expected unital, generic or gkls)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::unital:
      return "unital";
    case Family::generic:
      return "generic";
    case Family::gkls:
      return "gkls";
  }
  return "unknown";
}

void CampaignOptions::validate() const {
  if (trials < 1) throw InputError("campaign: trials must be at least 1");
  if (dim < 1 || dim > 8) throw InputError("campaign: dim must lie in 1..8");
  if (family == Family::unital && dim < 2) throw InputError("campaign: unital family needs dim >= 2");
  if (kraus < 1 || env < 1 || jumps < 0) throw InputError("campaign: bad family size parameter");
  tolerances.validate();
}

InstanceSpec campaign_instance(const CampaignOptions& opt, std::uint64_t trial_seed) {
  switch (opt.family) {
    case Family::unital:
      return random_unital_channel(opt.dim, opt.kraus, trial_seed);
    case Family::generic:
      return random_ucp(opt.dim, opt.env, trial_seed);
    case Family::gkls:
      return random_gkls_instance(opt.dim, opt.jumps, trial_seed);
  }
  throw InternalLogicError("campaign_instance: unknown family");
}

int CampaignSummary::exit_code() const {
  if (inconsistent > 0) return 3;
  if (numerical_failures > 0) return 2;
  return 0;
}

CampaignSummary run_campaign(const CampaignOptions& opt,
                             const std::function<void(const TrialRecord&)>& progress) {
  opt.validate();
  const auto start = std::chrono::steady_clock::now();
  CampaignSummary s;
  s.options = opt;
  for (Index i = 0; i < opt.trials; ++i) {
    TrialRecord t;
    t.index = i;
    t.seed = derive_seed(opt.seed, static_cast<std::uint64_t>(i));
    try {
      AnalysisOptions ao;
      ao.tolerances = opt.tolerances;
      ao.seed = t.seed;
      const AnalysisReport r = run_analysis(campaign_instance(opt, t.seed), ao);
      for (const auto& v : r.verdicts) {
        if (!v.consistent) t.inconsistent_verdicts.push_back(v.name);
        for (const auto& [k, x] : v.residuals) {
          auto& m = s.max_residuals[v.name + "." + k];
          if (std::isfinite(x)) m = std::max(m, x);
        }
      }
      t.status = t.inconsistent_verdicts.empty() ? "consistent" : "inconsistent";
      for (const auto& [k, v] : r.flags) {
        if (k == "faithful") t.faithful = v;
        if (k == "peripherally_automorphic") t.peripherally_automorphic = v;
      }
    } catch (const NumericalFailure& e) {
      t.status = "numerical_failure";
      t.error = e.what();
    } catch (const PropertyViolation& e) {
      t.status = "inconsistent";
      t.inconsistent_verdicts.push_back("property_violation");
      t.error = e.what();
    }
    if (t.status == "consistent") ++s.consistent;
    if (t.status == "inconsistent") ++s.inconsistent;
    if (t.status == "numerical_failure") ++s.numerical_failures;
    if (!t.peripherally_automorphic) s.non_pa_seeds.push_back(t.seed);
    if (progress) progress(t);
    s.trials.push_back(std::move(t));
  }
  s.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

Json campaign_to_json(const CampaignSummary& s) {
  Json j;
  j["artifact"] = "qasym";
  j["artifact_version"] = artifact_version();
  j["format_version"] = kReportFormatVersion;
  Json o;
  o["family"] = to_string(s.options.family);
  o["dim"] = s.options.dim;
  o["trials"] = s.options.trials;
  o["seed"] = s.options.seed;
  o["kraus"] = s.options.kraus;
  o["env"] = s.options.env;
  o["jumps"] = s.options.jumps;
  Json tol;
  tol["peripheral"] = s.options.tolerances.peripheral;
  tol["rank"] = s.options.tolerances.rank;
  tol["residual"] = s.options.tolerances.residual;
  tol["psd"] = s.options.tolerances.psd;
  o["tolerances"] = std::move(tol);
  j["options"] = std::move(o);
  j["consistent"] = s.consistent;
  j["inconsistent"] = s.inconsistent;
  j["numerical_failures"] = s.numerical_failures;
  Json res = Json::object();
  for (const auto& [k, v] : s.max_residuals) res[k] = number_to_json(v);
  j["max_residuals"] = std::move(res);
  j["non_pa_seeds"] = s.non_pa_seeds;
  Json trials = Json::array();
  for (const auto& t : s.trials) {
    Json e;
    e["index"] = t.index;
    e["seed"] = t.seed;
    e["status"] = t.status;
    e["faithful"] = t.faithful;
    e["peripherally_automorphic"] = t.peripherally_automorphic;
    e["inconsistent_verdicts"] = t.inconsistent_verdicts;
    if (!t.error.empty()) e["error"] = t.error;
    trials.push_back(std::move(e));
  }
  j["trials"] = std::move(trials);
  j["exit_code"] = s.exit_code();
  j["wall_clock_seconds"] = number_to_json(s.wall_clock_seconds);
  return j;
}

}  // namespace qasym::harness
