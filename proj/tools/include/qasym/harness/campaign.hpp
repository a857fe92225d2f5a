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


#ifndef QASYM_HARNESS_CAMPAIGN_HPP
#define QASYM_HARNESS_CAMPAIGN_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qasym/harness/analysis.hpp"

namespace qasym::harness {

enum class Family { unital, generic, gkls };

Family parse_family(const std::string& name);
std::string to_string(Family f);

struct CampaignOptions {
  Family family = Family::unital;
  Index dim = 2;
  Index trials = 1;
  std::uint64_t seed = 0;
  /// Unitaries per mixture (unital), environment size (generic), jumps (gkls).
  Index kraus = 3;
  Index env = 2;
  Index jumps = 2;
  Tolerances tolerances;

  void validate() const;
};

InstanceSpec campaign_instance(const CampaignOptions& opt, std::uint64_t trial_seed);

struct TrialRecord {
  Index index = 0;
  std::uint64_t seed = 0;
  /// "consistent", "inconsistent" or "numerical_failure".
  std::string status;
  std::vector<std::string> inconsistent_verdicts;
  bool peripherally_automorphic = true;
  bool faithful = false;
  std::string error;
};

struct CampaignSummary {
  CampaignOptions options;
  std::vector<TrialRecord> trials;
  /// "<verdict>.<residual>" -> max over trials.
  std::map<std::string, double> max_residuals;
  Index consistent = 0;
  Index inconsistent = 0;
  Index numerical_failures = 0;
  std::vector<std::uint64_t> non_pa_seeds;
  double wall_clock_seconds = 0.0;

  /// 3 on any inconsistent verdict, else 2 on any numerical failure, else 0.
  int exit_code() const;
};

/// Trial i uses derive_seed(seed, i). `progress` sees each finished trial in index order.
CampaignSummary run_campaign(const CampaignOptions& opt,
                             const std::function<void(const TrialRecord&)>& progress = {});

Json campaign_to_json(const CampaignSummary& s);

}  // namespace qasym::harness

#endif  // QASYM_HARNESS_CAMPAIGN_HPP
