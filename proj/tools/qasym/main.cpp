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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qasym/errors.hpp"
#include "qasym/harness/analysis.hpp"
#include "qasym/harness/campaign.hpp"
#include "qasym/harness/instance.hpp"
#include "qasym/harness/report.hpp"
#include "qasym/harness/svg.hpp"

namespace {

using namespace qasym;
using namespace qasym::harness;

// flag > QASYM_SEED > instance file > 0
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag,
                           const std::optional<std::uint64_t>& file) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QASYM_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const unsigned long long v = std::stoull(s, &used, 0);
      if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError(std::string("QASYM_SEED is not a non-negative integer: ") + env);
    }
  }
  return file.value_or(0);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path.string() + ": cannot write");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

void print_summary(const AnalysisReport& r) {
  std::cerr << "spectrum: " << r.eigenvalues.size() << " eigenvalues, " << r.peripheral.size()
            << " peripheral, gap " << r.gap << "\n";
  for (const auto& s : r.subspaces) std::cerr << "dim " << s.name << " = " << s.dim << "\n";
  for (const auto& v : r.verdicts) {
    std::cerr << (v.consistent ? "consistent   " : "INCONSISTENT ") << v.name
              << " (hypothesis " << v.hypothesis_holds << ", conclusion " << v.conclusion_holds
              << ")\n";
  }
}

int emit_report(const AnalysisReport& r, const std::string& out, const std::string& svg) {
  const std::string text = serialize_report(r);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  if (!svg.empty()) write_spectrum_svg(r, svg);
  print_summary(r);
  return exit_code_for(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qasym: asymptotics and decoherence-free algebras of quantum dynamics"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print artifact and report format version");

  std::string file;
  std::string out;
  std::string svg;
  double tol_peripheral = Tolerances{}.peripheral;
  double tol_residual = Tolerances{}.residual;
  std::optional<std::uint64_t> seed_flag;

  auto* analyze = app.add_subcommand("analyze", "Analyze one instance file");
  analyze->add_option("file", file, "Instance JSON")->required();
  analyze->add_option("--out", out, "Write the report here instead of stdout");
  analyze->add_option("--svg", svg, "Write the spectrum figure");
  analyze->add_option("--tol-peripheral", tol_peripheral, "Peripheral spectrum tolerance");
  analyze->add_option("--tol-residual", tol_residual, "Residual tolerance");
  analyze->add_option("--seed", seed_flag, "Seed for random test vectors");

  std::string family = "unital";
  Index dim = 2;
  long long trials = 1;
  CampaignOptions copt;
  auto* campaign = app.add_subcommand("campaign", "Run a seeded theorem campaign");
  campaign->add_option("--family", family, "unital | generic | gkls")->required();
  campaign->add_option("--dim", dim, "Hilbert space dimension")->required();
  campaign->add_option("--trials", trials, "Number of instances")->required();
  campaign->add_option("--seed", seed_flag, "Base seed");
  campaign->add_option("--kraus", copt.kraus, "Unitaries per mixture (unital)");
  campaign->add_option("--env", copt.env, "Environment dimension (generic)");
  campaign->add_option("--jumps", copt.jumps, "Jump operators (gkls)");
  campaign->add_option("--out", out, "Write the campaign report here instead of stdout");
  campaign->add_option("--tol-peripheral", tol_peripheral, "Peripheral spectrum tolerance");
  campaign->add_option("--tol-residual", tol_residual, "Residual tolerance");

  int pn = 1;
  double lambda = 0.5;
  std::string weights = "geometric:0.5";
  auto* pukanszky = app.add_subcommand("pukanszky", "Finite truncation checks of the factor construction");
  pukanszky->add_option("--n", pn, "Bits per register (1..3)")->required();
  pukanszky->add_option("--lambda", lambda, "Bias of the product measure, in (0, 1/2]")->required();
  pukanszky->add_option("--weights", weights, "geometric:<ratio>");
  pukanszky->add_option("--out", out, "Write the report here instead of stdout");
  pukanszky->add_option("--seed", seed_flag, "Seed for random algebra elements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (show_version) {
      std::cout << "qasym " << artifact_version() << " (report format " << kReportFormatVersion
                << ")\n";
      return 0;
    }
    Tolerances tol;
    tol.peripheral = tol_peripheral;
    tol.residual = tol_residual;
    tol.validate();

    if (analyze->parsed()) {
      const InstanceSpec spec = parse_instance(file);
      AnalysisOptions opt;
      opt.tolerances = tol;
      opt.seed = resolve_seed(seed_flag, spec.seed);
      return emit_report(run_analysis(spec, opt), out, svg);
    }
    if (campaign->parsed()) {
      copt.family = parse_family(family);
      copt.dim = dim;
      if (trials < 0) throw InputError("campaign: trials must be at least 1");
      copt.trials = static_cast<Index>(trials);
      copt.seed = resolve_seed(seed_flag, std::nullopt);
      copt.tolerances = tol;
      const CampaignSummary s = run_campaign(copt, [](const TrialRecord& t) {
        if (t.status != "consistent") {
          std::cerr << t.status << ": trial " << t.index << " seed " << t.seed;
          for (const auto& v : t.inconsistent_verdicts) std::cerr << " " << v;
          if (!t.error.empty()) std::cerr << " (" << t.error << ")";
          std::cerr << "\n";
        }
      });
      const std::string text = dump_json(campaign_to_json(s));
      if (out.empty()) {
        std::cout << text;
      } else {
        write_text(out, text);
      }
      for (const auto seed : s.non_pa_seeds) std::cerr << "non-PA instance at seed " << seed << "\n";
      std::cerr << s.consistent << " consistent, " << s.inconsistent << " inconsistent, "
                << s.numerical_failures << " numerical failures\n";
      return s.exit_code();
    }
    if (pukanszky->parsed()) {
      InstanceSpec spec;
      spec.kind = InstanceKind::pukanszky;
      spec.weights = weights;
      spec.truncation = truncation_from_weights(pn, lambda, weights);
      spec.dim = spec.truncation.dim();
      AnalysisOptions opt;
      opt.tolerances = tol;
      opt.seed = resolve_seed(seed_flag, std::nullopt);
      spec.seed = opt.seed;
      return emit_report(run_analysis(spec, opt), out, "");
    }
    std::cout << app.help();
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const PropertyViolation& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 3;
  }
}
