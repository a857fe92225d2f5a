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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "qasym/errors.hpp"
#include "qasym/harness/analysis.hpp"
#include "qasym/harness/campaign.hpp"
#include "qasym/harness/instance.hpp"
#include "qasym/harness/report.hpp"
#include "qasym/harness/svg.hpp"
#include "qasym/spectral.hpp"

namespace qasym::harness {
namespace {

const std::filesystem::path kData = QASYM_TEST_DATA_DIR;

std::string without_wall_clock(const std::string& text) {
  return std::regex_replace(text, std::regex(".*wall_clock_seconds.*\n"), "");
}

int count(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

TEST(ParseInstance, DephasingFile) {
  const InstanceSpec s = parse_instance(kData / "dephasing.json");
  EXPECT_EQ(s.kind, InstanceKind::channel);
  EXPECT_EQ(s.dim, 2);
  EXPECT_EQ(s.picture, Picture::heisenberg);
  EXPECT_EQ(s.kraus.size(), 2u);
  EXPECT_FALSE(s.seed.has_value());
}

TEST(ParseInstance, GeneratorFile) {
  const InstanceSpec s = parse_instance(kData / "generator.json");
  EXPECT_EQ(s.kind, InstanceKind::generator);
  EXPECT_EQ(s.jumps.size(), 1u);
  ASSERT_TRUE(s.seed.has_value());
  EXPECT_EQ(*s.seed, 11u);
}

TEST(ParseInstance, NonSquareMatrixNamesThePointer) {
  try {
    parse_instance(kData / "malformed_3x2.json");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/kraus/0"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("3x2"), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, SyntaxErrorIsLineAnchored) {
  try {
    parse_instance(kData / "syntax_error.json");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("syntax_error.json:5:"), std::string::npos) << e.what();
  }
  try {
    parse_instance_text("{\n  \"kind\": \"channel\",\n  \"dim\": 2,,\n}", "inline");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("inline:3:"), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, SchemaErrors) {
  EXPECT_THROW(parse_instance(kData / "missing.json"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"banana"})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"channel","dim":2})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"channel","dim":2,"kraus":[[[[1,0]]]]})"), DimensionMismatch);
  EXPECT_THROW(parse_instance_text(R"({"kind":"channel","dim":1,"kraus":[[[[1,0]]]],"superoperator":[[[1,0]]]})"),
               InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"channel","dim":1,"kraus":[[[1]]]})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"channel","dim":1,"kraus":[[[[1,0]]]],"extra":1})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"generator","dim":1,"hamiltonian":[[[0,1]]]})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"pukanszky","n":2,"lambda":0.7})"), InputError);
  EXPECT_THROW(parse_instance_text(R"({"kind":"pukanszky","n":2,"lambda":0.3,"dim":4})"), DimensionMismatch);
  EXPECT_THROW(parse_instance_text(R"({"kind":"channel","dim":1,"kraus":[[[[1,0]]]],"seed":-3})"), InputError);
}

TEST(ParseInstance, PukanszkyForms) {
  const InstanceSpec a = parse_instance_text(R"({"kind":"pukanszky","n":2,"lambda":0.3})");
  EXPECT_EQ(a.dim, 16);
  EXPECT_DOUBLE_EQ(a.truncation.m_weights[1], 0.25);
  const InstanceSpec b =
      parse_instance_text(R"({"kind":"pukanszky","n":1,"lambda":0.5,"weights":{"m":[2.0],"n":[3.0]}})");
  EXPECT_EQ(b.weights, "explicit");
  EXPECT_DOUBLE_EQ(b.truncation.n_weights[0], 3.0);
  const InstanceSpec c = parse_instance_text(R"({"kind":"pukanszky","n":1,"lambda":0.5,"weights":"geometric:0.25"})");
  EXPECT_DOUBLE_EQ(c.truncation.m_weights[0], 0.25);
}

TEST(ParseInstance, SuperoperatorPayloadAndSchrodingerPicture) {
  const Superoperator s = channel_superop(parse_instance(kData / "dephasing.json"));
  InstanceSpec spec;
  spec.kind = InstanceKind::channel;
  spec.dim = 2;
  spec.picture = Picture::schrodinger;
  spec.superoperator = hs_adjoint(s);
  EXPECT_LT((channel_superop(spec).matrix() - s.matrix()).norm(), 1e-15);
  const InstanceSpec back = instance_from_json(instance_to_json(spec));
  EXPECT_LT((channel_superop(back).matrix() - s.matrix()).norm(), 1e-15);
}

TEST(InstanceJson, RoundTrip) {
  for (const char* f : {"dephasing.json", "generator.json", "non_pa.json"}) {
    const InstanceSpec s = parse_instance(kData / f);
    const Json j = instance_to_json(s);
    EXPECT_EQ(instance_to_json(instance_from_json(j)).dump(), j.dump()) << f;
  }
}

TEST(RandomInstances, Deterministic) {
  const InstanceSpec a = random_unital_channel(2, 3, 42);
  const InstanceSpec b = random_unital_channel(2, 3, 42);
  EXPECT_EQ(instance_to_json(a).dump(), instance_to_json(b).dump());
  const UcpReport r = validate_ucp(channel_superop(a));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(is_faithful(channel_superop(a)).faithful);
}

TEST(RandomInstances, SingleKrausAndTrivialEnvironmentAreUnitary) {
  for (const InstanceSpec& s : {random_unital_channel(3, 1, 5), random_ucp(3, 1, 6)}) {
    for (const auto& z : full_spectrum(channel_superop(s))) EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
  }
  EXPECT_TRUE(validate_ucp(channel_superop(random_ucp(2, 2, 8))).ok());
  EXPECT_NO_THROW(generator_of(random_gkls_instance(3, 2, 9)).validate());
}

TEST(Analysis, DephasingReport) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "dephasing.json"));
  EXPECT_NEAR(r.gap, 0.5, 1e-10);
  EXPECT_EQ(r.subspace("attr")->dim, 2);
  EXPECT_EQ(r.subspace("n")->dim, 2);
  EXPECT_EQ(r.subspace("n")->basis.size(), 2u);
  EXPECT_TRUE(r.flag("faithful"));
  EXPECT_TRUE(r.all_consistent());
  EXPECT_EQ(exit_code_for(r), 0);
}

TEST(Analysis, PureHamiltonianFlagsStrictness) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "pure_hamiltonian.json"));
  EXPECT_TRUE(r.flag("fix_strict"));
  EXPECT_TRUE(std::isinf(r.gap));
  EXPECT_EQ(r.subspace("kernel")->dim, 2);
  EXPECT_EQ(r.subspace("fix_unit_time")->dim, 4);
}

TEST(Analysis, NonUcpInputIsRejected) {
  EXPECT_THROW(run_analysis(parse_instance(kData / "non_ucp.json")), InputError);
}

TEST(Analysis, NonPaChannelIsReportedConsistently) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "non_pa.json"));
  EXPECT_FALSE(r.flag("peripherally_automorphic"));
  EXPECT_TRUE(r.all_consistent());
}

TEST(Analysis, PukanszkyReport) {
  InstanceSpec s = parse_instance_text(R"({"kind":"pukanszky","n":1,"lambda":0.3})");
  const AnalysisReport r = run_analysis(s);
  EXPECT_EQ(r.metric("dim_m"), 4.0);
  EXPECT_TRUE(r.flag("m_is_factor"));
  EXPECT_FALSE(r.flag("tracial"));
  EXPECT_TRUE(r.all_consistent());
  EXPECT_FALSE(r.notes.empty());
}

TEST(Report, RoundTripIsByteIdentical) {
  AnalysisOptions opt;
  opt.seed = 5;
  for (const char* f : {"dephasing.json", "generator.json", "pure_hamiltonian.json", "non_pa.json"}) {
    const std::string first = serialize_report(run_analysis(parse_instance(kData / f), opt));
    const std::string second = serialize_report(parse_report(first));
    EXPECT_EQ(first, second) << f;
  }
  const std::string p = serialize_report(run_analysis(parse_instance_text(R"({"kind":"pukanszky","n":1,"lambda":0.5})")));
  EXPECT_EQ(serialize_report(parse_report(p)), p);
}

TEST(Report, InfiniteGapIsNull) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "pure_hamiltonian.json"));
  const std::string text = serialize_report(r);
  EXPECT_NE(text.find("\"gap\": null"), std::string::npos);
  EXPECT_TRUE(std::isinf(parse_report(text).gap));
}

TEST(Report, DeterministicApartFromWallClock) {
  AnalysisOptions opt;
  opt.seed = 3;
  const InstanceSpec s = random_unital_channel(3, 2, 12);
  EXPECT_EQ(without_wall_clock(serialize_report(run_analysis(s, opt))),
            without_wall_clock(serialize_report(run_analysis(s, opt))));
}

TEST(Report, RejectsWrongFormatVersion) {
  std::string text = serialize_report(run_analysis(parse_instance(kData / "dephasing.json")));
  text = std::regex_replace(text, std::regex("\"format_version\": 1"), "\"format_version\": 99");
  EXPECT_THROW(parse_report(text), InputError);
}

TEST(Report, ExitCodeReflectsVerdicts) {
  AnalysisReport r;
  EXPECT_EQ(exit_code_for(r), 0);
  TheoremVerdict v;
  v.consistent = false;
  r.verdicts.push_back(v);
  EXPECT_EQ(exit_code_for(r), 3);
}

TEST(Campaign, ZeroTrialsIsAnInputError) {
  CampaignOptions o;
  o.trials = 0;
  EXPECT_THROW(run_campaign(o), InputError);
  EXPECT_THROW(parse_family("other"), InputError);
}

TEST(Campaign, DeterministicAndConsistent) {
  CampaignOptions o;
  o.family = Family::gkls;
  o.dim = 2;
  o.trials = 6;
  o.seed = 7;
  const std::string a = without_wall_clock(dump_json(campaign_to_json(run_campaign(o))));
  const std::string b = without_wall_clock(dump_json(campaign_to_json(run_campaign(o))));
  EXPECT_EQ(a, b);
  const CampaignSummary s = run_campaign(o);
  EXPECT_EQ(s.consistent, 6);
  EXPECT_EQ(s.exit_code(), 0);
  EXPECT_NE(s.trials[0].seed, s.trials[1].seed);
}

TEST(Campaign, FamiliesProduceValidInstances) {
  for (Family f : {Family::unital, Family::generic, Family::gkls}) {
    CampaignOptions o;
    o.family = f;
    o.dim = 3;
    o.trials = 3;
    o.seed = 1;
    const CampaignSummary s = run_campaign(o);
    EXPECT_EQ(s.exit_code(), 0) << to_string(f);
  }
}

TEST(Svg, DephasingMarkers) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "dephasing.json"));
  const std::string svg = render_spectrum_svg(r);
  EXPECT_EQ(count(svg, "class=\"peripheral\""), 2);
  EXPECT_EQ(count(svg, "class=\"bulk\""), 2);
  EXPECT_EQ(count(svg, "class=\"unit-circle\""), 1);
  EXPECT_NE(svg.find("gap = 0.5"), std::string::npos);
  EXPECT_EQ(svg, render_spectrum_svg(parse_report(serialize_report(r))));
}

TEST(Svg, GeneratorHasImaginaryAxis) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "generator.json"));
  const std::string svg = render_spectrum_svg(r);
  EXPECT_EQ(count(svg, "class=\"imaginary-axis\""), 1);
  EXPECT_EQ(count(svg, "class=\"unit-circle\""), 0);
}

TEST(Svg, UnitaryChannelMarkersOnCircle) {
  const AnalysisReport r = run_analysis(random_unital_channel(2, 1, 4));
  EXPECT_EQ(r.peripheral.size(), r.eigenvalues.size());
  EXPECT_EQ(count(render_spectrum_svg(r), "class=\"bulk\""), 0);
}

TEST(Svg, UnwritablePathThrows) {
  const AnalysisReport r = run_analysis(parse_instance(kData / "dephasing.json"));
  EXPECT_THROW(write_spectrum_svg(r, "/nonexistent-dir/x.svg"), InputError);
}

}  // namespace
}  // namespace qasym::harness
