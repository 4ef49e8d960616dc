// Copyright 2026 The odsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "odsim/config.hpp"
#include "odsim/errors.hpp"
#include "odsim/report_io.hpp"
#include "odsim/runner.hpp"

using namespace odsim;
namespace fs = std::filesystem;

namespace {

std::string message_of(std::string_view text, std::vector<std::string> overrides = {}) {
    try {
        parse_config(text, overrides);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
  public:
    explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / ("odsim_test_" + name)) {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

  private:
    fs::path path_;
};

}  // namespace

TEST(Config, ParsesFullDocument) {
    const ScenarioConfig c = parse_config(R"({
        "scenario": "cascade", "epsilon": 0.3, "kappa_L": 25, "omega_over_gamma_list": [0, 1.5],
        "z_steps": 64, "input_state": "vacuum"})");
    EXPECT_EQ(c.scenario, ScenarioKind::cascade);
    EXPECT_EQ(c.epsilon, 0.3);
    EXPECT_EQ(c.kappa_L, 25.0);
    EXPECT_EQ(c.omega_over_gamma_list, (std::vector<double>{0.0, 1.5}));
    EXPECT_EQ(c.z_steps, 64u);
}

TEST(Config, MissingKeysTakeScenarioDefaults) {
    const ScenarioConfig c = parse_config(R"({"scenario": "gem"})");
    EXPECT_EQ(c.kappa_L, 200.0);
    EXPECT_EQ(c.z_steps, 2000u);
    EXPECT_EQ(c.input_state, InputKind::vacuum);
}

TEST(Config, ScalarFrequencyAndCoherentAmplitudes) {
    const ScenarioConfig c = parse_config(
        R"({"scenario": "preservation", "omega_over_gamma_list": 2, "input_state": "coherent",
            "alpha_B_re": 0.5, "alpha_D_im": -1})");
    EXPECT_EQ(c.omega_over_gamma_list, (std::vector<double>{2.0}));
    EXPECT_EQ(c.alpha_B, std::complex<double>(0.5, 0.0));
    EXPECT_EQ(c.alpha_D, std::complex<double>(0.0, -1.0));
}

TEST(Config, RejectsEpsilonOutOfRange) {
    EXPECT_EQ(message_of(R"({"scenario": "cascade", "epsilon": 1.2})"), "epsilon must be in [0,1)");
    EXPECT_EQ(message_of(R"({"scenario": "cascade", "epsilon": -0.1})"), "epsilon must be in [0,1)");
}

TEST(Config, RejectsUnknownKeys) {
    EXPECT_NE(message_of(R"({"scenario": "cascade", "kapa_L": 3})").find("kapa_L"), std::string::npos);
}

TEST(Config, UnknownScenarioListsValidNames) {
    const std::string msg = message_of(R"({"scenario": "echo"})");
    for (const char* name : {"preservation", "single_sample", "cascade", "gem", "memory_swap"}) {
        EXPECT_NE(msg.find(name), std::string::npos) << name;
    }
    EXPECT_FALSE(message_of(R"({"epsilon": 0.5})").empty());
}

TEST(Config, RejectsMalformedValues) {
    EXPECT_FALSE(message_of("[1, 2]").empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade", "epsilon": "half"})").empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade", "z_steps": 2.5})").empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade", "z_steps": 5})").empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade", "input_state": "squeezed"})").empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade", "omega_over_gamma_list": ["x"]})").empty());
    EXPECT_THROW(parse_config("{not json"), std::exception);
}

TEST(Config, OverridesReplaceValues) {
    const ScenarioConfig c = parse_config(R"({"scenario": "cascade"})",
                                          std::vector<std::string>{"epsilon=0.2", "omega_over_gamma_list=0,1,2",
                                                                   "input_state=tmsv", "scenario=preservation"});
    EXPECT_EQ(c.scenario, ScenarioKind::preservation);
    EXPECT_EQ(c.epsilon, 0.2);
    EXPECT_EQ(c.omega_over_gamma_list, (std::vector<double>{0.0, 1.0, 2.0}));
    EXPECT_EQ(c.input_state, InputKind::tmsv);
    EXPECT_FALSE(message_of(R"({"scenario": "cascade"})", {"epsilon"}).empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade"})", {"bogus=1"}).empty());
    EXPECT_FALSE(message_of(R"({"scenario": "cascade"})", {"omega_over_gamma_list=1,x"}).empty());
}

TEST(Config, CanonicalJsonRoundTrips) {
    ScenarioConfig c = ScenarioConfig::defaults_for(ScenarioKind::single_sample);
    c.omega_over_gamma_list = {0.0, 0.25};
    c.alpha_D = {0.1, 0.2};
    const ScenarioConfig back = parse_config(config_json(c));
    EXPECT_EQ(config_json(back), config_json(c));
    EXPECT_EQ(back.alpha_D, c.alpha_D);
}

TEST(ReportIo, NumberFormatting) {
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(3.0), "3");
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(ReportIo, CsvLayout) {
    ScenarioConfig c = ScenarioConfig::defaults_for(ScenarioKind::single_sample);
    c.z_steps = 10;
    const ScenarioReport r = run_scenario(c, 1);
    const std::string csv = report_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "sample,z,kappa_z,omega_over_gamma,var_xa_plus_xb,var_xa_minus_xb,var_pa_minus_pb,var_pa_plus_pb,"
              "var_x_B,var_x_D,nbar_a,nbar_b,purity,logneg_ab,logneg_BD,nbar_B,nbar_D,mean_x_B,mean_p_B");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}

TEST(ReportIo, SummaryContents) {
    const ScenarioReport r = run_scenario(ScenarioConfig::defaults_for(ScenarioKind::cascade), 1);
    const auto doc = nlohmann::json::parse(summary_json(r));
    EXPECT_EQ(doc["scenario"], "cascade");
    EXPECT_EQ(doc["tool_version"], std::string(kToolVersion));
    EXPECT_EQ(doc["conventions"]["vacuum_quadrature_variance"], 0.5);
    EXPECT_TRUE(doc["pass"].get<bool>());
    EXPECT_NEAR(doc["terminal"]["diff_var_terminal"].get<double>(), 1.0 / 3.0, 1e-6);
    for (const auto& check : doc["checks"]) {
        EXPECT_TRUE(check.contains("delta"));
        EXPECT_TRUE(check["pass"].get<bool>());
    }
    EXPECT_LT(doc["oracle_delta"].get<double>(), 1e-6);
}

TEST(ReportIo, SummaryRejectsNonFiniteValues) {
    ScenarioReport r;
    r.terminal.emplace_back("broken", std::nan(""));
    EXPECT_THROW(summary_json(r), NumericalDegeneracy);
}

TEST(ReportIo, AtomicWriteLeavesNoTemporary) {
    TempDir dir("atomic");
    write_file_atomic(dir.path() / "x.txt", "hello");
    EXPECT_EQ(slurp(dir.path() / "x.txt"), "hello");
    EXPECT_FALSE(fs::exists(dir.path() / "x.txt.tmp"));
    EXPECT_THROW(write_file_atomic(dir.path() / "missing" / "x.txt", "x"), ConfigError);
}

TEST(Runner, WritesDeterministicOutputs) {
    TempDir dir("runner");
    const fs::path config = dir.path() / "c.json";
    {
        std::ofstream(config) << R"({"scenario": "cascade", "omega_over_gamma_list": [0, 1], "z_steps": 20})";
    }
    const RunManifest first = run(config, dir.path() / "one", {}, 1);
    const RunManifest second = run(config, dir.path() / "two", {}, 4);
    EXPECT_TRUE(first.pass);
    EXPECT_EQ(first.files, (std::vector<std::string>{"cascade.csv", "summary.json", "manifest.json"}));
    for (const char* name : {"cascade.csv", "summary.json"}) {
        EXPECT_EQ(slurp(dir.path() / "one" / name), slurp(dir.path() / "two" / name)) << name;
    }
    const auto manifest = nlohmann::json::parse(slurp(dir.path() / "one" / "manifest.json"));
    EXPECT_EQ(manifest["tool_version"], std::string(kToolVersion));
    EXPECT_GE(manifest["duration_seconds"].get<double>(), 0.0);
}

TEST(Runner, ReportsMissingConfig) {
    TempDir dir("missing");
    EXPECT_THROW(run(dir.path() / "absent.json", dir.path() / "out", {}, 1), ConfigError);
}

TEST(Runner, ListScenarios) {
    const std::string text = list_scenarios(false);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
    const auto doc = nlohmann::json::parse(list_scenarios(true));
    ASSERT_TRUE(doc.is_array());
    EXPECT_EQ(doc.size(), 5u);
    EXPECT_EQ(doc[0], "preservation");
}
