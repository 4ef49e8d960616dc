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

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "odsim/errors.hpp"
#include "odsim/oracle.hpp"
#include "odsim/scenarios.hpp"

using namespace odsim;

namespace {

ScenarioConfig cfg(ScenarioKind kind) { return ScenarioConfig::defaults_for(kind); }

double terminal(const ScenarioReport& r, std::string_view key) {
    const auto v = r.terminal_value(key);
    EXPECT_TRUE(v.has_value()) << key;
    return v.value_or(std::nan(""));
}

const Check* find_check(const ScenarioReport& r, std::string_view name) {
    for (const auto& c : r.checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

}  // namespace

TEST(Scenarios, CatalogListsFiveScenarios) {
    ASSERT_EQ(scenario_catalog().size(), 5u);
    for (const auto& info : scenario_catalog()) {
        EXPECT_EQ(parse_scenario(info.name), info.kind);
        EXPECT_EQ(scenario_name(info.kind), info.name);
        EXPECT_FALSE(info.description.empty());
    }
    EXPECT_FALSE(parse_scenario("nope").has_value());
    EXPECT_EQ(parse_input("coherent"), InputKind::coherent);
    EXPECT_FALSE(parse_input("squeezed").has_value());
}

TEST(Scenarios, DefaultsPerScenario) {
    EXPECT_EQ(cfg(ScenarioKind::preservation).input_state, InputKind::tmsv);
    EXPECT_EQ(cfg(ScenarioKind::cascade).input_state, InputKind::vacuum);
    EXPECT_EQ(cfg(ScenarioKind::gem).z_steps, 2000u);
    EXPECT_EQ(cfg(ScenarioKind::gem).kappa_L, 200.0);
}

TEST(Scenarios, ValidationMessages) {
    ScenarioConfig c = cfg(ScenarioKind::cascade);
    c.epsilon = 1.2;
    try {
        validate(c);
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_STREQ(e.what(), "epsilon must be in [0,1)");
    }
    c = cfg(ScenarioKind::cascade);
    c.z_steps = 9;
    EXPECT_THROW(validate(c), ConfigError);
    c = cfg(ScenarioKind::cascade);
    c.omega_over_gamma_list.clear();
    EXPECT_THROW(validate(c), ConfigError);
    c = cfg(ScenarioKind::gem);
    c.beta_norm = 0.0;
    EXPECT_THROW(validate(c), ConfigError);
    c = cfg(ScenarioKind::single_sample);
    c.kappa_L = -1.0;
    EXPECT_THROW(run_scenario(c), ConfigError);
}

TEST(Scenarios, CheckKinds) {
    EXPECT_TRUE((Check{"x", 1.0, 1.05, 0.1, Check::Kind::equal}).pass());
    EXPECT_FALSE((Check{"x", 1.0, 1.2, 0.1, Check::Kind::equal}).pass());
    EXPECT_TRUE((Check{"x", 0.5, 1.0, 0.0, Check::Kind::at_most}).pass());
    EXPECT_FALSE((Check{"x", 0.5, 1.0, 0.0, Check::Kind::at_least}).pass());
}

TEST(Scenarios, PreservationKeepsTmsv) {
    for (double eps : {0.0, 0.5, 0.9}) {
        ScenarioConfig c = cfg(ScenarioKind::preservation);
        c.epsilon = eps;
        c.omega_over_gamma_list = {0.0, 1.0, -2.5};
        const ScenarioReport r = run_scenario(c, 1);
        EXPECT_TRUE(r.passed()) << eps;
        EXPECT_LT(terminal(r, "max_deviation"), 1e-9);
        EXPECT_EQ(r.rows.size(), 3u * (c.z_steps + 1));
    }
}

TEST(Scenarios, PreservationWithDarkCoherentAmplitude) {
    ScenarioConfig c = cfg(ScenarioKind::preservation);
    c.input_state = InputKind::coherent;
    c.alpha_D = {0.6, -0.3};
    const ScenarioReport r = run_scenario(c, 1);
    EXPECT_TRUE(r.passed());
    EXPECT_LT(terminal(r, "max_deviation"), 1e-9);
}

TEST(Scenarios, BrightCoherentAmplitudeFollowsBeerLaw) {
    ScenarioConfig c = cfg(ScenarioKind::preservation);
    c.input_state = InputKind::coherent;
    c.alpha_B = {1.0, 0.0};
    c.kappa_L = 2.0;
    c.omega_over_gamma_list = {0.0, 1.0};
    const ScenarioReport r = run_scenario(c, 1);
    const Check* beer = find_check(r, "bright_amplitude_vs_beer");
    ASSERT_NE(beer, nullptr);
    EXPECT_TRUE(beer->pass());
    const auto z = r.column("kappa_z");
    const auto w = r.column("omega_over_gamma");
    const auto xb = r.column("mean_x_B");
    const auto pb = r.column("mean_p_B");
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double amp = std::hypot(xb[i], pb[i]) / std::sqrt(2.0);
        EXPECT_NEAR(amp, oracle::beer_amplitude(z[i], w[i]), 1e-12);
    }
}

TEST(Scenarios, SingleSampleTerminalValues) {
    const ScenarioReport r = run_scenario(cfg(ScenarioKind::single_sample), 1);
    EXPECT_NEAR(terminal(r, "nbar_a_terminal"), 4.0 / 9.0, 1e-8);
    EXPECT_NEAR(terminal(r, "nbar_b_terminal"), 7.0 / 9.0, 1e-8);
    EXPECT_NEAR(terminal(r, "nbar_D_terminal"), 1.0 / 3.0, 1e-9);
    EXPECT_LT(terminal(r, "logneg_BD_terminal"), 1e-6);
    EXPECT_NEAR(terminal(r, "var_xa_plus_xb_terminal"), 4.0, 1e-8);
    EXPECT_NEAR(terminal(r, "var_xa_minus_xb_terminal"), 4.0 / 9.0, 1e-9);
    const Check* bright = find_check(r, "bright_variance_max_delta");
    ASSERT_NE(bright, nullptr);
    EXPECT_TRUE(bright->pass());
}

TEST(Scenarios, SingleSampleFrequencyDependence) {
    ScenarioConfig c = cfg(ScenarioKind::single_sample);
    c.kappa_L = 1.0;
    c.omega_over_gamma_list = {0.0, 1.0, 3.0};
    const ScenarioReport r = run_scenario(c, 1);
    const auto z = r.column("kappa_z");
    const auto w = r.column("omega_over_gamma");
    const auto vb = r.column("var_x_B");
    for (std::size_t i = 0; i < z.size(); ++i) {
        EXPECT_NEAR(vb[i], oracle::bright_variance(0.5, z[i], w[i]), 1e-9);
    }
}

TEST(Scenarios, CascadeTerminalAndMidpoint) {
    const ScenarioReport r = run_scenario(cfg(ScenarioKind::cascade), 1);
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(terminal(r, "sum_var_terminal"), 3.0, 1e-6);
    EXPECT_NEAR(terminal(r, "diff_var_terminal"), 1.0 / 3.0, 1e-6);
    EXPECT_NEAR(terminal(r, "purity_terminal"), 1.0, 1e-6);
    EXPECT_NEAR(terminal(r, "logneg_ab_terminal"), std::log2(3.0), 1e-6);
    EXPECT_NEAR(terminal(r, "nbar_a_terminal"), 1.0 / 3.0, 1e-6);
    EXPECT_NEAR(terminal(r, "nbar_a_midpoint"), 4.0 / 9.0, 1e-6);
    EXPECT_NEAR(terminal(r, "nbar_D_midpoint"), 1.0 / 3.0, 1e-6);

    const ScenarioReport single = run_scenario(cfg(ScenarioKind::single_sample), 1);
    EXPECT_NEAR(terminal(r, "var_xa_plus_xb_midpoint"), terminal(single, "var_xa_plus_xb_terminal"), 1e-12);
}

TEST(Scenarios, CascadeAcrossCouplingRatios) {
    for (double eps : {0.1, 0.3, 0.7}) {
        ScenarioConfig c = cfg(ScenarioKind::cascade);
        c.epsilon = eps;
        c.kappa_L = 30.0;
        const ScenarioReport r = run_scenario(c, 1);
        EXPECT_TRUE(r.passed()) << eps;
        EXPECT_NEAR(terminal(r, "sum_var_terminal"), oracle::od_variances(eps).sum_var, 1e-6);
    }
}

TEST(Scenarios, CascadeNeedsEnoughDepth) {
    ScenarioConfig c = cfg(ScenarioKind::cascade);
    c.kappa_L = 0.5;
    EXPECT_FALSE(run_scenario(c, 1).passed());
}

TEST(Scenarios, RowsStayPhysical) {
    for (auto kind : {ScenarioKind::single_sample, ScenarioKind::cascade}) {
        ScenarioConfig c = cfg(kind);
        c.epsilon = 0.9;
        c.omega_over_gamma_list = {0.0, 2.0};
        const ScenarioReport r = run_scenario(c, 1);
        for (double p : r.column("purity")) {
            EXPECT_LE(p, 1.0 + 1e-9);
            EXPECT_GT(p, 0.0);
        }
        for (double v : r.column("var_x_D")) {
            EXPECT_GE(v, 0.5 - 1e-9);
        }
    }
}

TEST(Scenarios, ResonantResultsIndependentOfStepCount) {
    ScenarioConfig coarse = cfg(ScenarioKind::cascade);
    coarse.z_steps = 10;
    ScenarioConfig fine = cfg(ScenarioKind::cascade);
    fine.z_steps = 400;
    const ScenarioReport a = run_scenario(coarse, 1);
    const ScenarioReport b = run_scenario(fine, 1);
    for (std::string_view key : {"sum_var_terminal", "diff_var_terminal", "nbar_a_midpoint", "logneg_ab_terminal"}) {
        EXPECT_NEAR(terminal(a, key), terminal(b, key), 1e-12) << key;
    }
}

TEST(Scenarios, GemDefaultRun) {
    const ScenarioReport r = run_scenario(cfg(ScenarioKind::gem), 1);
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(terminal(r, "nbar_a_initial"), 0.0, 1e-12);
    EXPECT_GE(terminal(r, "nbar_a_peak_before_center"), 0.5);
    EXPECT_LE(terminal(r, "nbar_a_peak"), 16.0 / 9.0);
    EXPECT_NEAR(terminal(r, "nbar_a_plateau"), 4.0 / 9.0, 1e-3);
}

TEST(Scenarios, GemConvergesUnderRefinement) {
    ScenarioConfig c = cfg(ScenarioKind::gem);
    const auto trajectory = [&](std::size_t steps) {
        c.z_steps = steps;
        ScenarioConfig plain = c;
        return run_scenario(plain, 1).column("nbar_a");
    };
    const auto reference = trajectory(4000);
    const auto error = [&](std::size_t steps) {
        const auto n = trajectory(steps);
        const std::size_t stride = 4000 / steps;
        double worst = 0.0;
        for (std::size_t k = 0; k < n.size(); ++k) {
            worst = std::max(worst, std::abs(n[k] - reference[k * stride]));
        }
        return worst;
    };
    const double e1 = error(250);
    const double e2 = error(500);
    const double e3 = error(1000);
    RecordProperty("ratio_250_500", std::to_string(e1 / e2));
    RecordProperty("ratio_500_1000", std::to_string(e2 / e3));
    EXPECT_LT(e3, e2);
    EXPECT_LT(e2, e1);
    EXPECT_GE(e2 / e3, 1.8);
}

TEST(Scenarios, MemorySwapMovesEntanglement) {
    const ScenarioReport r = run_scenario(cfg(ScenarioKind::memory_swap), 1);
    EXPECT_TRUE(r.passed());
    EXPECT_NEAR(terminal(r, "logneg_S1S2_terminal"), std::log2(3.0), 1e-9);
    EXPECT_LT(terminal(r, "logneg_light_atoms_terminal"), 1e-9);
    EXPECT_EQ(r.rows.size(), 3u);
}

TEST(Scenarios, MemorySwapWithoutCouplingStoresNothing) {
    ScenarioConfig c = cfg(ScenarioKind::memory_swap);
    c.epsilon = 0.0;
    const ScenarioReport r = run_scenario(c, 1);
    EXPECT_NEAR(terminal(r, "logneg_S1S2_terminal"), 0.0, 1e-12);
}

TEST(Scenarios, ThreadCountDoesNotChangeRows) {
    ScenarioConfig c = cfg(ScenarioKind::cascade);
    c.omega_over_gamma_list = {-1.0, 0.0, 0.5, 2.0};
    EXPECT_EQ(run_scenario(c, 1).rows, run_scenario(c, 4).rows);
}
