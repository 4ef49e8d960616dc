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

#include <array>
#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "odsim/channels.hpp"
#include "odsim/errors.hpp"
#include "odsim/measures.hpp"

using namespace odsim;
using cd = std::complex<double>;

TEST(Channels, UnitTransmissionIsIdentity) {
    const GaussianState s = tmsv_state(0.5).displaced("a", {0.2, 0.1});
    const GaussianState out = complex_transmission_channel(s, "a", ComplexTransmission(1.0));
    EXPECT_TRUE(out.cov().isApprox(s.cov(), 1e-15));
    EXPECT_TRUE(out.mean().isApprox(s.mean(), 1e-15));
}

TEST(Channels, ZeroTransmissionResetsModeToVacuum) {
    const GaussianState s = tmsv_state(0.5).displaced("a", {1.0, 0.0});
    const GaussianState out = complex_transmission_channel(s, "a", ComplexTransmission(0.0));
    EXPECT_NEAR(out.cov()(0, 0), 0.5, 1e-15);
    EXPECT_NEAR(out.cov()(1, 1), 0.5, 1e-15);
    EXPECT_EQ(out.cov()(0, 2), 0.0);
    EXPECT_EQ(out.cov()(1, 3), 0.0);
    EXPECT_EQ(out.amplitude("a"), cd(0.0, 0.0));
    EXPECT_NEAR(out.cov()(2, 2), s.cov()(2, 2), 1e-15);
}

TEST(Channels, ThermalDecay) {
    const GaussianState out =
        complex_transmission_channel(thermal_state({"a"}, 1.0), "a", ComplexTransmission(std::sqrt(0.5)));
    EXPECT_NEAR(out.cov()(0, 0), 1.0, 1e-14);
    EXPECT_NEAR(mean_photon_number(out, "a"), 0.5, 1e-14);
}

TEST(Channels, VacuumIsFixedForAnyTransmission) {
    for (cd tau : {cd(0.3, 0.4), cd(-0.9, 0.0), cd(0.0, 1.0), cd(0.1, -0.05)}) {
        const GaussianState out = complex_transmission_channel(vacuum_state({"a", "b"}), "b", ComplexTransmission(tau));
        EXPECT_LT((out.cov() - 0.5 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-15);
    }
}

TEST(Channels, AmplitudeMultipliedByTau) {
    const cd alpha(0.7, -0.2);
    const cd tau = std::polar(0.6, 1.1);
    const GaussianState out =
        complex_transmission_channel(vacuum_state({"a"}).displaced("a", alpha), "a", ComplexTransmission(tau));
    EXPECT_NEAR(std::abs(out.amplitude("a") - tau * alpha), 0.0, 1e-14);
}

TEST(Channels, CrossCorrelationsScaleWithMagnitude) {
    const GaussianState s = tmsv_state(0.5);
    const GaussianState out = complex_transmission_channel(s, "a", ComplexTransmission(0.5));
    EXPECT_NEAR(out.cov()(0, 2), 0.5 * s.cov()(0, 2), 1e-15);
}

TEST(Channels, PhaseOnlyChannelIsUnitary) {
    const GaussianState s = tmsv_state(0.5);
    const GaussianState out = complex_transmission_channel(s, "b", ComplexTransmission(std::polar(1.0, 0.8)));
    EXPECT_NEAR(purity(out), 1.0, 1e-12);
    const std::array<ModeLabel, 1> a{"a"};
    const std::array<ModeLabel, 1> b{"b"};
    EXPECT_NEAR(log_negativity(out, a, b), std::log2(3.0), 1e-12);
}

TEST(Channels, RejectsGainAndNonFinite) {
    EXPECT_THROW(ComplexTransmission(cd(1.01, 0.0)), UnphysicalParameter);
    EXPECT_THROW(ComplexTransmission(cd(std::nan(""), 0.0)), UnphysicalParameter);
    EXPECT_NO_THROW(ComplexTransmission(cd(1.0 + 1e-13, 0.0)));
    EXPECT_THROW(complex_transmission_channel(vacuum_state({"a"}), "z", ComplexTransmission(0.5)), InvalidInput);
}
