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

#include "odsim/medium.hpp"

#include <cmath>
#include <iterator>

#include "odsim/errors.hpp"
#include "odsim/parallel.hpp"
#include "odsim/symplectic.hpp"

namespace odsim {

EffectiveParams EffectiveParams::from_dimensionless(double epsilon, double kappa) {
    require_coupling_ratio(epsilon);
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw InvalidInput("kappa must be finite and non-negative");
    }
    return {1.0, epsilon, epsilon, std::sqrt(1.0 - epsilon * epsilon), kappa};
}

EffectiveParams derive_effective(const RawAtomParams& raw) {
    if (!(raw.gamma3 > 0.0 && raw.gamma12 > 0.0 && raw.length > 0.0 && raw.n0 > 0.0 && raw.c > 0.0)) {
        throw InvalidInput("gamma3, gamma12, length, n0 and c must be positive");
    }
    if (raw.delta_a == 0.0 || raw.delta_b == 0.0) {
        throw InvalidInput("one-photon detunings must be nonzero");
    }
    const double g_a = std::abs(raw.g31 * std::conj(raw.omega_a_rabi) / raw.delta_a);
    const double g_b = std::abs(raw.g32 * std::conj(raw.omega_b_rabi) / raw.delta_b);
    if (!(g_b < g_a)) {
        throw UnsupportedRegime("|g_b| must be smaller than |g_a| (epsilon < 1)");
    }
    EffectiveParams eff;
    eff.g_a = g_a;
    eff.g_b = g_b;
    eff.epsilon = g_b / g_a;
    eff.alpha0 = std::sqrt(1.0 - eff.epsilon * eff.epsilon);
    eff.kappa = eff.alpha0 * eff.alpha0 * raw.n0 * g_a * g_a / (raw.c * raw.gamma12);
    return eff;
}

AdiabaticReport validate_adiabatic(const RawAtomParams& raw, double t_interaction, double threshold) {
    AdiabaticReport report;
    const double da = std::abs(raw.delta_a);
    const double db = std::abs(raw.delta_b);
    report.gamma3_over_delta_a = raw.gamma3 / da;
    report.gamma3_over_delta_b = raw.gamma3 / db;
    report.rabi_a_over_delta_a = std::abs(raw.omega_a_rabi) / da;
    report.rabi_b_over_delta_b = std::abs(raw.omega_b_rabi) / db;
    report.pumping = std::norm(raw.omega_b_rabi) * raw.gamma3 * t_interaction / (db * db);
    report.threshold = threshold;
    report.pass = report.gamma3_over_delta_a <= threshold && report.gamma3_over_delta_b <= threshold &&
                  report.rabi_a_over_delta_a <= threshold && report.rabi_b_over_delta_b <= threshold &&
                  report.pumping <= threshold;
    return report;
}

ComplexTransmission transfer_function(const EffectiveParams& eff, double omega, double z, double gamma12,
                                      double detuning) {
    if (!(z >= 0.0)) {
        throw InvalidInput("propagation distance must be non-negative");
    }
    if (!(gamma12 > 0.0)) {
        throw InvalidInput("gamma12 must be positive");
    }
    const std::complex<double> denom(gamma12, -(omega - detuning));
    const std::complex<double> tau = std::exp(-eff.kappa * z * gamma12 / denom);
    // Rounding can push |tau| a hair above one when the exponent is essentially imaginary.
    return ComplexTransmission(std::abs(tau) > 1.0 ? tau / std::abs(tau) : tau);
}

namespace {

std::vector<Snapshot> propagate_one(const GaussianState& state, const EffectiveParams& eff, double gamma12,
                                    const PropagationGrid& grid, const DetuningProfile& profile,
                                    bool inverted, double omega) {
    const auto& labels = state.mode_labels();
    const SymplecticTransform to_bogoliubov = bogoliubov_symplectic(eff.epsilon, labels[0], labels[1]);
    const SymplecticTransform to_physical = to_bogoliubov.inverse();
    const ModeLabel& bright = inverted ? labels[1] : labels[0];

    std::vector<Snapshot> out;
    out.reserve(grid.z_steps + 1);
    out.push_back({0.0, omega, state});

    GaussianState modes = apply_symplectic(state, to_bogoliubov);
    const double dz = grid.length / static_cast<double>(grid.z_steps);
    for (std::size_t k = 0; k < grid.z_steps; ++k) {
        const double z_mid = (static_cast<double>(k) + 0.5) * dz;
        const ComplexTransmission tau = transfer_function(eff, omega, dz, gamma12, profile.at(z_mid));
        modes = complex_transmission_channel(modes, bright, tau);
        const double z = static_cast<double>(k + 1) * dz;
        out.push_back({z, omega, apply_symplectic(modes, to_physical)});
    }
    return out;
}

}  // namespace

std::vector<Snapshot> propagate(const GaussianState& state, const EffectiveParams& eff, double gamma12,
                                const PropagationGrid& grid, const DetuningProfile& profile,
                                bool sample_epsilon_inverted, unsigned threads) {
    if (state.mode_count() != 2) {
        throw InvalidInput("propagate expects a two-mode (signal, idler) state");
    }
    if (grid.z_steps < 1 || !(grid.length > 0.0)) {
        throw InvalidInput("propagation grid needs z_steps >= 1 and a positive length");
    }
    if (grid.omega_list.empty()) {
        throw InvalidInput("propagation grid needs at least one probe frequency");
    }
    for (double w : grid.omega_list) {
        if (!std::isfinite(w)) {
            throw InvalidInput("probe frequencies must be finite");
        }
    }
    require_coupling_ratio(eff.epsilon);

    std::vector<std::vector<Snapshot>> per_omega(grid.omega_list.size());
    parallel_for(grid.omega_list.size(), resolve_thread_count(threads), [&](std::size_t i) {
        per_omega[i] = propagate_one(state, eff, gamma12, grid, profile, sample_epsilon_inverted,
                                     grid.omega_list[i]);
    });

    std::vector<Snapshot> out;
    out.reserve(per_omega.size() * (grid.z_steps + 1));
    for (auto& block : per_omega) {
        std::move(block.begin(), block.end(), std::back_inserter(out));
    }
    return out;
}

GaussianState swap_sample(const GaussianState& state, const ModeLabel& light_mode, const ModeLabel& atom_mode) {
    if (light_mode == atom_mode) {
        throw InvalidInput("swap needs two distinct modes");
    }
    Matrix swap = Matrix::Zero(4, 4);
    swap.topRightCorner(2, 2).setIdentity();
    swap.bottomLeftCorner(2, 2).setIdentity();
    return apply_symplectic(state, SymplecticTransform(std::move(swap), {light_mode, atom_mode}));
}

}  // namespace odsim
