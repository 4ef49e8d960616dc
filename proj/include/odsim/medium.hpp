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

#pragma once

#include <complex>
#include <vector>

#include "odsim/channels.hpp"
#include "odsim/gaussian_state.hpp"

namespace odsim {

/// Raw atomic and optical parameters of one Lambda-medium sample. Rates in rad/s, lengths in m.
struct RawAtomParams {
    double g31 = 0.0;
    double g32 = 0.0;
    std::complex<double> omega_a_rabi;
    std::complex<double> omega_b_rabi;
    double delta_a = 0.0;
    double delta_b = 0.0;
    double gamma3 = 0.0;
    double gamma12 = 0.0;
    double n0 = 0.0;      // linear atomic density, 1/m
    double length = 0.0;  // sample length
    double c = 299792458.0;
};

/// Couplings of the adiabatically eliminated beam-splitter Hamiltonian.
struct EffectiveParams {
    double g_a = 0.0;
    double g_b = 0.0;
    double epsilon = 0.0;  // g_b / g_a
    double alpha0 = 1.0;   // sqrt(1 - epsilon^2)
    double kappa = 0.0;    // absorption rate of the bright mode, 1/m

    /// Parameters fixed directly by epsilon and kappa, with g_a normalized to 1.
    static EffectiveParams from_dimensionless(double epsilon, double kappa);
};

/// g_a = g31 Omega_a^* / Delta_a, g_b = g32 Omega_b^* / Delta_b (phases absorbed),
/// kappa = alpha0^2 n0 |g_a|^2 / (c gamma12).
///
/// Throws InvalidInput on non-positive rates/lengths and UnsupportedRegime when |g_b| >= |g_a|.
EffectiveParams derive_effective(const RawAtomParams& raw);

/// Dimensionless small parameters of the adiabatic elimination.
struct AdiabaticReport {
    double gamma3_over_delta_a = 0.0;
    double gamma3_over_delta_b = 0.0;
    double rabi_a_over_delta_a = 0.0;
    double rabi_b_over_delta_b = 0.0;
    double pumping = 0.0;  // |Omega_b|^2 gamma3 t / Delta_b^2
    double threshold = 0.1;
    bool pass = false;  // every ratio <= threshold
};

AdiabaticReport validate_adiabatic(const RawAtomParams& raw, double t_interaction, double threshold = 0.1);

/// Position dependence of the two-photon detuning delta12(z).
struct DetuningProfile {
    enum class Kind { none, linear };
    Kind kind = Kind::none;
    double beta = 0.0;    // gradient, rad/s per m
    double center = 0.0;  // position of zero detuning

    static DetuningProfile none() { return {}; }
    /// delta12(z) = beta (z - center); center is L/2 for a symmetric gradient.
    static DetuningProfile linear(double beta, double center) { return {Kind::linear, beta, center}; }

    double at(double z) const { return kind == Kind::linear ? beta * (z - center) : 0.0; }
};

struct PropagationGrid {
    double length = 1.0;
    std::size_t z_steps = 1;
    std::vector<double> omega_list{0.0};
};

/// Bright-mode transmission exp(-kappa z gamma12 / (gamma12 - i (omega - detuning))).
///
/// At zero detuning this is the resonant Raman absorption exp(-kappa z / (1 - i omega/gamma12));
/// far from resonance it tends to a pure phase kappa gamma12 z / (detuning - omega).
/// Throws InvalidInput for z < 0 or gamma12 <= 0.
ComplexTransmission transfer_function(const EffectiveParams& eff, double omega, double z, double gamma12,
                                      double detuning);

struct Snapshot {
    double z;
    double omega;
    GaussianState state;
};

/// March a two-mode (signal, idler) state through one sample.
///
/// For every probe frequency the state is rotated into the bright/dark basis, the bright
/// mode goes through one exact transmission channel per slice (detuning frozen at the slice
/// midpoint) while the dark mode is untouched, and each snapshot is rotated back to the
/// physical modes. With `sample_epsilon_inverted` the roles of the Bogoliubov modes are
/// exchanged (second sample of the cascade). Snapshots are ordered frequency-major and
/// include z = 0. Frequencies are evaluated in parallel; the result does not depend on
/// the worker count.
std::vector<Snapshot> propagate(const GaussianState& state, const EffectiveParams& eff, double gamma12,
                                const PropagationGrid& grid, const DetuningProfile& profile,
                                bool sample_epsilon_inverted, unsigned threads = 0);

/// Idealized infinite-depth memory: exchange the light mode's moments with the atom mode's.
GaussianState swap_sample(const GaussianState& state, const ModeLabel& light_mode, const ModeLabel& atom_mode);

}  // namespace odsim
