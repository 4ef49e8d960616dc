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

#include "odsim/oracle.hpp"

#include <cmath>

#include "odsim/errors.hpp"
#include "odsim/gaussian_state.hpp"

namespace odsim::oracle {

VariancePair od_variances(double epsilon) {
    require_coupling_ratio(epsilon);
    return {(1.0 + epsilon) / (1.0 - epsilon), (1.0 - epsilon) / (1.0 + epsilon)};
}

VariancePair post_sample_variances(double epsilon) {
    require_coupling_ratio(epsilon);
    const double up = 1.0 + epsilon;
    const double down = 1.0 - epsilon;
    return {1.0 / (up * up), 1.0 / (down * down)};
}

VariancePair post_sample_variances_hyperbolic(double r) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
        throw UnphysicalParameter("squeezing parameter must be finite and non-negative");
    }
    const double dressing = 0.5 * (1.0 + std::cosh(2.0 * r));
    return {std::exp(-2.0 * r) * dressing, std::exp(2.0 * r) * dressing};
}

double thermal_dark_mean(double epsilon) {
    require_coupling_ratio(epsilon);
    return epsilon * epsilon / (1.0 - epsilon * epsilon);
}

double tmsv_photon_number(double epsilon) {
    require_coupling_ratio(epsilon);
    const double alpha0_sq = 1.0 - epsilon * epsilon;
    return epsilon * epsilon / alpha0_sq;
}

double tmsv_log_negativity(double epsilon) {
    require_coupling_ratio(epsilon);
    return std::log2((1.0 + epsilon) / (1.0 - epsilon));
}

double bright_variance(double epsilon, double kappa_z, double omega_over_gamma) {
    require_coupling_ratio(epsilon);
    if (!(kappa_z >= 0.0)) {
        throw InvalidInput("optical depth must be non-negative");
    }
    const double excess = epsilon * epsilon / (1.0 - epsilon * epsilon);
    return 0.5 + excess * std::exp(-2.0 * kappa_z / (1.0 + omega_over_gamma * omega_over_gamma));
}

double beer_amplitude(double kappa_z, double omega_over_gamma) {
    return std::exp(-kappa_z / (1.0 + omega_over_gamma * omega_over_gamma));
}

double beer_phase(double kappa_z, double omega_over_gamma) {
    return -kappa_z * omega_over_gamma / (1.0 + omega_over_gamma * omega_over_gamma);
}

double squeezing_parameter(double epsilon) {
    require_coupling_ratio(epsilon);
    return 0.5 * std::log((1.0 + epsilon) / (1.0 - epsilon));
}

double coupling_ratio_from_squeezing(double r) { return std::tanh(r); }

double gem_phase(double kappa, double gamma12, double dz, double delta, double omega) {
    if (delta == omega) {
        throw SingularInput("gem_phase is singular on two-photon resonance; use the full transfer function");
    }
    return kappa * gamma12 * dz / (delta - omega);
}

PhotonPair single_sample_photon_numbers(double epsilon) {
    const double n_dark = thermal_dark_mean(epsilon);
    const double alpha0_sq = 1.0 - epsilon * epsilon;
    const double eps2 = epsilon * epsilon;
    // a = (B + eps D^dag)/alpha0, b = (D + eps B^dag)/alpha0 with <B^dag B> = 0, <B B^dag> = 1.
    return {eps2 * (n_dark + 1.0) / alpha0_sq, (n_dark + eps2) / alpha0_sq};
}

double max_dispersive_signal_photons(double epsilon) {
    require_coupling_ratio(epsilon);
    const double alpha0_sq = 1.0 - epsilon * epsilon;
    return 4.0 * epsilon * epsilon / (alpha0_sq * alpha0_sq);
}

}  // namespace odsim::oracle
