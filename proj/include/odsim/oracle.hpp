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

// Closed-form expressions for the Raman-coupled two-mode problem. Nothing in here touches
// GaussianState or the propagation engine, so these functions serve as an independent
// reference for both.
//
// Conventions: vacuum quadrature variance 1/2, so Var(X_a +- X_b) = 1 at the standard
// quantum limit; the squeezing parameter is r = artanh(eps) >= 0.

namespace odsim::oracle {

/// Variances of X_a + X_b and X_a - X_b.
struct VariancePair {
    double sum_var;
    double diff_var;
};

/// Two-mode squeezed vacuum: ((1 + eps)/(1 - eps), (1 - eps)/(1 + eps)).
VariancePair od_variances(double epsilon);

/// State after one deep sample, verbatim: ((1 + eps)^-2, (1 - eps)^-2).
VariancePair post_sample_variances(double epsilon);

/// The same quantity written through r: (e^{-2r}(1 + cosh 2r)/2, e^{2r}(1 + cosh 2r)/2).
/// Upper signs go together.
VariancePair post_sample_variances_hyperbolic(double r);

/// Mean of the geometric photon distribution (1 - eps^2) eps^{2n}: eps^2/(1 - eps^2).
double thermal_dark_mean(double epsilon);

/// Mean photon number of either mode of the two-mode squeezed vacuum (equal to thermal_dark_mean).
double tmsv_photon_number(double epsilon);

/// log2((1 + eps)/(1 - eps)).
double tmsv_log_negativity(double epsilon);

/// Var(X_B) for vacuum input: 1/2 + eps^2/(1 - eps^2) exp(-2 kappaZ / (1 + (omega/gamma)^2)).
double bright_variance(double epsilon, double kappa_z, double omega_over_gamma);

/// Magnitude of the resonant transfer function exp(-kappaZ/(1 - i omega/gamma)).
double beer_amplitude(double kappa_z, double omega_over_gamma);
/// Argument of the same factor: -kappaZ x/(1 + x^2) with x = omega/gamma.
double beer_phase(double kappa_z, double omega_over_gamma);

/// r = (1/2) ln((1 + eps)/(1 - eps)).
double squeezing_parameter(double epsilon);
/// eps = tanh r.
double coupling_ratio_from_squeezing(double r);

/// Dispersive phase kappa gamma12 dz / (delta - omega) acquired far from two-photon resonance.
/// Throws SingularInput at delta == omega.
double gem_phase(double kappa, double gamma12, double dz, double delta, double omega);

/// Photon numbers of the physical modes once the bright mode is vacuum and the dark mode
/// is still thermal with occupation eps^2/(1 - eps^2).
struct PhotonPair {
    double signal;
    double idler;
};
PhotonPair single_sample_photon_numbers(double epsilon);

/// Largest signal occupation reachable by a lossless phase shift of the bright mode of the
/// vacuum input: 4 eps^2 / (1 - eps^2)^2.
double max_dispersive_signal_photons(double epsilon);

}  // namespace odsim::oracle
