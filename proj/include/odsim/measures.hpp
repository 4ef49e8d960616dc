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

#include <span>
#include <vector>

#include "odsim/gaussian_state.hpp"

namespace odsim {

/// One term w * Q of a linear quadrature combination.
struct QuadTerm {
    ModeLabel mode;
    Quadrature quadrature;
    double weight;
};

/// Variance of sum_i w_i Q_i. Throws InvalidInput on an empty combination or unknown mode.
double quad_combo_variance(const GaussianState& state, std::span<const QuadTerm> terms);
/// Expectation of sum_i w_i Q_i.
double quad_combo_mean(const GaussianState& state, std::span<const QuadTerm> terms);

/// <a^dag a> = (Var X + Var P)/2 + (<X>^2 + <P>^2)/2 - 1/2.
double mean_photon_number(const GaussianState& state, const ModeLabel& mode);

/// Tr(rho^2) = 1 / (2^N sqrt(det cov)). Throws NumericalDegeneracy on a singular covariance.
double purity(const GaussianState& state);

/// Williamson spectrum in ascending order, one value per mode. Physical states have all values >= 1/2.
std::vector<double> symplectic_eigenvalues(const GaussianState& state);

/// True when cov is a valid quantum covariance: smallest symplectic eigenvalue >= 1/2 - tolerance.
bool is_physical(const GaussianState& state, double tolerance = 1e-9);

/// Logarithmic negativity (base 2) across the bipartition first|second.
///
/// Modes in neither set are traced out. Throws InvalidInput for empty or overlapping sets.
double log_negativity(const GaussianState& state, std::span<const ModeLabel> first,
                      std::span<const ModeLabel> second);

}  // namespace odsim
