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

#include "odsim/channels.hpp"

#include <cmath>

#include "odsim/errors.hpp"

namespace odsim {

ComplexTransmission::ComplexTransmission(std::complex<double> amplitude) : amplitude_(amplitude) {
    if (!std::isfinite(amplitude.real()) || !std::isfinite(amplitude.imag())) {
        throw UnphysicalParameter("transmission amplitude must be finite");
    }
    if (std::abs(amplitude) > 1.0 + 1e-12) {
        throw UnphysicalParameter("|tau| must not exceed 1 (gain channels are not supported)");
    }
}

GaussianState complex_transmission_channel(const GaussianState& state, const ModeLabel& mode,
                                           ComplexTransmission tau) {
    const auto i = static_cast<Eigen::Index>(2 * state.index_of(mode));
    const double t = std::min(1.0, tau.magnitude());
    const double theta = tau.phase();
    Eigen::Matrix2d k;
    k << std::cos(theta), -std::sin(theta),
         std::sin(theta), std::cos(theta);
    k *= t;

    Vector mean = state.mean();
    mean.segment<2>(i) = k * mean.segment<2>(i);

    Matrix cov = state.cov();
    // Rows of the addressed mode, then columns; the diagonal block picks up K from both sides.
    cov.middleRows(i, 2) = (k * cov.middleRows(i, 2)).eval();
    cov.middleCols(i, 2) = (cov.middleCols(i, 2) * k.transpose()).eval();
    cov.block(i, i, 2, 2) += 0.5 * (1.0 - t * t) * Eigen::Matrix2d::Identity();
    return GaussianState(state.mode_labels(), std::move(mean), std::move(cov));
}

}  // namespace odsim
