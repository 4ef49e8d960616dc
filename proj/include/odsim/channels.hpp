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

#include "odsim/gaussian_state.hpp"

namespace odsim {

/// Complex amplitude transmission tau of a passive single-mode channel, |tau| <= 1.
class ComplexTransmission {
  public:
    /// Throws UnphysicalParameter if |tau| > 1 + 1e-12 (gain is not modeled).
    explicit ComplexTransmission(std::complex<double> amplitude);

    std::complex<double> amplitude() const { return amplitude_; }
    double magnitude() const { return std::abs(amplitude_); }
    double phase() const { return std::arg(amplitude_); }

  private:
    std::complex<double> amplitude_;
};

/// a -> tau a + sqrt(1 - |tau|^2) v with v in vacuum.
///
/// Implemented as a phase rotation by arg(tau) followed by pure loss |tau|^2:
/// the mode block becomes K cov K^T + (1 - |tau|^2)/2 I with K = |tau| R(arg tau),
/// cross blocks are multiplied by K and the mean by K.
GaussianState complex_transmission_channel(const GaussianState& state, const ModeLabel& mode,
                                           ComplexTransmission tau);

}  // namespace odsim
