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

#include <vector>

#include "odsim/gaussian_state.hpp"

namespace odsim {

/// Standard symplectic form: block-diagonal [[0, 1], [-1, 0]] per mode.
Matrix symplectic_form(std::size_t modes);

/// Linear quadrature map acting on an ordered subset of modes.
class SymplecticTransform {
  public:
    /// Throws InvalidInput if the shape is wrong or ||S Omega S^T - Omega||_inf >= 1e-10.
    SymplecticTransform(Matrix matrix, std::vector<ModeLabel> target_modes);

    const Matrix& matrix() const { return matrix_; }
    const std::vector<ModeLabel>& target_modes() const { return targets_; }

    /// ||S Omega S^T - Omega||_inf.
    double symplectic_residual() const;

    SymplecticTransform inverse() const;
    /// Same matrix addressed to other modes.
    SymplecticTransform retargeted(std::vector<ModeLabel> target_modes) const;
    /// this after other (other is applied first). Targets must agree.
    SymplecticTransform after(const SymplecticTransform& other) const;

  private:
    Matrix matrix_;
    std::vector<ModeLabel> targets_;
};

/// Map from the physical signal/idler pair (a, b) to the bright/dark pair (B, D).
///
/// Operator form B = (a - eps b^dag)/alpha0, D = (b - eps a^dag)/alpha0 with
/// alpha0 = sqrt(1 - eps^2). The vacuum of (B, D) is exactly tmsv_state(eps).
/// The output keeps the input labels; relabel if the (B, D) names are wanted.
SymplecticTransform bogoliubov_symplectic(double epsilon, const ModeLabel& signal = "a",
                                          const ModeLabel& idler = "b");

/// a -> exp(i theta) a.
SymplecticTransform phase_rotation(double theta, const ModeLabel& mode);
/// X -> e^{-r} X, P -> e^{r} P.
SymplecticTransform single_mode_squeezer(double r, const ModeLabel& mode);
/// a -> cos(t) a + e^{i phi} sin(t) b, b -> cos(t) b - e^{-i phi} sin(t) a.
SymplecticTransform beam_splitter(double theta, double phi, const ModeLabel& first, const ModeLabel& second);
/// Two-mode squeezer whose action on vacuum is tmsv_state(tanh r).
SymplecticTransform two_mode_squeezer(double r, const ModeLabel& first, const ModeLabel& second);

/// mean -> S mean, cov -> S cov S^T on the target modes; other modes are left alone.
GaussianState apply_symplectic(const GaussianState& state, const SymplecticTransform& transform);

}  // namespace odsim
