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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace odsim {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ModeLabel = std::string;

enum class Quadrature { X, P };

/// Gaussian state of N labeled bosonic modes.
///
/// Quadratures are ordered (X1, P1, ..., XN, PN) with X = (a + a^dag)/sqrt(2) and
/// P = (a - a^dag)/(i sqrt(2)), so the vacuum has Var(X) = Var(P) = 1/2.
/// Values are immutable; every operation returns a new state.
class GaussianState {
  public:
    /// Throws InvalidInput on duplicate/empty labels, shape mismatch or an asymmetric covariance.
    GaussianState(std::vector<ModeLabel> labels, Vector mean, Matrix cov);

    const std::vector<ModeLabel>& mode_labels() const { return labels_; }
    std::size_t mode_count() const { return labels_.size(); }
    const Vector& mean() const { return mean_; }
    const Matrix& cov() const { return cov_; }

    bool has_mode(const ModeLabel& label) const;
    /// Position of the mode in label order. Throws InvalidInput if absent.
    std::size_t index_of(const ModeLabel& label) const;

    /// Complex amplitude <a> = (<X> + i<P>)/sqrt(2) of one mode.
    std::complex<double> amplitude(const ModeLabel& label) const;

    /// Same moments under new names (one per existing mode, in order).
    GaussianState relabeled(std::vector<ModeLabel> labels) const;
    /// Marginal on the listed modes, in the listed order.
    GaussianState reduced(std::span<const ModeLabel> labels) const;
    /// Product state this (x) other.
    GaussianState tensor(const GaussianState& other) const;
    /// Shift the mean of one mode by the coherent amplitude alpha.
    GaussianState displaced(const ModeLabel& label, std::complex<double> alpha) const;

  private:
    std::vector<ModeLabel> labels_;
    Vector mean_;
    Matrix cov_;
};

/// Throws UnphysicalParameter unless 0 <= epsilon < 1.
void require_coupling_ratio(double epsilon);

GaussianState vacuum_state(std::vector<ModeLabel> labels);

/// Independent thermal modes with mean occupation nbar each.
GaussianState thermal_state(std::vector<ModeLabel> labels, double nbar);

/// Two-mode squeezed vacuum sqrt(1 - eps^2) sum_n eps^n |n, n>.
///
/// Var(X1 + X2) = (1 + eps)/(1 - eps), Var(X1 - X2) = (1 - eps)/(1 + eps).
GaussianState tmsv_state(double epsilon, const ModeLabel& first = "a", const ModeLabel& second = "b");

}  // namespace odsim
