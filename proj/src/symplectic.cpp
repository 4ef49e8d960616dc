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

#include "odsim/symplectic.hpp"

#include <cmath>
#include <set>

#include "odsim/errors.hpp"

namespace odsim {

Matrix symplectic_form(std::size_t modes) {
    const auto dim = static_cast<Eigen::Index>(2 * modes);
    Matrix omega = Matrix::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; i += 2) {
        omega(i, i + 1) = 1.0;
        omega(i + 1, i) = -1.0;
    }
    return omega;
}

SymplecticTransform::SymplecticTransform(Matrix matrix, std::vector<ModeLabel> target_modes)
    : matrix_(std::move(matrix)), targets_(std::move(target_modes)) {
    if (targets_.empty()) {
        throw InvalidInput("a symplectic transform needs at least one target mode");
    }
    if (std::set<ModeLabel>(targets_.begin(), targets_.end()).size() != targets_.size()) {
        throw InvalidInput("duplicate target mode");
    }
    const auto dim = static_cast<Eigen::Index>(2 * targets_.size());
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw InvalidInput("transform matrix must be 2k x 2k for k target modes");
    }
    if (!matrix_.allFinite() || symplectic_residual() >= 1e-10) {
        throw InvalidInput("matrix violates the symplectic condition");
    }
}

double SymplecticTransform::symplectic_residual() const {
    const Matrix omega = symplectic_form(targets_.size());
    return (matrix_ * omega * matrix_.transpose() - omega).cwiseAbs().rowwise().sum().maxCoeff();
}

SymplecticTransform SymplecticTransform::inverse() const {
    const Matrix omega = symplectic_form(targets_.size());
    return SymplecticTransform(-omega * matrix_.transpose() * omega, targets_);
}

SymplecticTransform SymplecticTransform::retargeted(std::vector<ModeLabel> target_modes) const {
    return SymplecticTransform(matrix_, std::move(target_modes));
}

SymplecticTransform SymplecticTransform::after(const SymplecticTransform& other) const {
    if (other.targets_ != targets_) {
        throw InvalidInput("composed transforms must address the same modes in the same order");
    }
    return SymplecticTransform(matrix_ * other.matrix_, targets_);
}

SymplecticTransform bogoliubov_symplectic(double epsilon, const ModeLabel& signal, const ModeLabel& idler) {
    require_coupling_ratio(epsilon);
    const double inv_alpha0 = 1.0 / std::sqrt(1.0 - epsilon * epsilon);
    const double e = epsilon;
    Matrix s(4, 4);
    // Rows: X_B, P_B, X_D, P_D over (X_a, P_a, X_b, P_b).
    s << 1.0, 0.0, -e, 0.0,
         0.0, 1.0, 0.0, e,
         -e, 0.0, 1.0, 0.0,
         0.0, e, 0.0, 1.0;
    return SymplecticTransform(inv_alpha0 * s, {signal, idler});
}

SymplecticTransform phase_rotation(double theta, const ModeLabel& mode) {
    Matrix s(2, 2);
    s << std::cos(theta), -std::sin(theta),
         std::sin(theta), std::cos(theta);
    return SymplecticTransform(std::move(s), {mode});
}

SymplecticTransform single_mode_squeezer(double r, const ModeLabel& mode) {
    Matrix s = Matrix::Zero(2, 2);
    s(0, 0) = std::exp(-r);
    s(1, 1) = std::exp(r);
    return SymplecticTransform(std::move(s), {mode});
}

SymplecticTransform beam_splitter(double theta, double phi, const ModeLabel& first, const ModeLabel& second) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    Matrix m(4, 4);
    // a' = c a + s e^{i phi} b ; b' = c b - s e^{-i phi} a.
    m << c, 0.0, s * cp, -s * sp,
         0.0, c, s * sp, s * cp,
         -s * cp, -s * sp, c, 0.0,
         s * sp, -s * cp, 0.0, c;
    return SymplecticTransform(std::move(m), {first, second});
}

SymplecticTransform two_mode_squeezer(double r, const ModeLabel& first, const ModeLabel& second) {
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    Matrix m(4, 4);
    // a' = ch a + sh b^dag ; b' = ch b + sh a^dag.
    m << ch, 0.0, sh, 0.0,
         0.0, ch, 0.0, -sh,
         sh, 0.0, ch, 0.0,
         0.0, -sh, 0.0, ch;
    return SymplecticTransform(std::move(m), {first, second});
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticTransform& transform) {
    const auto dim = static_cast<Eigen::Index>(2 * state.mode_count());
    Matrix full = Matrix::Identity(dim, dim);
    std::vector<Eigen::Index> idx;
    for (const auto& label : transform.target_modes()) {
        const auto i = static_cast<Eigen::Index>(2 * state.index_of(label));
        idx.push_back(i);
        idx.push_back(i + 1);
    }
    const Matrix& s = transform.matrix();
    for (std::size_t r = 0; r < idx.size(); ++r) {
        full(idx[r], idx[r]) = 0.0;
    }
    for (std::size_t r = 0; r < idx.size(); ++r) {
        for (std::size_t c = 0; c < idx.size(); ++c) {
            full(idx[r], idx[c]) = s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    Vector mean = full * state.mean();
    Matrix cov = full * state.cov() * full.transpose();
    return GaussianState(state.mode_labels(), std::move(mean), std::move(cov));
}

}  // namespace odsim
