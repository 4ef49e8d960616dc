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

#include "odsim/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "odsim/errors.hpp"

namespace odsim {

namespace {

void check_labels(const std::vector<ModeLabel>& labels) {
    if (labels.empty()) {
        throw InvalidInput("a Gaussian state needs at least one mode");
    }
    std::set<ModeLabel> seen;
    for (const auto& label : labels) {
        if (!seen.insert(label).second) {
            throw InvalidInput("duplicate mode label '" + label + "'");
        }
    }
}

}  // namespace

GaussianState::GaussianState(std::vector<ModeLabel> labels, Vector mean, Matrix cov)
    : labels_(std::move(labels)), mean_(std::move(mean)), cov_(std::move(cov)) {
    check_labels(labels_);
    const auto dim = static_cast<Eigen::Index>(2 * labels_.size());
    if (mean_.size() != dim || cov_.rows() != dim || cov_.cols() != dim) {
        throw InvalidInput("mean/covariance dimensions do not match 2 x mode count");
    }
    if (!mean_.allFinite() || !cov_.allFinite()) {
        throw InvalidInput("non-finite moments");
    }
    const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw InvalidInput("covariance matrix is not symmetric");
    }
    // Remove rounding asymmetry so downstream eigen-solvers see an exactly symmetric matrix.
    cov_ = 0.5 * (cov_ + cov_.transpose()).eval();
}

bool GaussianState::has_mode(const ModeLabel& label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t GaussianState::index_of(const ModeLabel& label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw InvalidInput("unknown mode '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::complex<double> GaussianState::amplitude(const ModeLabel& label) const {
    const auto i = static_cast<Eigen::Index>(2 * index_of(label));
    return {mean_(i) / std::numbers::sqrt2, mean_(i + 1) / std::numbers::sqrt2};
}

GaussianState GaussianState::relabeled(std::vector<ModeLabel> labels) const {
    if (labels.size() != labels_.size()) {
        throw InvalidInput("relabeling must name every mode exactly once");
    }
    return GaussianState(std::move(labels), mean_, cov_);
}

GaussianState GaussianState::reduced(std::span<const ModeLabel> labels) const {
    std::vector<Eigen::Index> idx;
    idx.reserve(2 * labels.size());
    for (const auto& label : labels) {
        const auto i = static_cast<Eigen::Index>(2 * index_of(label));
        idx.push_back(i);
        idx.push_back(i + 1);
    }
    const auto n = static_cast<Eigen::Index>(idx.size());
    Vector m(n);
    Matrix c(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        m(r) = mean_(idx[r]);
        for (Eigen::Index s = 0; s < n; ++s) {
            c(r, s) = cov_(idx[r], idx[s]);
        }
    }
    return GaussianState({labels.begin(), labels.end()}, std::move(m), std::move(c));
}

GaussianState GaussianState::tensor(const GaussianState& other) const {
    std::vector<ModeLabel> labels = labels_;
    labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
    const auto n1 = mean_.size();
    const auto n2 = other.mean_.size();
    Vector m(n1 + n2);
    m << mean_, other.mean_;
    Matrix c = Matrix::Zero(n1 + n2, n1 + n2);
    c.topLeftCorner(n1, n1) = cov_;
    c.bottomRightCorner(n2, n2) = other.cov_;
    return GaussianState(std::move(labels), std::move(m), std::move(c));
}

GaussianState GaussianState::displaced(const ModeLabel& label, std::complex<double> alpha) const {
    const auto i = static_cast<Eigen::Index>(2 * index_of(label));
    Vector m = mean_;
    m(i) += std::numbers::sqrt2 * alpha.real();
    m(i + 1) += std::numbers::sqrt2 * alpha.imag();
    return GaussianState(labels_, std::move(m), cov_);
}

void require_coupling_ratio(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon < 1.0)) {
        throw UnphysicalParameter("epsilon must be in [0,1)");
    }
}

GaussianState vacuum_state(std::vector<ModeLabel> labels) {
    const auto dim = static_cast<Eigen::Index>(2 * labels.size());
    return GaussianState(std::move(labels), Vector::Zero(dim), 0.5 * Matrix::Identity(dim, dim));
}

GaussianState thermal_state(std::vector<ModeLabel> labels, double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw UnphysicalParameter("thermal occupation must be finite and non-negative");
    }
    const auto dim = static_cast<Eigen::Index>(2 * labels.size());
    return GaussianState(std::move(labels), Vector::Zero(dim), (nbar + 0.5) * Matrix::Identity(dim, dim));
}

GaussianState tmsv_state(double epsilon, const ModeLabel& first, const ModeLabel& second) {
    require_coupling_ratio(epsilon);
    // cosh(2r)/2 and sinh(2r)/2 with tanh(r) = epsilon.
    const double eps2 = epsilon * epsilon;
    const double local = 0.5 * (1.0 + eps2) / (1.0 - eps2);
    const double corr = epsilon / (1.0 - eps2);
    Matrix cov(4, 4);
    cov << local, 0.0, corr, 0.0,
           0.0, local, 0.0, -corr,
           corr, 0.0, local, 0.0,
           0.0, -corr, 0.0, local;
    return GaussianState({first, second}, Vector::Zero(4), std::move(cov));
}

}  // namespace odsim
