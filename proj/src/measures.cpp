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

#include "odsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "odsim/errors.hpp"
#include "odsim/symplectic.hpp"

namespace odsim {

namespace {

Vector combo_vector(const GaussianState& state, std::span<const QuadTerm> terms) {
    if (terms.empty()) {
        throw InvalidInput("quadrature combination must have at least one term");
    }
    Vector c = Vector::Zero(static_cast<Eigen::Index>(2 * state.mode_count()));
    for (const auto& term : terms) {
        const auto i = static_cast<Eigen::Index>(2 * state.index_of(term.mode));
        c(term.quadrature == Quadrature::X ? i : i + 1) += term.weight;
    }
    return c;
}

/// Symplectic spectrum of an arbitrary positive-definite real symmetric matrix.
std::vector<double> williamson_spectrum(const Matrix& cov) {
    Eigen::SelfAdjointEigenSolver<Matrix> cov_eig(cov);
    if (cov_eig.info() != Eigen::Success) {
        throw NumericalDegeneracy("eigen-decomposition of the covariance failed");
    }
    const Vector& lambda = cov_eig.eigenvalues();
    if (lambda.minCoeff() <= 0.0) {
        throw NumericalDegeneracy("covariance matrix is not positive definite");
    }
    const Matrix root = cov_eig.eigenvectors() * lambda.cwiseSqrt().asDiagonal() *
                        cov_eig.eigenvectors().transpose();
    const auto modes = static_cast<std::size_t>(cov.rows() / 2);
    // A = sqrt(cov) Omega sqrt(cov) is antisymmetric with spectrum +-i nu, so -A^2 = A^T A has nu^2 twice.
    const Matrix a = root * symplectic_form(modes) * root;
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a.transpose() * a, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw NumericalDegeneracy("symplectic eigen-decomposition failed");
    }
    std::vector<double> nu;
    nu.reserve(modes);
    const Vector& sq = eig.eigenvalues();
    for (std::size_t k = 0; k < modes; ++k) {
        const double a0 = std::max(0.0, sq(static_cast<Eigen::Index>(2 * k)));
        const double a1 = std::max(0.0, sq(static_cast<Eigen::Index>(2 * k + 1)));
        nu.push_back(std::sqrt(0.5 * (a0 + a1)));
    }
    return nu;
}

}  // namespace

double quad_combo_variance(const GaussianState& state, std::span<const QuadTerm> terms) {
    const Vector c = combo_vector(state, terms);
    return std::max(0.0, c.dot(state.cov() * c));
}

double quad_combo_mean(const GaussianState& state, std::span<const QuadTerm> terms) {
    return combo_vector(state, terms).dot(state.mean());
}

double mean_photon_number(const GaussianState& state, const ModeLabel& mode) {
    const auto i = static_cast<Eigen::Index>(2 * state.index_of(mode));
    const auto& c = state.cov();
    const auto& m = state.mean();
    return 0.5 * (c(i, i) + c(i + 1, i + 1)) + 0.5 * (m(i) * m(i) + m(i + 1) * m(i + 1)) - 0.5;
}

double purity(const GaussianState& state) {
    const double det = state.cov().determinant();
    if (!(det > 0.0)) {
        throw NumericalDegeneracy("singular covariance matrix");
    }
    return 1.0 / (std::pow(2.0, static_cast<double>(state.mode_count())) * std::sqrt(det));
}

std::vector<double> symplectic_eigenvalues(const GaussianState& state) {
    return williamson_spectrum(state.cov());
}

bool is_physical(const GaussianState& state, double tolerance) {
    const auto nu = symplectic_eigenvalues(state);
    return nu.front() >= 0.5 - tolerance;
}

double log_negativity(const GaussianState& state, std::span<const ModeLabel> first,
                      std::span<const ModeLabel> second) {
    if (first.empty() || second.empty()) {
        throw InvalidInput("both sides of the partition must be nonempty");
    }
    std::set<ModeLabel> seen;
    std::vector<ModeLabel> order;
    for (const auto& m : first) {
        if (!seen.insert(m).second) {
            throw InvalidInput("duplicate mode '" + m + "' in partition");
        }
        order.push_back(m);
    }
    for (const auto& m : second) {
        if (!seen.insert(m).second) {
            throw InvalidInput("partition sides overlap on mode '" + m + "'");
        }
        order.push_back(m);
    }
    const GaussianState sub = state.reduced(order);
    // Partial transpose flips the momentum of every mode on the second side.
    Matrix cov = sub.cov();
    for (std::size_t k = first.size(); k < order.size(); ++k) {
        const auto p = static_cast<Eigen::Index>(2 * k + 1);
        cov.row(p) *= -1.0;
        cov.col(p) *= -1.0;
    }
    double en = 0.0;
    for (double nu : williamson_spectrum(cov)) {
        en += std::max(0.0, -std::log2(2.0 * nu));
    }
    return en;
}

}  // namespace odsim
