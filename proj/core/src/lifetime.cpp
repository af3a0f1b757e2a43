// Copyright 2026 The qangle developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qangle/lifetime.hpp"

#include <cmath>
#include <utility>

#include "qangle/evolution.hpp"
#include "qangle/generator.hpp"

namespace qangle {

LevelModel::LevelModel(RVector energies, RVector weights)
    : energies_(std::move(energies)), weights_(std::move(weights)) {
    if (energies_.size() == 0 || energies_.size() != weights_.size()) {
        throw std::invalid_argument(
            "LevelModel: need matching, non-empty energy and weight lists");
    }
    if (!energies_.allFinite() || !weights_.allFinite()) {
        throw std::invalid_argument("LevelModel: entries must be finite");
    }
    if (weights_.minCoeff() < 0.0) {
        throw std::invalid_argument("LevelModel: weights must be non-negative");
    }
    if (std::abs(weights_.sum() - 1.0) > 1e-12) {
        throw std::invalid_argument("LevelModel: weights must sum to 1");
    }
}

StateVector LevelModel::initial_state() const {
    CVector psi(levels());
    for (Eigen::Index i = 0; i < levels(); ++i) {
        psi(i) = Complex(std::sqrt(weights_(i)), 0.0);
    }
    return normalize(psi.eval());
}

LevelModel gaussian_levels(int count, double center, double width,
                           double half_span_widths) {
    if (count < 1) {
        throw std::invalid_argument("gaussian_levels: count must be at least 1");
    }
    if (!(std::isfinite(width) && width > 0.0)) {
        throw std::invalid_argument("gaussian_levels: width must be positive and finite");
    }
    if (!(std::isfinite(half_span_widths) && half_span_widths > 0.0)) {
        throw std::invalid_argument(
            "gaussian_levels: half_span_widths must be positive and finite");
    }
    RVector energies(count), weights(count);
    const double half_span = half_span_widths * width;
    for (int i = 0; i < count; ++i) {
        const double u =
            count == 1 ? 0.0 : -1.0 + 2.0 * static_cast<double>(i) / (count - 1);
        energies(i) = center + half_span * u;
        const double d = (energies(i) - center) / width;
        weights(i) = std::exp(-0.5 * d * d);
    }
    weights /= weights.sum();
    return LevelModel(std::move(energies), std::move(weights));
}

LifetimeReport lifetime_demo(const LevelModel &model, double hbar,
                             double search_limit) {
    const Eigen::Index n = model.levels();
    // Forward time shifts are generated by the negated energy operator.
    CMatrix m = CMatrix::Zero(n, n);
    RVector eigenvalues(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        eigenvalues(i) = -model.energies()(i);
        m(i, i) = eigenvalues(i);
    }
    EvolutionContext ctx(HermitianGenerator::from_parts(std::move(m),
                                                        CMatrix::Identity(n, n),
                                                        std::move(eigenvalues)),
                         hbar);
    const StateVector psi = model.initial_state();

    LifetimeReport report;
    report.delta_h = std_dev(ctx.generator(), psi);
    if (search_limit <= 0.0) {
        search_limit = report.delta_h > 0.0 ? 20.0 * hbar / report.delta_h : 1.0;
    }
    report.t_star = minimal_substantial_shift(ctx, psi, search_limit);
    report.decays = report.t_star.has_value();
    if (report.t_star) {
        report.product = *report.t_star * report.delta_h / hbar;
        report.verdict = certainty_verdict(ctx, psi, *report.t_star);
    } else {
        report.verdict = certainty_verdict(ctx, psi, search_limit);
    }
    return report;
}

}  // namespace qangle
