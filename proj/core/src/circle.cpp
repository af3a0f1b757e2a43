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

#include "qangle/circle.hpp"

#include <cmath>
#include <sstream>

#include "qangle/evolution.hpp"

namespace qangle {

CircleModel::CircleModel(int max_mode) : max_mode_(max_mode) {
    if (max_mode < 1) {
        throw std::invalid_argument("CircleModel: max_mode must be at least 1");
    }
}

int CircleModel::mode(Eigen::Index index) const {
    if (index < 0 || index >= dim()) {
        throw std::invalid_argument("CircleModel::mode: index out of range");
    }
    return static_cast<int>(index) - max_mode_;
}

Eigen::Index CircleModel::index_of(int mode) const {
    if (mode < -max_mode_ || mode > max_mode_) {
        throw std::invalid_argument("CircleModel::index_of: mode outside truncation");
    }
    return static_cast<Eigen::Index>(mode + max_mode_);
}

StateVector CircleModel::mode_state(int mode) const {
    CVector v = CVector::Zero(dim());
    v(index_of(mode)) = Complex(1.0, 0.0);
    return StateVector(std::move(v));
}

StateVector CircleModel::superposition(const std::vector<int> &modes,
                                       const std::vector<Complex> &amplitudes) const {
    if (modes.empty() || modes.size() != amplitudes.size()) {
        throw std::invalid_argument(
            "CircleModel::superposition: need matching, non-empty mode and "
            "amplitude lists");
    }
    CVector v = CVector::Zero(dim());
    for (std::size_t i = 0; i < modes.size(); ++i) {
        v(index_of(modes[i])) += amplitudes[i];
    }
    return normalize(v);
}

HermitianGenerator angular_momentum_operator(const CircleModel &model, double hbar) {
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument(
            "angular_momentum_operator: hbar must be positive and finite");
    }
    const Eigen::Index n = model.dim();
    RVector eigenvalues(n);
    CMatrix m = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        eigenvalues(i) = hbar * model.mode(i);
        m(i, i) = eigenvalues(i);
    }
    return HermitianGenerator::from_parts(std::move(m), CMatrix::Identity(n, n),
                                          std::move(eigenvalues));
}

CircleReport circle_certainty_demo(const CircleModel &model, const StateVector &state,
                                   double hbar, double search_limit) {
    if (state.dim() != model.dim()) {
        throw std::invalid_argument(
            "circle_certainty_demo: state dimension does not match model");
    }
    EvolutionContext ctx(angular_momentum_operator(model, hbar), hbar);

    CircleReport report;
    report.delta_j = std_dev(ctx.generator(), state);
    report.eigenstate = report.delta_j <= 1e-12 * hbar;
    report.delta_phi_star = minimal_substantial_shift(ctx, state, search_limit);

    std::ostringstream narrative;
    if (report.delta_phi_star) {
        report.verdict = certainty_verdict(ctx, state, *report.delta_phi_star);
        report.product = *report.delta_phi_star * report.delta_j / hbar;
        narrative << "smallest substantial rotation delta_phi = "
                  << *report.delta_phi_star << "; |delta_phi|*dJ/hbar = "
                  << *report.product;
    } else if (report.eigenstate) {
        report.verdict = certainty_verdict(ctx, state, search_limit);
        narrative << "single-mode eigenstate: dJ = 0 and the ray is exactly "
                     "rotation-invariant, so no rotation ever changes it "
                     "substantially. The state is completely spread over "
                     "angular position, yet loses nothing under rotations; a "
                     "two-sided product bound tying angular spread to dJ "
                     "(as the position-momentum one does) cannot hold on the "
                     "circle.";
    } else {
        report.verdict = certainty_verdict(ctx, state, search_limit);
        narrative << "no substantial rotation in (0, " << search_limit
                  << "]; the orbit's angle never reaches the threshold in range";
    }
    report.narrative = narrative.str();
    return report;
}

}  // namespace qangle
