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

#include "qangle/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qangle {

EvolutionContext::EvolutionContext(HermitianGenerator generator, double hbar)
    : generator_(std::move(generator)), hbar_(hbar) {
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument("EvolutionContext: hbar must be positive and finite");
    }
}

StateVector evolve(const EvolutionContext &ctx, const StateVector &psi, double delta_s) {
    if (!std::isfinite(delta_s)) {
        throw std::invalid_argument("evolve: delta_s must be finite");
    }
    const HermitianGenerator &a = ctx.generator();
    if (psi.dim() != a.dim()) {
        throw std::invalid_argument("evolve: dimension mismatch");
    }
    CVector coeffs = a.eigenvectors().adjoint() * psi.amplitudes();
    const double scale = delta_s / ctx.hbar();
    for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
        coeffs(j) *= std::polar(1.0, -scale * a.eigenvalues()(j));
    }
    return StateVector(a.eigenvectors() * coeffs);
}

double mean(const HermitianGenerator &a, const StateVector &psi) {
    if (psi.dim() != a.dim()) {
        throw std::invalid_argument("mean: dimension mismatch");
    }
    return psi.amplitudes().dot(a.matrix() * psi.amplitudes()).real();
}

double std_dev(const HermitianGenerator &a, const StateVector &psi) {
    const double m = mean(a, psi);
    return (a.matrix() * psi.amplitudes() - m * psi.amplitudes()).norm();
}

OrbitStats orbit_stats(const EvolutionContext &ctx, const StateVector &psi) {
    OrbitStats stats;
    stats.mean = mean(ctx.generator(), psi);
    stats.std_dev = std_dev(ctx.generator(), psi);
    stats.omega = stats.std_dev / ctx.hbar();
    return stats;
}

std::vector<ProfilePoint> angle_profile(const EvolutionContext &ctx,
                                        const StateVector &psi,
                                        const std::vector<double> &deltas) {
    const double omega = std_dev(ctx.generator(), psi) / ctx.hbar();
    std::vector<ProfilePoint> profile;
    profile.reserve(deltas.size());
    for (double d : deltas) {
        const StateVector moved = evolve(ctx, psi, d);
        profile.push_back(
            {d, quantum_angle(moved, psi).radians(), omega * std::abs(d)});
    }
    return profile;
}

BoundReport certainty_report(double hbar, double angle, double shift_spread_product) {
    const double tolerance = 1e-9 * hbar;
    if (angle >= kSubstantialAngle) {
        return make_bound_report("substantial change requires |delta_s|*std_dev >= hbar",
                                 hbar, shift_spread_product, tolerance);
    }
    // Premise failed: nothing is required of this shift, so the verdict
    // holds vacuously regardless of the recorded sides.
    BoundReport report;
    report.context =
        "not applicable: change below substantial threshold (vacuously holds)";
    report.lhs = hbar;
    report.rhs = shift_spread_product;
    report.slack = shift_spread_product - hbar;
    report.tolerance = tolerance;
    report.holds = true;
    return report;
}

BoundReport certainty_verdict(const EvolutionContext &ctx, const StateVector &psi,
                              double delta_s) {
    const double delta_a = std_dev(ctx.generator(), psi);
    const StateVector moved = evolve(ctx, psi, delta_s);
    const double angle = quantum_angle(moved, psi).radians();
    return certainty_report(ctx.hbar(), angle, std::abs(delta_s) * delta_a);
}

std::optional<double> minimal_substantial_shift(const EvolutionContext &ctx,
                                                const StateVector &psi,
                                                double search_limit) {
    if (!(std::isfinite(search_limit) && search_limit > 0.0)) {
        throw std::invalid_argument(
            "minimal_substantial_shift: search_limit must be positive and finite");
    }
    const double delta_a = std_dev(ctx.generator(), psi);
    if (delta_a == 0.0) {
        return std::nullopt;  // stationary ray: the angle stays 0 forever
    }
    const double step =
        std::min(0.01 * ctx.hbar() / delta_a, search_limit / 1000.0);
    const auto angle_at = [&](double s) {
        return quantum_angle(evolve(ctx, psi, s), psi).radians();
    };

    double lo = 0.0;
    double hi = 0.0;
    bool found = false;
    for (double s = step; !found; s += step) {
        if (s >= search_limit) {
            s = search_limit;
        }
        if (angle_at(s) >= kSubstantialAngle) {
            hi = s;
            found = true;
        } else {
            lo = s;
            if (s >= search_limit) {
                return std::nullopt;
            }
        }
    }

    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (angle_at(mid) >= kSubstantialAngle) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace qangle
