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

#include "qangle/curve.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

namespace qangle {

Curve::Curve(std::vector<double> params, std::vector<StateVector> states)
    : params_(std::move(params)), states_(std::move(states)) {
    if (params_.empty()) {
        throw std::invalid_argument("Curve: needs at least one node");
    }
    if (params_.size() != states_.size()) {
        throw std::invalid_argument("Curve: params and states differ in length");
    }
    for (std::size_t k = 0; k + 1 < params_.size(); ++k) {
        if (!(params_[k] < params_[k + 1])) {
            throw std::invalid_argument("Curve: params must be strictly increasing");
        }
    }
    if (!std::isfinite(params_.front()) || !std::isfinite(params_.back())) {
        throw std::invalid_argument("Curve: params must be finite");
    }
    const Eigen::Index d = states_.front().dim();
    for (const StateVector &s : states_) {
        if (s.dim() != d) {
            throw std::invalid_argument("Curve: mixed state dimensions");
        }
    }
}

CVector velocity_at(const Curve &curve, std::size_t k) {
    const std::size_t n = curve.node_count();
    if (n < 2) {
        throw std::invalid_argument("velocity_at: needs at least two nodes");
    }
    if (k >= n) {
        throw std::invalid_argument("velocity_at: node index out of range");
    }
    if (k == 0) {
        const double dt = curve.param(1) - curve.param(0);
        return (curve.state(1).amplitudes() - curve.state(0).amplitudes()) / dt;
    }
    if (k == n - 1) {
        const double dt = curve.param(n - 1) - curve.param(n - 2);
        return (curve.state(n - 1).amplitudes() - curve.state(n - 2).amplitudes()) / dt;
    }
    const double dt = curve.param(k + 1) - curve.param(k - 1);
    return (curve.state(k + 1).amplitudes() - curve.state(k - 1).amplitudes()) / dt;
}

VelocityDecomposition decompose_velocity(const StateVector &r, const CVector &v) {
    if (r.dim() != v.size()) {
        throw std::invalid_argument("decompose_velocity: dimension mismatch");
    }
    const CVector &rv = r.amplitudes();
    VelocityDecomposition d;
    d.parallel = rv * rv.dot(v);
    d.perpendicular = v - d.parallel;
    return d;
}

double angular_speed(const Curve &curve, std::size_t k) {
    const CVector v = velocity_at(curve, k);
    return decompose_velocity(curve.state(k), v).perpendicular.norm();
}

namespace {

// True when consecutive spacings agree to relative 1e-9; Simpson's rule
// needs a uniform grid.
bool uniform_spacing(const std::vector<double> &t) {
    const double h0 = t[1] - t[0];
    for (std::size_t k = 1; k + 1 < t.size(); ++k) {
        if (std::abs((t[k + 1] - t[k]) - h0) > 1e-9 * std::abs(h0)) {
            return false;
        }
    }
    return true;
}

double max_spacing(const std::vector<double> &t) {
    double h = 0.0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        h = std::max(h, t[k + 1] - t[k]);
    }
    return h;
}

}  // namespace

double arc_length(const Curve &curve) {
    const std::size_t n = curve.node_count();
    if (n < 2) {
        throw std::invalid_argument("arc_length: needs at least two nodes");
    }
    std::vector<double> omega(n);
    for (std::size_t k = 0; k < n; ++k) {
        omega[k] = angular_speed(curve, k);
    }
    const std::vector<double> &t = curve.params();
    const std::size_t intervals = n - 1;
    if (intervals >= 2 && intervals % 2 == 0 && uniform_spacing(t)) {
        const double h = (t.back() - t.front()) / static_cast<double>(intervals);
        double sum = omega.front() + omega.back();
        for (std::size_t k = 1; k < intervals; ++k) {
            sum += (k % 2 == 1 ? 4.0 : 2.0) * omega[k];
        }
        return sum * h / 3.0;
    }
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        sum += 0.5 * (omega[k] + omega[k + 1]) * (t[k + 1] - t[k]);
    }
    return sum;
}

BoundReport check_estimate(const Curve &curve) {
    const double length = arc_length(curve);
    const double angle =
        quantum_angle(curve.state(0), curve.state(curve.node_count() - 1)).radians();
    // Finite differences and quadrature both carry O(h^2) error, which for
    // near-extremal curves can push the computed length slightly below the
    // endpoint angle; the tolerance absorbs that.
    const double h = max_spacing(curve.params());
    const double tolerance = 1e-8 + h * h * (length + 1.0) / 6.0;
    return make_bound_report("endpoint angle bounded by arc length", angle, length,
                             tolerance);
}

std::vector<CurveRow> curve_rows(const Curve &curve) {
    const std::size_t n = curve.node_count();
    std::vector<CurveRow> rows;
    rows.reserve(n);
    if (n == 1) {
        rows.push_back({curve.param(0), 0.0, 0.0, 0.0});
        return rows;
    }
    double cumulative = 0.0;
    double prev_omega = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double omega = angular_speed(curve, k);
        if (k > 0) {
            cumulative += 0.5 * (prev_omega + omega) * (curve.param(k) - curve.param(k - 1));
        }
        const double angle = quantum_angle(curve.state(k), curve.state(0)).radians();
        rows.push_back({curve.param(k), omega, cumulative, angle});
        prev_omega = omega;
    }
    return rows;
}

void write_curve_csv(const Curve &curve, std::ostream &out) {
    out << "t,omega,cumulative_length,angle_to_start\n";
    out << std::setprecision(17);
    for (const CurveRow &row : curve_rows(curve)) {
        out << row.t << ',' << row.omega << ',' << row.cumulative_length << ','
            << row.angle_to_start << '\n';
    }
}

std::string curve_csv(const Curve &curve) {
    std::ostringstream out;
    write_curve_csv(curve, out);
    return out.str();
}

}  // namespace qangle
