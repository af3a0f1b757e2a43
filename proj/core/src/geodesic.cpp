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

#include "qangle/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qangle {

StateVector phase_align(const StateVector &r1, const StateVector &r2) {
    const Complex overlap = inner(r2, r1);
    const double mag = std::abs(overlap);
    if (mag == 0.0) {
        return r2;  // orthogonal rays: every phase is equally aligned
    }
    return StateVector(r2.amplitudes() * (overlap / mag));
}

Curve geodesic(const StateVector &r1, const StateVector &r2, std::size_t segments) {
    if (segments < 1) {
        throw std::invalid_argument("geodesic: needs at least one segment");
    }
    if (r1.dim() != r2.dim()) {
        throw std::invalid_argument("geodesic: dimension mismatch");
    }
    const std::size_t nodes = segments + 1;
    const StateVector r2a = phase_align(r1, r2);
    const double cos_theta =
        std::clamp(inner(r1, r2a).real(), -1.0, 1.0);  // imaginary part is 0 by alignment
    const double theta = quantum_angle(r1, r2a).radians();

    std::vector<double> params(nodes);
    std::vector<StateVector> states;
    states.reserve(nodes);

    if (theta < 1e-12) {
        // Coincident rays: the constant curve, over a unit parameter range
        // so downstream consumers still see a well-formed grid.
        for (std::size_t k = 0; k < nodes; ++k) {
            params[k] = static_cast<double>(k) / static_cast<double>(segments);
            states.push_back(r1);
        }
        return Curve(std::move(params), std::move(states));
    }

    CVector w = r2a.amplitudes() - cos_theta * r1.amplitudes();
    w -= r1.amplitudes() * r1.amplitudes().dot(w);
    const CVector u = w / w.norm();

    for (std::size_t k = 0; k < nodes; ++k) {
        const double s =
            theta * static_cast<double>(k) / static_cast<double>(segments);
        params[k] = s;
        states.push_back(
            StateVector(std::cos(s) * r1.amplitudes() + std::sin(s) * u));
    }
    return Curve(std::move(params), std::move(states));
}

}  // namespace qangle
