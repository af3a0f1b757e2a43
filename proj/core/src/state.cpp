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

#include "qangle/state.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qangle {

StateVector::StateVector(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw std::invalid_argument("StateVector: amplitude vector is empty");
    }
    if (!amplitudes_.allFinite()) {
        throw std::invalid_argument("StateVector: amplitudes must be finite");
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw std::invalid_argument(
            "StateVector: vector norm deviates from 1 beyond tolerance; "
            "use normalize() for raw vectors");
    }
}

StateVector normalize(const CVector &raw) {
    if (raw.size() == 0) {
        throw std::invalid_argument("normalize: amplitude vector is empty");
    }
    if (!raw.allFinite()) {
        throw std::invalid_argument("normalize: amplitudes must be finite");
    }
    const double norm = raw.norm();
    if (norm == 0.0) {
        throw std::invalid_argument("normalize: the zero state has no direction");
    }
    return StateVector(raw / norm);
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner: dimension mismatch");
    }
    // Eigen's dot conjugates the left factor, matching the convention here.
    return a.amplitudes().dot(b.amplitudes());
}

QuantumAngle::QuantumAngle(double radians) : radians_(radians) {
    if (!(radians >= 0.0 && radians <= kRightAngle)) {
        throw std::invalid_argument("QuantumAngle: radians outside [0, pi/2]");
    }
}

QuantumAngle quantum_angle(const StateVector &a, const StateVector &b) {
    const Complex ab = inner(a, b);
    const Complex ba = inner(b, a);
    // acos of the overlap magnitude loses half the significant digits when
    // the rays nearly coincide. The residual norm recovers the sine without
    // cancellation, and atan2 of the pair is accurate across all of
    // [0, pi/2]. Taking the smaller residual keeps the result exactly
    // symmetric under swapping the arguments.
    const double sine = std::min((b.amplitudes() - ab * a.amplitudes()).norm(),
                                 (a.amplitudes() - ba * b.amplitudes()).norm());
    return QuantumAngle(std::atan2(sine, std::abs(ab)));
}

bool differ_substantially(const StateVector &a, const StateVector &b) {
    return quantum_angle(a, b).radians() >= kSubstantialAngle;
}

StateVector random_state(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_state(dim, rng);
}

StateVector random_state(Eigen::Index dim, std::mt19937_64 &rng) {
    if (dim < 1) {
        throw std::invalid_argument("random_state: dim must be at least 1");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    // A zero draw has probability zero but normalize() guards it anyway.
    return normalize(v);
}

}  // namespace qangle
