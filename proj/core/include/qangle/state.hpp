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

#pragma once

#include <cstdint>
#include <random>

#include "qangle/common.hpp"

namespace qangle {

/// A unit-norm complex amplitude vector: one representative of a ray.
/// Global phase is physically irrelevant; every function in this library
/// that consumes StateVectors is invariant under it.
class StateVector {
  public:
    /// Deviation from unit norm accepted at construction.
    static constexpr double kNormTolerance = 1e-9;

    /// Wraps an already-normalized amplitude vector. Throws
    /// std::invalid_argument if the vector is empty, has non-finite
    /// entries, or misses unit norm by more than kNormTolerance. Use
    /// normalize() for raw, unscaled vectors.
    explicit StateVector(CVector amplitudes);

    Eigen::Index dim() const { return amplitudes_.size(); }
    const CVector &amplitudes() const { return amplitudes_; }

  private:
    CVector amplitudes_;
};

/// Scales a nonzero vector to unit norm. Throws std::invalid_argument on
/// non-finite input and on the zero vector, which has no direction.
StateVector normalize(const CVector &raw);

/// Hermitian inner product of two equal-dimension states, antilinear in
/// the first argument.
Complex inner(const StateVector &a, const StateVector &b);

/// Angle between two rays, always in [0, kRightAngle]. A distinct type so
/// ray angles cannot be confused with ordinary reals or with angles in
/// other ranges.
class QuantumAngle {
  public:
    /// Throws std::invalid_argument outside [0, kRightAngle].
    explicit QuantumAngle(double radians);

    double radians() const { return radians_; }

  private:
    double radians_;
};

/// Angle between the rays spanned by a and b: arccos of the overlap
/// magnitude |⟨a|b⟩|, evaluated in a cancellation-free form so that
/// nearly coincident rays report angles at the rounding scale rather
/// than at its square root. Exactly symmetric in its arguments and
/// independent of either global phase.
QuantumAngle quantum_angle(const StateVector &a, const StateVector &b);

/// True when the angle between the rays reaches kSubstantialAngle.
bool differ_substantially(const StateVector &a, const StateVector &b);

/// Haar-distributed random ray representative: i.i.d. standard complex
/// Gaussian amplitudes, normalized. Deterministic for a fixed seed.
StateVector random_state(Eigen::Index dim, std::uint64_t seed);

/// Same distribution, drawing from a caller-owned engine. Useful when
/// many states are needed from one seeded stream.
StateVector random_state(Eigen::Index dim, std::mt19937_64 &rng);

}  // namespace qangle
