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

#include <cstddef>

#include "qangle/curve.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// Representative of r2's ray whose overlap with r1 is real and
/// non-negative. Rays carry no phase, so aligning the representatives is
/// free; it is the step that lets a straight-line interpolation stay on
/// the shortest path between the rays.
StateVector phase_align(const StateVector &r1, const StateVector &r2);

/// Shortest curve between two rays, sampled at segments+1 uniform nodes
/// and parametrized by arc length over [0, ∠(r1,r2)]:
///
///     γ(s) = cos(s)·r1 + sin(s)·u,
///
/// with u the unit vector toward the phase-aligned r2 orthogonal to r1.
/// Its arc length equals the endpoint angle, which is the minimum any
/// curve between the rays can achieve. Coincident rays (angle below
/// 1e-12) yield a constant curve over [0, 1] with the same node count,
/// so its length is exactly zero. Requires segments >= 1.
Curve geodesic(const StateVector &r1, const StateVector &r2, std::size_t segments);

}  // namespace qangle
