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

#include <optional>
#include <vector>

#include "qangle/bound.hpp"
#include "qangle/common.hpp"
#include "qangle/generator.hpp"
#include "qangle/line.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// Kronecker products, row-major in the first factor: the (i,j) block of
/// the result is a(i,j)·b.
CMatrix kron(const CMatrix &a, const CMatrix &b);
CVector kron(const CVector &a, const CVector &b);
RVector kron(const RVector &a, const RVector &b);

/// Momentum of one axis embedded in the tensor product of all axes:
/// identity on every other factor. Decomposition carried over from the
/// axis factors in closed form.
HermitianGenerator axis_momentum_embedding(const std::vector<LineGrid> &grids,
                                           std::size_t axis, double hbar = 1.0);

/// Simultaneous shift of several axes at once, displacement[i] along axis
/// i per unit of group parameter. The generator is B = Σ displacement[i]·P_i.
struct MultiAxisReport {
    std::vector<double> axis_momentum_spread;  // ΔP per axis in its packet
    double delta_b = 0.0;      // ΔB from the factorized computation
    double angle = 0.0;        // ray angle opened at unit group parameter
    bool substantial = false;  // angle at or above the threshold
    BoundReport verdict;       // ħ ≤ 1·ΔB when substantial
    std::optional<double> tensor_delta_b;  // ΔB recomputed on the full tensor space
};

/// Product Gaussian packets (width sigmas[i], centered, at rest) shifted
/// simultaneously by the displacement vector. Everything factorizes for
/// product states: the overlap is the product of per-axis overlaps and
/// ΔB² = Σ displacement[i]²·ΔP_i², which is how the factorized numbers
/// are computed. With tensor_check the combined generator is also
/// materialized on the full product space, freshly diagonalized, and ΔB
/// recomputed there (reported in tensor_delta_b); the product dimension
/// is capped at kMaxTensorDim, beyond it a guard_error is thrown.
/// Supports 2 or 3 axes.
MultiAxisReport multi_axis_demo(const std::vector<LineGrid> &grids,
                                const std::vector<double> &sigmas,
                                const std::vector<double> &displacements,
                                double hbar = 1.0, bool tensor_check = false);

/// Largest tensor-product dimension multi_axis_demo will materialize
/// densely: 4096 keeps the matrices within a few hundred MB and the
/// fresh diagonalization within minutes.
inline constexpr Eigen::Index kMaxTensorDim = 4096;

}  // namespace qangle
