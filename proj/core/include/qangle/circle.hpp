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
#include <string>
#include <vector>

#include "qangle/bound.hpp"
#include "qangle/common.hpp"
#include "qangle/generator.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// States on a circle, truncated to the Fourier modes exp(i·m·φ) with
/// |m| ≤ max_mode. In this basis rotations act diagonally, so the model
/// needs no grid at all.
class CircleModel {
  public:
    /// max_mode must be at least 1; the space has dimension 2·max_mode+1.
    explicit CircleModel(int max_mode);

    int max_mode() const { return max_mode_; }
    Eigen::Index dim() const { return 2 * static_cast<Eigen::Index>(max_mode_) + 1; }

    /// Mode number for a basis index (index 0 is mode -max_mode).
    int mode(Eigen::Index index) const;
    /// Basis index for a mode number, range-checked.
    Eigen::Index index_of(int mode) const;
    /// The basis state of one Fourier mode.
    StateVector mode_state(int mode) const;
    /// Normalized superposition of the given modes with the given
    /// amplitudes (not necessarily normalized on input).
    StateVector superposition(const std::vector<int> &modes,
                              const std::vector<Complex> &amplitudes) const;

  private:
    int max_mode_;
};

/// Angular momentum: diagonal with eigenvalue ħ·m on mode m. Generates
/// rotations of the circle by exp(-i·δφ·J/ħ).
HermitianGenerator angular_momentum_operator(const CircleModel &model,
                                             double hbar = 1.0);

/// What the rotation group does to one state's ray.
struct CircleReport {
    double delta_j = 0.0;                  // spread of J in the state
    std::optional<double> delta_phi_star;  // smallest substantial rotation, if any
    std::optional<double> product;         // |δφ*|·ΔJ/ħ when found
    bool eigenstate = false;               // ΔJ = 0: the ray never moves
    BoundReport verdict;
    std::string narrative;
};

/// Evaluates the certainty bound for rotations of the given state,
/// searching (0, search_limit] for the smallest substantial rotation. A
/// single-mode eigenstate has ΔJ = 0 and never moves at all; the report's
/// narrative spells out why that rules out any two-sided product
/// inequality between angular position spread and ΔJ: such a state is
/// completely delocalized in angle, yet no rotation ever degrades it.
CircleReport circle_certainty_demo(const CircleModel &model, const StateVector &state,
                                   double hbar = 1.0,
                                   double search_limit = 4.0 * std::numbers::pi);

}  // namespace qangle
