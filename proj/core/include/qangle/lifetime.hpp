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

#include "qangle/bound.hpp"
#include "qangle/common.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// A state prepared as a real superposition of energy eigenstates: level
/// energies plus occupation weights (probabilities, non-negative, summing
/// to one). The initial state has amplitude sqrt(weight) on each level.
class LevelModel {
  public:
    LevelModel(RVector energies, RVector weights);

    Eigen::Index levels() const { return energies_.size(); }
    const RVector &energies() const { return energies_; }
    const RVector &weights() const { return weights_; }
    StateVector initial_state() const;

  private:
    RVector energies_;
    RVector weights_;
};

/// Convenience builder: `count` evenly spaced levels across
/// center ± half_span_widths·width, with Gaussian weights of standard
/// deviation `width` around the center.
LevelModel gaussian_levels(int count, double center, double width,
                           double half_span_widths = 4.0);

/// How long the prepared state survives as itself.
struct LifetimeReport {
    std::optional<double> t_star;   // smallest time of substantial change
    double delta_h = 0.0;           // energy spread in the state
    std::optional<double> product;  // t_star·ΔH/ħ when found
    bool decays = false;            // t_star found within the searched range
    BoundReport verdict;
};

/// Evolves the state in time (time shifts are generated by the negated
/// energy operator) and searches (0, search_limit] for the first
/// substantial departure from the initial ray. A substantial change at
/// time t requires t·ΔH ≥ ħ: narrow energy spread forces a long
/// lifetime. search_limit ≤ 0 selects 20·ħ/ΔH, which covers every
/// crossing these models produce; a single occupied level has ΔH = 0 and
/// never decays at all.
LifetimeReport lifetime_demo(const LevelModel &model, double hbar = 1.0,
                             double search_limit = 0.0);

}  // namespace qangle
