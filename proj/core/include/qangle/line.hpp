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

#include "qangle/bound.hpp"
#include "qangle/common.hpp"
#include "qangle/generator.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// Uniform periodic discretization of a line segment of the given length,
/// centered on zero: sites x_k = -length/2 + k·spacing for k = 0..size-1.
/// Periodicity makes the translation group exact on the grid and gives
/// the momentum operator an explicit plane-wave eigenbasis.
class LineGrid {
  public:
    /// size must be even and at least 8; length positive and finite.
    LineGrid(int size, double length);

    int size() const { return size_; }
    double length() const { return length_; }
    double spacing() const { return length_ / size_; }
    double position(int k) const;
    RVector positions() const;

    /// Integer mode number for column j: 0..size/2 then negative, i.e.
    /// the set {-size/2 + 1, ..., size/2}.
    int mode_number(int j) const;
    /// Wavenumber 2π·mode/length for column j.
    double wavenumber(int j) const;

  private:
    int size_;
    double length_;
};

/// Unitary matrix whose column j is the normalized plane wave
/// exp(i·k_j·x_m)/sqrt(size): the common eigenbasis of every grid
/// translation and of the momentum operator.
CMatrix fourier_modes(const LineGrid &grid);

/// Momentum operator ħ·k in the plane-wave basis, materialized as a dense
/// (circulant) Hermitian matrix with its closed-form decomposition
/// attached. Generates translations: exp(-i·δx·P/ħ) shifts a state by δx.
HermitianGenerator momentum_operator(const LineGrid &grid, double hbar = 1.0);

/// Position operator: diagonal matrix of the grid positions.
HermitianGenerator position_operator(const LineGrid &grid);

/// Normalized Gaussian wave packet exp(-(x-center)²/(4·width²)) times a
/// momentum phase exp(i·momentum·x/ħ), sampled on the grid. Position
/// spread is width, momentum spread ħ/(2·width), both up to boundary and
/// resolution corrections that the guards keep negligible:
/// width ≥ 5·spacing and the ±6·width tail inside the domain, else
/// guard_error.
StateVector gaussian_packet(const LineGrid &grid, double center, double momentum,
                            double width, double hbar = 1.0);

/// Normalized compactly supported bump exp(-1/(1-u²)) with
/// u = 2(x-center)/support, exactly zero outside |u| < 1. Guards:
/// support ≥ 10·spacing and entirely inside the domain, else guard_error.
StateVector bump_packet(const LineGrid &grid, double center, double support);

/// Exact periodic translation by delta_x through the plane-wave basis.
/// Agrees with evolve() under the momentum operator at shift parameter
/// delta_x. Shifts by integer multiples of the spacing permute the
/// samples exactly.
StateVector shift_state(const LineGrid &grid, const StateVector &psi, double delta_x);

/// Checks ħ/2 ≤ ΔX·ΔP in the given state. On the periodic grid this is
/// inherited from the line only for states that stay well away from the
/// domain boundary; callers are expected to pass localized packets.
BoundReport pauli_weyl_check(const LineGrid &grid, const StateVector &psi,
                             double hbar = 1.0);

}  // namespace qangle
