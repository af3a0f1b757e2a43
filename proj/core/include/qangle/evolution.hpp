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
#include "qangle/state.hpp"

namespace qangle {

/// A Hermitian generator together with the action scale ħ that converts
/// its one-parameter unitary group U(δs) = exp(-i·δs·A/ħ) into physical
/// shifts. ħ must be positive and finite.
class EvolutionContext {
  public:
    explicit EvolutionContext(HermitianGenerator generator, double hbar = 1.0);

    const HermitianGenerator &generator() const { return generator_; }
    double hbar() const { return hbar_; }

  private:
    HermitianGenerator generator_;
    double hbar_;
};

/// U(δs) applied to the state through the cached eigenbasis: two
/// matrix-vector products and a diagonal phase. Unitary, so the norm is
/// preserved to rounding; the result is not re-normalized.
StateVector evolve(const EvolutionContext &ctx, const StateVector &psi, double delta_s);

/// Expectation value ⟨ψ|A|ψ⟩, real for Hermitian A.
double mean(const HermitianGenerator &a, const StateVector &psi);

/// Standard deviation ‖(A - ⟨A⟩)ψ‖, computed in the shifted form that
/// avoids cancellation between ⟨A²⟩ and ⟨A⟩².
double std_dev(const HermitianGenerator &a, const StateVector &psi);

/// Mean and spread of the generator in a state, plus the angular speed
/// omega = std_dev/ħ of the ray orbit through it. All three are constant
/// along the orbit itself.
struct OrbitStats {
    double mean;
    double std_dev;
    double omega;
};

OrbitStats orbit_stats(const EvolutionContext &ctx, const StateVector &psi);

/// One row per requested shift: the angle the orbit has opened against
/// the start state, and the arc bound omega·|δs| that the angle can never
/// exceed.
struct ProfilePoint {
    double delta_s;
    double angle;
    double bound;
};

std::vector<ProfilePoint> angle_profile(const EvolutionContext &ctx,
                                        const StateVector &psi,
                                        const std::vector<double> &deltas);

/// Checks the certainty bound at one shift: a substantial change of the
/// ray requires |δs|·ΔA ≥ ħ. When the evolved angle stays below the
/// substantiality threshold the premise fails and the report holds
/// vacuously, with a context string saying so.
BoundReport certainty_verdict(const EvolutionContext &ctx, const StateVector &psi,
                              double delta_s);

/// The verdict logic alone, for callers that already know the realized
/// angle and the product |δs|·ΔA (e.g. factorized multi-axis shifts):
/// checks ħ ≤ |δs|·ΔA when the angle is substantial, holds vacuously
/// otherwise.
BoundReport certainty_report(double hbar, double angle, double shift_spread_product);

/// Smallest δs in (0, search_limit] at which the orbit's angle against
/// the start state reaches the substantiality threshold, located to
/// within 1e-9 by a forward scan plus bisection. The scan step
/// min(0.01·ħ/ΔA, search_limit/1000) cannot step over a crossing, since
/// the angle is (ΔA/ħ)-Lipschitz in δs. Returns nullopt when no shift in
/// range is substantial (in particular whenever ΔA = 0, where the ray
/// never moves at all).
std::optional<double> minimal_substantial_shift(const EvolutionContext &ctx,
                                                const StateVector &psi,
                                                double search_limit);

}  // namespace qangle
