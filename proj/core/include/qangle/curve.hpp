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
#include <iosfwd>
#include <string>
#include <vector>

#include "qangle/bound.hpp"
#include "qangle/common.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// A sampled curve of states: strictly increasing parameter values with
/// one normalized state per node. Derivative quantities are computed by
/// finite differences on the samples, so their accuracy is set by the
/// node spacing.
class Curve {
  public:
    /// Throws std::invalid_argument on size mismatch, empty input,
    /// non-increasing parameters, or mixed state dimensions.
    Curve(std::vector<double> params, std::vector<StateVector> states);

    std::size_t node_count() const { return params_.size(); }
    double param(std::size_t k) const { return params_.at(k); }
    const StateVector &state(std::size_t k) const { return states_.at(k); }
    const std::vector<double> &params() const { return params_; }
    Eigen::Index dim() const { return states_.front().dim(); }

  private:
    std::vector<double> params_;
    std::vector<StateVector> states_;
};

/// Finite-difference velocity at node k: central differences on interior
/// nodes (second order on uniform grids), one-sided at the two endpoints.
/// Requires at least two nodes.
CVector velocity_at(const Curve &curve, std::size_t k);

/// Velocity split against the current state r: the component along r and
/// the remainder orthogonal to it, v = parallel + perpendicular.
struct VelocityDecomposition {
    CVector parallel;
    CVector perpendicular;
};

VelocityDecomposition decompose_velocity(const StateVector &r, const CVector &v);

/// Speed of ray motion at node k: the norm of the perpendicular velocity
/// component. The parallel component only changes phase and scale, which
/// the ray cannot see.
double angular_speed(const Curve &curve, std::size_t k);

/// Integral of the angular speed over the parameter range: composite
/// Simpson on uniform grids with an even interval count, trapezoid
/// otherwise. Requires at least two nodes.
double arc_length(const Curve &curve);

/// Checks that the angle between the curve's endpoints does not exceed
/// its arc length. True for exact curves; the report's tolerance widens
/// with the squared node spacing to absorb discretization error.
BoundReport check_estimate(const Curve &curve);

/// One exported sample of a curve: parameter, angular speed, length
/// accumulated so far (trapezoid partial sums), and angle back to the
/// first node.
struct CurveRow {
    double t;
    double omega;
    double cumulative_length;
    double angle_to_start;
};

/// The rows behind the CSV export. A single-node curve produces one row
/// of zeros after the parameter.
std::vector<CurveRow> curve_rows(const Curve &curve);

/// Writes the curve as CSV with header t,omega,cumulative_length,
/// angle_to_start.
void write_curve_csv(const Curve &curve, std::ostream &out);

/// Same rows, returned as a string.
std::string curve_csv(const Curve &curve);

}  // namespace qangle
