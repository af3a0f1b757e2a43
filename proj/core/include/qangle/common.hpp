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

#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace qangle {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

/// Angle threshold, in radians, at and above which two rays are treated
/// as substantially different. Exactly 1, by definition; not to be
/// confused with the maximal angle kRightAngle.
inline constexpr double kSubstantialAngle = 1.0;

/// Largest possible angle between two rays (orthogonal states).
inline constexpr double kRightAngle = std::numbers::pi / 2.0;

/// Thrown when a numerical validity guard trips: a packet too narrow for
/// its grid, support clipped by the domain boundary, a tensor product too
/// large to materialize. Distinct from std::invalid_argument, which
/// signals a violated call contract.
class guard_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qangle
