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

#include "qangle/common.hpp"
#include "qangle/state.hpp"

namespace qangle {

/// Three rays reduced to a standard position inside C^3. Any triple of
/// equal-dimension states spans at most three dimensions, so unitary
/// freedom and per-ray phase freedom bring them to
///
///     a = (1, 0, 0),   b = (b1, z, b3),   c = (c1, c2, 0)
///
/// with b1, b3, c1, c2 real and non-negative and z complex. All three
/// pairwise angles are preserved by the reduction. The middle coordinate
/// of b is the only place a complex phase survives.
struct CanonicalTriple {
    StateVector a;
    StateVector b;
    StateVector c;
    double b1;
    double b3;
    double c1;
    double c2;
    Complex z;
};

/// Reduces three equal-dimension states to canonical position. Collinear
/// and coplanar triples land on the same form with the redundant
/// coordinates equal to zero.
CanonicalTriple canonicalize_triple(const StateVector &a, const StateVector &b,
                                    const StateVector &c);

/// The comparison state b' = (b1, |z|, b3), normalized: b with its middle
/// phase stripped. Keeps the angle to a unchanged and never increases the
/// overlap gap to c, i.e. ∠(a,b') = ∠(a,b) and ∠(b',c) ≤ ∠(b,c). Together
/// with the reduction this pins the extremal configurations of three rays
/// to real vectors on a sphere octant.
StateVector auxiliary_b_prime(const CanonicalTriple &triple);

}  // namespace qangle
