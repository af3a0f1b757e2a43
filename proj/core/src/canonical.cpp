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

#include "qangle/canonical.hpp"

#include <algorithm>
#include <cmath>

namespace qangle {

namespace {

// Residuals below this are treated as exactly in-span. Dropping them
// perturbs each preserved angle by no more than ~1e-10.
constexpr double kResidualFloor = 1e-10;

// Phase that rotates v so its overlap against the reference becomes the
// real value |overlap| >= 0.
Complex aligning_phase(Complex overlap) {
    const double mag = std::abs(overlap);
    if (mag == 0.0) {
        return Complex(1.0, 0.0);
    }
    return std::conj(overlap) / mag;
}

// Removes the components of v along the given orthonormal directions.
// A second projection pass keeps the result orthogonal at machine
// precision even when the residual is tiny relative to v.
void project_out(CVector &v, const CVector &e) {
    v -= e * e.dot(v);
    v -= e * e.dot(v);
}

}  // namespace

CanonicalTriple canonicalize_triple(const StateVector &a, const StateVector &b,
                                    const StateVector &c) {
    if (a.dim() != b.dim() || a.dim() != c.dim()) {
        throw std::invalid_argument("canonicalize_triple: dimension mismatch");
    }
    const CVector &va = a.amplitudes();

    // First frame vector: the ray a itself. c is phase-rotated so its
    // coordinate along a is real and non-negative.
    const Complex oc = va.dot(c.amplitudes());
    const CVector ct = c.amplitudes() * aligning_phase(oc);
    double c1 = std::abs(oc);

    CVector res_c = ct - c1 * va;
    project_out(res_c, va);
    const double rc = res_c.norm();

    CVector e2;
    bool have_e2 = rc > kResidualFloor;
    double c2 = 0.0;
    if (have_e2) {
        e2 = res_c / rc;
        c2 = rc;
    }

    const Complex ob = va.dot(b.amplitudes());
    const CVector bt = b.amplitudes() * aligning_phase(ob);
    double b1 = std::abs(ob);

    if (!have_e2) {
        // a and c span a single direction; the second frame vector can
        // come from b instead, leaving c with no second coordinate.
        CVector res_b = bt - b1 * va;
        project_out(res_b, va);
        const double rb = res_b.norm();
        if (rb > kResidualFloor) {
            e2 = res_b / rb;
            have_e2 = true;
        }
    }

    Complex z(0.0, 0.0);
    if (have_e2) {
        z = e2.dot(bt);
    }

    // The third coordinate of b is the norm of what remains, which fixes
    // the third frame vector implicitly; only b ever uses it.
    CVector res_b3 = bt - b1 * va;
    if (have_e2) {
        res_b3 -= z * e2;
        project_out(res_b3, e2);
    }
    project_out(res_b3, va);
    double b3 = res_b3.norm();
    if (b3 <= kResidualFloor) {
        b3 = 0.0;
    }

    // Rescale the coordinate tuples to unit norm; they already are up to
    // the rounding of the projections above.
    const double nb = std::sqrt(b1 * b1 + std::norm(z) + b3 * b3);
    b1 /= nb;
    z /= nb;
    b3 /= nb;
    const double nc = std::hypot(c1, c2);
    c1 /= nc;
    c2 /= nc;
    b1 = std::clamp(b1, 0.0, 1.0);
    b3 = std::clamp(b3, 0.0, 1.0);
    c1 = std::clamp(c1, 0.0, 1.0);
    c2 = std::clamp(c2, 0.0, 1.0);

    CVector ca(3), cb(3), cc(3);
    ca << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0);
    cb << Complex(b1, 0.0), z, Complex(b3, 0.0);
    cc << Complex(c1, 0.0), Complex(c2, 0.0), Complex(0.0, 0.0);

    return CanonicalTriple{StateVector(ca), normalize(cb), normalize(cc),
                           b1, b3, c1, c2, z};
}

StateVector auxiliary_b_prime(const CanonicalTriple &triple) {
    CVector bp(3);
    bp << Complex(triple.b1, 0.0), Complex(std::abs(triple.z), 0.0),
        Complex(triple.b3, 0.0);
    return normalize(bp);
}

}  // namespace qangle
