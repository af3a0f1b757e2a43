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

#include "qangle/multi_axis.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qangle/evolution.hpp"

namespace qangle {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

RVector kron(const RVector &a, const RVector &b) {
    RVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

HermitianGenerator axis_momentum_embedding(const std::vector<LineGrid> &grids,
                                           std::size_t axis, double hbar) {
    if (axis >= grids.size()) {
        throw std::invalid_argument("axis_momentum_embedding: axis out of range");
    }
    const HermitianGenerator p = momentum_operator(grids[axis], hbar);
    CMatrix matrix(1, 1), vectors(1, 1);
    matrix(0, 0) = Complex(1.0, 0.0);
    vectors(0, 0) = Complex(1.0, 0.0);
    RVector values = RVector::Ones(1);
    for (std::size_t i = 0; i < grids.size(); ++i) {
        const Eigen::Index n = grids[i].size();
        if (i == axis) {
            matrix = kron(matrix, p.matrix());
            vectors = kron(vectors, p.eigenvectors());
            values = kron(values, p.eigenvalues());
        } else {
            matrix = kron(matrix, CMatrix::Identity(n, n));
            vectors = kron(vectors, CMatrix::Identity(n, n));
            values = kron(values, RVector::Ones(n));
        }
    }
    return HermitianGenerator::from_parts(std::move(matrix), std::move(vectors),
                                          std::move(values));
}

MultiAxisReport multi_axis_demo(const std::vector<LineGrid> &grids,
                                const std::vector<double> &sigmas,
                                const std::vector<double> &displacements,
                                double hbar, bool tensor_check) {
    const std::size_t axes = grids.size();
    if (axes != 2 && axes != 3) {
        throw std::invalid_argument("multi_axis_demo: supports 2 or 3 axes");
    }
    if (sigmas.size() != axes || displacements.size() != axes) {
        throw std::invalid_argument(
            "multi_axis_demo: sigmas and displacements must match the axis count");
    }
    for (double d : displacements) {
        if (!std::isfinite(d)) {
            throw std::invalid_argument("multi_axis_demo: displacements must be finite");
        }
    }

    MultiAxisReport report;
    std::vector<StateVector> packets;
    packets.reserve(axes);
    double variance = 0.0;
    Complex overlap(1.0, 0.0);
    for (std::size_t i = 0; i < axes; ++i) {
        packets.push_back(gaussian_packet(grids[i], 0.0, 0.0, sigmas[i], hbar));
        const double dp = std_dev(momentum_operator(grids[i], hbar), packets[i]);
        report.axis_momentum_spread.push_back(dp);
        variance += displacements[i] * displacements[i] * dp * dp;
        // Product state: the overlap after the simultaneous shift is the
        // product of the per-axis overlaps.
        overlap *= inner(packets[i], shift_state(grids[i], packets[i], displacements[i]));
    }
    report.delta_b = std::sqrt(variance);
    report.angle = std::acos(std::clamp(std::abs(overlap), 0.0, 1.0));
    report.substantial = report.angle >= kSubstantialAngle;
    report.verdict = certainty_report(hbar, report.angle, report.delta_b);

    if (tensor_check) {
        Eigen::Index total = 1;
        for (const LineGrid &g : grids) {
            total *= g.size();
        }
        if (total > kMaxTensorDim) {
            throw guard_error(
                "multi_axis_demo: tensor product dimension exceeds kMaxTensorDim");
        }
        CVector tensor_state = packets[0].amplitudes();
        for (std::size_t i = 1; i < axes; ++i) {
            tensor_state = kron(tensor_state.eval(), packets[i].amplitudes());
        }
        const StateVector psi(std::move(tensor_state));

        std::vector<HermitianGenerator> embedded;
        embedded.reserve(axes);
        for (std::size_t i = 0; i < axes; ++i) {
            embedded.push_back(axis_momentum_embedding(grids, i, hbar));
        }
        const HermitianGenerator combined =
            combined_generator(displacements, embedded);
        report.tensor_delta_b = std_dev(combined, psi);
    }
    return report;
}

}  // namespace qangle
