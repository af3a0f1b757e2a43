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

#include "qangle/line.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "qangle/evolution.hpp"

namespace qangle {

LineGrid::LineGrid(int size, double length) : size_(size), length_(length) {
    if (size < 8 || size % 2 != 0) {
        throw std::invalid_argument("LineGrid: size must be even and at least 8");
    }
    if (!(std::isfinite(length) && length > 0.0)) {
        throw std::invalid_argument("LineGrid: length must be positive and finite");
    }
}

double LineGrid::position(int k) const {
    if (k < 0 || k >= size_) {
        throw std::invalid_argument("LineGrid::position: index out of range");
    }
    return -0.5 * length_ + spacing() * k;
}

RVector LineGrid::positions() const {
    RVector x(size_);
    for (int k = 0; k < size_; ++k) {
        x(k) = position(k);
    }
    return x;
}

int LineGrid::mode_number(int j) const {
    if (j < 0 || j >= size_) {
        throw std::invalid_argument("LineGrid::mode_number: index out of range");
    }
    return j <= size_ / 2 ? j : j - size_;
}

double LineGrid::wavenumber(int j) const {
    return 2.0 * std::numbers::pi * mode_number(j) / length_;
}

CMatrix fourier_modes(const LineGrid &grid) {
    const int n = grid.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix v(n, n);
    for (int j = 0; j < n; ++j) {
        const double k = grid.wavenumber(j);
        for (int m = 0; m < n; ++m) {
            v(m, j) = std::polar(scale, k * grid.position(m));
        }
    }
    return v;
}

HermitianGenerator momentum_operator(const LineGrid &grid, double hbar) {
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument("momentum_operator: hbar must be positive and finite");
    }
    const int n = grid.size();

    // The matrix is circulant: entry (r, c) depends only on r - c, so one
    // pass over the n distinct mode sums fills all n^2 entries.
    //     P(r, c) = (ħ/n) Σ_j k_j exp(i·k_j·(x_r - x_c))
    std::vector<Complex> band(n);
    for (int d = 0; d < n; ++d) {
        Complex sum(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            const double k = grid.wavenumber(j);
            sum += k * std::polar(1.0, k * d * grid.spacing());
        }
        band[d] = sum * (hbar / n);
    }

    CMatrix p(n, n);
    for (int r = 0; r < n; ++r) {
        p(r, r) = Complex(band[0].real(), 0.0);
        for (int c = 0; c < r; ++c) {
            p(r, c) = band[r - c];
            p(c, r) = std::conj(band[r - c]);
        }
    }

    RVector eigenvalues(n);
    for (int j = 0; j < n; ++j) {
        eigenvalues(j) = hbar * grid.wavenumber(j);
    }
    return HermitianGenerator::from_parts(std::move(p), fourier_modes(grid),
                                          std::move(eigenvalues));
}

HermitianGenerator position_operator(const LineGrid &grid) {
    const int n = grid.size();
    const RVector x = grid.positions();
    CMatrix m = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        m(k, k) = x(k);
    }
    return HermitianGenerator::from_parts(std::move(m), CMatrix::Identity(n, n), x);
}

StateVector gaussian_packet(const LineGrid &grid, double center, double momentum,
                            double width, double hbar) {
    if (!std::isfinite(center) || !std::isfinite(momentum)) {
        throw std::invalid_argument("gaussian_packet: center and momentum must be finite");
    }
    if (!(std::isfinite(width) && width > 0.0)) {
        throw std::invalid_argument("gaussian_packet: width must be positive and finite");
    }
    if (!(std::isfinite(hbar) && hbar > 0.0)) {
        throw std::invalid_argument("gaussian_packet: hbar must be positive and finite");
    }
    if (width < 5.0 * grid.spacing()) {
        throw guard_error("gaussian_packet: width below 5 grid spacings is not resolved");
    }
    if (std::abs(center) + 6.0 * width > 0.5 * grid.length()) {
        throw guard_error("gaussian_packet: 6-sigma tail crosses the domain boundary");
    }
    CVector psi(grid.size());
    for (int m = 0; m < grid.size(); ++m) {
        const double x = grid.position(m);
        const double dx = x - center;
        psi(m) = std::polar(std::exp(-dx * dx / (4.0 * width * width)),
                            momentum * x / hbar);
    }
    return normalize(psi);
}

StateVector bump_packet(const LineGrid &grid, double center, double support) {
    if (!std::isfinite(center)) {
        throw std::invalid_argument("bump_packet: center must be finite");
    }
    if (!(std::isfinite(support) && support > 0.0)) {
        throw std::invalid_argument("bump_packet: support must be positive and finite");
    }
    if (support < 10.0 * grid.spacing()) {
        throw guard_error("bump_packet: support below 10 grid spacings is not resolved");
    }
    if (std::abs(center) + 0.5 * support > 0.5 * grid.length()) {
        throw guard_error("bump_packet: support crosses the domain boundary");
    }
    CVector psi = CVector::Zero(grid.size());
    for (int m = 0; m < grid.size(); ++m) {
        const double u = 2.0 * (grid.position(m) - center) / support;
        if (std::abs(u) < 1.0) {
            psi(m) = std::exp(-1.0 / (1.0 - u * u));
        }
    }
    return normalize(psi);
}

StateVector shift_state(const LineGrid &grid, const StateVector &psi, double delta_x) {
    if (!std::isfinite(delta_x)) {
        throw std::invalid_argument("shift_state: delta_x must be finite");
    }
    if (psi.dim() != grid.size()) {
        throw std::invalid_argument("shift_state: state dimension does not match grid");
    }
    const CMatrix v = fourier_modes(grid);
    CVector coeffs = v.adjoint() * psi.amplitudes();
    for (int j = 0; j < grid.size(); ++j) {
        coeffs(j) *= std::polar(1.0, -grid.wavenumber(j) * delta_x);
    }
    return StateVector(v * coeffs);
}

BoundReport pauli_weyl_check(const LineGrid &grid, const StateVector &psi, double hbar) {
    const double dx = std_dev(position_operator(grid), psi);
    const double dp = std_dev(momentum_operator(grid, hbar), psi);
    return make_bound_report("position-momentum spread product at least hbar/2",
                             0.5 * hbar, dx * dp, 1e-9 * hbar);
}

}  // namespace qangle
