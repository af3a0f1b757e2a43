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

#include "qangle/generator.hpp"

#include <cmath>
#include <random>
#include <string>
#include <utility>

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qangle {

namespace {

// Dimension up to which decomposition checks run on full matrices;
// beyond it, randomized probes keep validation at O(n^2).
constexpr Eigen::Index kExhaustiveCheckDim = 256;

double matrix_scale(const CMatrix &a) {
    return std::max(1.0, a.cwiseAbs().maxCoeff());
}

void check_hermitian(const CMatrix &a, const char *who) {
    if (a.rows() == 0 || a.rows() != a.cols()) {
        throw std::invalid_argument(std::string(who) + ": matrix must be square and non-empty");
    }
    if (!a.allFinite()) {
        throw std::invalid_argument(std::string(who) + ": matrix entries must be finite");
    }
    const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (dev > HermitianGenerator::kHermitianTolerance * matrix_scale(a)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian");
    }
}

// Validates A = V diag(w) V† and V†V = I. Exhaustive at small dimension;
// randomized probe vectors otherwise (a mismatch of relative size eps
// survives a random probe with probability ~eps^2).
void check_decomposition(const CMatrix &a, const CMatrix &v, const RVector &w,
                         const char *who) {
    const Eigen::Index n = a.rows();
    const double tol = HermitianGenerator::kDecompositionTolerance * matrix_scale(a);
    if (n <= kExhaustiveCheckDim) {
        const double unit_dev =
            (v.adjoint() * v - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
        if (unit_dev > HermitianGenerator::kDecompositionTolerance) {
            throw std::invalid_argument(std::string(who) + ": eigenvector matrix is not unitary");
        }
        const double rec_dev =
            (v * w.asDiagonal() * v.adjoint() - a).cwiseAbs().maxCoeff();
        if (rec_dev > tol) {
            throw std::invalid_argument(
                std::string(who) + ": decomposition does not reconstruct the matrix");
        }
        return;
    }
    std::mt19937_64 rng(0x5eedc0defeedface);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int probe = 0; probe < 4; ++probe) {
        CVector x(n);
        for (Eigen::Index i = 0; i < n; ++i) {
            x(i) = Complex(gauss(rng), gauss(rng));
        }
        x /= x.norm();
        const CVector vx = v * x;
        if ((v.adjoint() * vx - x).norm() > HermitianGenerator::kDecompositionTolerance) {
            throw std::invalid_argument(std::string(who) + ": eigenvector matrix is not unitary");
        }
        if ((a * vx - v * (w.asDiagonal() * x)).norm() > tol) {
            throw std::invalid_argument(
                std::string(who) + ": decomposition does not reconstruct the matrix");
        }
    }
}

// Computes the full eigensystem of a Hermitian matrix with LAPACK's
// divide-and-conquer driver; the input's lower triangle is read.
void hermitian_eigensystem(const CMatrix &a, CMatrix &vectors, RVector &values) {
    const lapack_int n = static_cast<lapack_int>(a.rows());
    vectors = a;
    values.resize(n);
    const lapack_int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                           vectors.data(), n, values.data());
    if (info != 0) {
        throw std::runtime_error("HermitianGenerator: eigensolver failed (zheevd info=" +
                                 std::to_string(info) + ")");
    }
}

}  // namespace

HermitianGenerator::HermitianGenerator(CMatrix matrix, CMatrix eigenvectors,
                                       RVector eigenvalues, VerifiedTag)
    : matrix_(std::move(matrix)),
      eigenvectors_(std::move(eigenvectors)),
      eigenvalues_(std::move(eigenvalues)) {}

HermitianGenerator::HermitianGenerator(CMatrix matrix) : matrix_(std::move(matrix)) {
    check_hermitian(matrix_, "HermitianGenerator");
    hermitian_eigensystem(matrix_, eigenvectors_, eigenvalues_);
    check_decomposition(matrix_, eigenvectors_, eigenvalues_, "HermitianGenerator");
}

HermitianGenerator HermitianGenerator::from_parts(CMatrix matrix, CMatrix eigenvectors,
                                                  RVector eigenvalues) {
    check_hermitian(matrix, "HermitianGenerator::from_parts");
    if (eigenvectors.rows() != matrix.rows() || eigenvectors.cols() != matrix.cols()) {
        throw std::invalid_argument(
            "HermitianGenerator::from_parts: eigenvector matrix shape mismatch");
    }
    if (eigenvalues.size() != matrix.rows()) {
        throw std::invalid_argument(
            "HermitianGenerator::from_parts: eigenvalue count mismatch");
    }
    if (!eigenvectors.allFinite() || !eigenvalues.allFinite()) {
        throw std::invalid_argument(
            "HermitianGenerator::from_parts: decomposition entries must be finite");
    }
    check_decomposition(matrix, eigenvectors, eigenvalues,
                        "HermitianGenerator::from_parts");
    return HermitianGenerator(std::move(matrix), std::move(eigenvectors),
                              std::move(eigenvalues), VerifiedTag{});
}

CVector HermitianGenerator::apply(const CVector &x) const {
    if (x.size() != dim()) {
        throw std::invalid_argument("HermitianGenerator::apply: dimension mismatch");
    }
    return matrix_ * x;
}

HermitianGenerator combined_generator(const std::vector<double> &coefficients,
                                      const std::vector<HermitianGenerator> &generators) {
    if (generators.empty()) {
        throw std::invalid_argument("combined_generator: no generators given");
    }
    if (coefficients.size() != generators.size()) {
        throw std::invalid_argument(
            "combined_generator: coefficient and generator counts differ");
    }
    const Eigen::Index n = generators.front().dim();
    for (const HermitianGenerator &g : generators) {
        if (g.dim() != n) {
            throw std::invalid_argument("combined_generator: dimension mismatch");
        }
    }
    for (double c : coefficients) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("combined_generator: coefficients must be finite");
        }
    }
    CMatrix sum = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        sum.noalias() += coefficients[i] * generators[i].matrix();
    }
    return HermitianGenerator(std::move(sum));
}

}  // namespace qangle
