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

#include <vector>

#include "qangle/common.hpp"

namespace qangle {

/// A Hermitian operator together with its spectral decomposition
/// A = V diag(λ) V†. The decomposition is computed (or supplied) once at
/// construction and cached, so repeated one-parameter evolutions need
/// only two matrix-vector products each.
class HermitianGenerator {
  public:
    /// Max |A - A†| entry accepted, relative to max(1, max |A| entry).
    static constexpr double kHermitianTolerance = 1e-10;
    /// Residual accepted when validating a decomposition against its
    /// matrix, relative to max(1, max |A| entry).
    static constexpr double kDecompositionTolerance = 1e-8;

    /// Validates Hermiticity and diagonalizes. Throws
    /// std::invalid_argument for empty, non-square, non-finite, or
    /// non-Hermitian input; std::runtime_error if the eigensolver fails
    /// or its output does not reconstruct the matrix.
    explicit HermitianGenerator(CMatrix matrix);

    /// Builds from a matrix whose eigensystem is already known in closed
    /// form (diagonal operators, circulant operators with a Fourier
    /// eigenbasis, tensor products of solved factors). The claimed
    /// decomposition is verified: unitarity of V and the residual
    /// A·V = V·diag(λ), exhaustively at small dimension and by randomized
    /// probes at large. Throws std::invalid_argument when verification
    /// fails.
    static HermitianGenerator from_parts(CMatrix matrix, CMatrix eigenvectors,
                                         RVector eigenvalues);

    Eigen::Index dim() const { return matrix_.rows(); }
    const CMatrix &matrix() const { return matrix_; }
    const CMatrix &eigenvectors() const { return eigenvectors_; }
    const RVector &eigenvalues() const { return eigenvalues_; }

    /// The matrix applied to a vector.
    CVector apply(const CVector &x) const;

  private:
    struct VerifiedTag {};
    HermitianGenerator(CMatrix matrix, CMatrix eigenvectors, RVector eigenvalues,
                       VerifiedTag);

    CMatrix matrix_;
    CMatrix eigenvectors_;
    RVector eigenvalues_;
};

/// Real linear combination Σ coefficients[i] · generators[i]. The sum is
/// re-checked for Hermiticity and freshly diagonalized; with mixed signs,
/// cancellation can make its spectrum unrelated to the inputs' spectra.
HermitianGenerator combined_generator(const std::vector<double> &coefficients,
                                      const std::vector<HermitianGenerator> &generators);

}  // namespace qangle
