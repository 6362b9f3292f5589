/*
   Copyright 2026 The halfline authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLA_MATRIX_HPP
#define HLA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hla/measure.hpp"

namespace hla {

// Square matrix over the measure algebra; multiplication is entrywise
// sums of convolutions.
struct MeasureMatrix {
    std::size_t n = 0;
    std::vector<HalfLineMeasure> entries;  // row-major, n*n

    MeasureMatrix() = default;
    explicit MeasureMatrix(std::size_t dim) : n(dim), entries(dim * dim) {}

    HalfLineMeasure& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const HalfLineMeasure& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }

    static MeasureMatrix identity(std::size_t n);
    // I_n + param * e_ij (a shear); i != j, 0-based.
    static MeasureMatrix shear(std::size_t n, std::size_t i, std::size_t j,
                               const HalfLineMeasure& param);
};

struct MeasureVector {
    std::vector<HalfLineMeasure> entries;
    std::size_t size() const { return entries.size(); }
};

MeasureMatrix mat_mul(const MeasureMatrix& a, const MeasureMatrix& b,
                      const ConvolveOptions& opts = {});
MeasureVector mat_apply(const MeasureMatrix& m, const MeasureVector& v,
                        const ConvolveOptions& opts = {});
MeasureMatrix mat_add(const MeasureMatrix& a, const MeasureMatrix& b);
MeasureMatrix mat_sub(const MeasureMatrix& a, const MeasureMatrix& b);
MeasureMatrix mat_scale(Complex c, const MeasureMatrix& m);

// Cofactor expansion along the first row; the measure ring has no
// division, so elimination-based determinants are not available.
HalfLineMeasure det(const MeasureMatrix& m, const ConvolveOptions& opts = {});

// || det(m) - dirac || in total variation.
double det_residual(const MeasureMatrix& m, const ConvolveOptions& opts = {});

// sqrt(sum_ij ||m_ij||^2): computable upper bound for the operator norm.
double frobenius_bound(const MeasureMatrix& m);
// sqrt(sum_i ||v_i||^2)
double vector_norm2(const MeasureVector& v);

MeasureMatrix deform_matrix(const MeasureMatrix& m, double t);

struct NeumannOptions {
    double horizon = kDefaultHorizon;
    double term_tol = 0x1p-40;
    std::size_t max_terms = 10000;
};

// Inverse of mu = alpha*dirac + rho with |alpha| dominant, by Neumann
// series. Throws DomainError when the dominance condition fails (which
// signals "not invertible by this method", not "not invertible").
HalfLineMeasure invert_measure(const HalfLineMeasure& mu, const NeumannOptions& opts = {});

// Adjugate over invert_measure(det m).
MeasureMatrix invert_matrix(const MeasureMatrix& m, const NeumannOptions& opts = {});

// Inverse of m = I + N with frobenius_bound(N) < 1, by the matrix-level
// Neumann series.
MeasureMatrix invert_near_identity(const MeasureMatrix& m, const NeumannOptions& opts = {});

}  // namespace hla

#endif
