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

#ifndef HLA_FACTOR_HPP
#define HLA_FACTOR_HPP

#include <map>
#include <variant>
#include <vector>

#include "hla/matrix.hpp"
#include "hla/measure.hpp"
#include "hla/polynomial.hpp"

namespace hla {

// E_ij(param): identity plus param in position (i,j), i != j. Indices are
// 0-based here; the JSON interface emits them 1-based.
struct ElementaryFactor {
    std::size_t i = 0, j = 1;
    std::variant<Complex, Polynomial1, HalfLineMeasure> param;
};

struct ComplexMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;  // row-major

    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : n(dim), a(dim * dim) {}
    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    Complex at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    static ComplexMatrix identity(std::size_t n);
    double max_entry_dist(const ComplexMatrix& other) const;
};

struct PolyMatrix {
    std::size_t n = 0;
    std::vector<Polynomial1> a;

    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t dim) : n(dim), a(dim * dim) {}
    Polynomial1& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Polynomial1& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
    static PolyMatrix identity(std::size_t n);
    double max_coeff_dist(const PolyMatrix& other) const;
};

Complex det_complex(const ComplexMatrix& m);
Polynomial1 det_poly(const PolyMatrix& m);  // n <= 3 cofactor expansion

// Shear-only Gaussian elimination (row additions, never swaps) to a
// diagonal of determinant 1, then Whitehead reduction of each
// diag(lambda, 1/lambda) block. The product of the returned shears
// reproduces the input; no factor-count guarantee.
std::vector<ElementaryFactor> factor_complex(const ComplexMatrix& c);

// SL_2(C[z]) by Euclidean division on the first column; det must equal
// the constant polynomial 1.
std::vector<ElementaryFactor> factor_poly(const PolyMatrix& m);

// Left-to-right product of shears in the stated ring.
ComplexMatrix product_complex(const std::vector<ElementaryFactor>& fs, std::size_t n);
PolyMatrix product_poly(const std::vector<ElementaryFactor>& fs, std::size_t n);
MeasureMatrix product_measure(const std::vector<ElementaryFactor>& fs, std::size_t n,
                              const ConvolveOptions& opts = {});

// The 2x2 matrix [[1+z1 z2, z1^2], [-z2^2, 1-z1 z2]] over C[z1,z2].
struct Poly2Matrix {
    std::vector<Polynomial2> a;  // row-major 2x2
    const Polynomial2& at(std::size_t i, std::size_t j) const { return a[i * 2 + j]; }
};
Poly2Matrix cohn_matrix();
Polynomial2 det_poly2(const Poly2Matrix& m);

// Lattice-atomic measure <-> multi-index coefficient map over the
// semigroup generated by the (rationally independent) base frequencies.
// Convolution maps to polynomial multiplication and TV norm to the
// coefficient l1 norm.
using LatticeCoeffs = std::map<std::vector<int>, Complex>;
LatticeCoeffs atoms_to_poly(const HalfLineMeasure& mu, const std::vector<double>& base);
HalfLineMeasure poly_to_atoms(const LatticeCoeffs& coeffs, const std::vector<double>& base);
LatticeCoeffs lattice_poly_mul(const LatticeCoeffs& a, const LatticeCoeffs& b);

}  // namespace hla

#endif
