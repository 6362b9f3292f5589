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

#ifndef HLA_CORPUS_HPP
#define HLA_CORPUS_HPP

#include <cstdint>
#include <random>
#include <utility>

#include "hla/factor.hpp"
#include "hla/matrix.hpp"
#include "hla/measure.hpp"

namespace hla {

// Seeded generators for randomized property suites. Every generator is a
// pure function of the engine state, so a fixed seed reproduces the whole
// corpus bit for bit.

using Rng = std::mt19937_64;

Complex random_unit_complex(Rng& rng);  // uniform on the closed unit disc

// Up to max_atoms atoms at uniform locations in [0, max_loc], weights in
// the unit disc. Always contains at least one atom.
HalfLineMeasure random_atomic(Rng& rng, std::size_t max_atoms = 5, double max_loc = 4.0);

// Smooth decaying density x (a + b x) e^{-c x} sampled on the grid,
// complex a, b, real c in [3, 5], support clipped at `support`. The shape
// vanishes at zero and is negligible at the clip edge, so the sampled
// support carries no jumps.
HalfLineMeasure random_density_measure(Rng& rng, double h = kDefaultH, double support = 4.0);

// Atomic part plus density part.
HalfLineMeasure random_mixed(Rng& rng, double h = kDefaultH, double support = 4.0);

// SL_n over the measure algebra: left-to-right product of at most
// max_shears shears whose parameters are scaled random measures
// (tv norm at most about 1/2 each). det == dirac by construction when
// atomic; within quadrature error when mixed.
MeasureMatrix random_shear_matrix(Rng& rng, std::size_t n, std::size_t max_shears,
                                  bool atomic, double h = kDefaultH);

MeasureVector random_vector(Rng& rng, std::size_t n, bool atomic, double h = kDefaultH);

// Generic (not shear-structured) complex matrix with det normalized to 1.
ComplexMatrix random_complex_sl(Rng& rng, std::size_t n);

// SL_2(C[z]) as a product of at most max_factors shears with polynomial
// parameters of degree at most max_deg.
std::pair<PolyMatrix, std::vector<ElementaryFactor>> random_poly_sl2(
    Rng& rng, std::size_t max_factors = 4, std::size_t max_deg = 5);

// The atomic l^1 approximation instance: f = E12(rho) E21(sigma) with
// truncated geometric atom tails rho = sum_k 2^-k dirac_{k/2},
// sigma = sum_k 2^-k dirac_{0.7 k} (60 terms, tail below the drop
// tolerance), and g the restriction of every entry of f to atoms with
// location <= cutoff. ||g - f|| is the dropped tail mass.
std::pair<MeasureMatrix, MeasureMatrix> desk_instance(double cutoff = 8.0);

}  // namespace hla

#endif
