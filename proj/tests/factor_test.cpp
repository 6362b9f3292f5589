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

#include <doctest.h>

#include <cmath>

#include "hla/corpus.hpp"
#include "hla/factor.hpp"

namespace {

using hla::Complex;
using hla::ComplexMatrix;
using hla::ElementaryFactor;
using hla::Polynomial1;
using hla::PolyMatrix;

}  // namespace

TEST_SUITE_BEGIN("factor");

TEST_CASE("complex shear factorization round trip with unimodular prefixes") {
    hla::Rng crng(59);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
        const ComplexMatrix c = hla::random_complex_sl(crng, n);
        const auto fs = hla::factor_complex(c);
        CHECK(hla::product_complex(fs, n).max_entry_dist(c) < 1e-10);
        // Every prefix of a shear product stays in SL_n.
        std::vector<ElementaryFactor> prefix;
        for (const auto& f : fs) {
            prefix.push_back(f);
            CHECK(std::abs(hla::det_complex(hla::product_complex(prefix, n)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("diagonal matrices factor through the Whitehead identity") {
    ComplexMatrix d(2);
    d.at(0, 0) = 2.0;
    d.at(1, 1) = 0.5;
    const auto fs = hla::factor_complex(d);
    CHECK(hla::product_complex(fs, 2).max_entry_dist(d) < 1e-12);
    for (const auto& f : fs) CHECK(f.i != f.j);
}

TEST_CASE("non-unimodular complex matrices are rejected") {
    ComplexMatrix m(2);
    m.at(0, 0) = 2.0;
    m.at(1, 1) = 1.0;
    CHECK_THROWS_AS(hla::factor_complex(m), hla::DomainError);
}

TEST_CASE("polynomial factorization of a hand-built shear product") {
    const std::vector<ElementaryFactor> built = {
        {1, 0, Polynomial1{0.0, 1.0}},              // E21(z)
        {0, 1, Polynomial1{1.0, 0.0, 1.0}},         // E12(1 + z^2)
        {1, 0, Polynomial1{Complex{0.0, -1.0}}},    // E21(-i)
    };
    const PolyMatrix m = hla::product_poly(built, 2);
    const auto fs = hla::factor_poly(m);
    CHECK(hla::product_poly(fs, 2).max_coeff_dist(m) < 1e-10);
}

TEST_CASE("polynomial factorization round trip on random products") {
    hla::Rng crng(61);
    for (int k = 0; k < 40; ++k) {
        const auto [m, built] = hla::random_poly_sl2(crng, 4, 5);
        const auto fs = hla::factor_poly(m);
        CHECK(hla::product_poly(fs, 2).max_coeff_dist(m) < 1e-9);
    }
}

TEST_CASE("polynomial factorization rejects non-constant determinants") {
    PolyMatrix m(2);
    m.at(0, 0) = Polynomial1{1.0, 1.0};  // det = 1 + z
    m.at(1, 1) = Polynomial1{1.0};
    CHECK_THROWS_AS(hla::factor_poly(m), hla::DomainError);
}

TEST_CASE("measure shear products rebuild through product_measure") {
    hla::Rng crng(67);
    const auto rho = hla::random_atomic(crng);
    const auto sigma = hla::random_atomic(crng);
    const std::vector<ElementaryFactor> fs = {{0, 1, rho}, {1, 0, sigma}};
    const auto m = hla::product_measure(fs, 2);
    const auto direct = hla::mat_mul(hla::MeasureMatrix::shear(2, 0, 1, rho),
                                     hla::MeasureMatrix::shear(2, 1, 0, sigma));
    double dist = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
        dist = std::max(dist, hla::tv_norm(hla::sub(m.entries[k], direct.entries[k])));
    CHECK(dist < 1e-13);
}

TEST_CASE("the two-variable witness matrix is exactly unimodular") {
    const auto c = hla::cohn_matrix();
    const auto d = hla::det_poly2(c);
    CHECK(d.max_coeff_dist(hla::Polynomial2::constant(1.0)) == 0.0);
    // Spot-check the entries: (1,1) = 1 + z1 z2, (0,1) coefficient of z1^2.
    CHECK(c.at(0, 0).coeff(0, 0) == Complex{1.0});
    CHECK(c.at(0, 0).coeff(1, 1) == Complex{1.0});
    CHECK(c.at(0, 1).coeff(2, 0) == Complex{1.0});
    CHECK(c.at(1, 0).coeff(0, 2) == Complex{-1.0});
}

TEST_CASE("lattice atoms map isomorphically onto coefficient arrays") {
    const std::vector<double> base{1.0, std::sqrt(2.0)};
    const auto mu = hla::HalfLineMeasure::from_atoms({{0.0, Complex{0.5, 0.5}},
                                                      {1.0, 1.0},
                                                      {std::sqrt(2.0), Complex{0.0, -1.0}},
                                                      {1.0 + std::sqrt(2.0), 0.25}});
    const auto nu = hla::HalfLineMeasure::from_atoms({{1.0, 2.0}, {2.0, Complex{0.0, 1.0}}});

    const auto pm = hla::atoms_to_poly(mu, base);
    const auto pn = hla::atoms_to_poly(nu, base);

    // Round trip.
    CHECK(hla::tv_norm(hla::sub(hla::poly_to_atoms(pm, base), mu)) < 1e-12);

    // Convolution corresponds to coefficient multiplication.
    const auto conv = hla::convolve(mu, nu);
    const auto prod = hla::poly_to_atoms(hla::lattice_poly_mul(pm, pn), base);
    CHECK(hla::tv_norm(hla::sub(conv, prod)) < 1e-12);

    // The tv norm corresponds to the coefficient l1 norm.
    double l1 = 0.0;
    for (const auto& [idx, c] : pm) l1 += std::abs(c);
    CHECK(l1 == doctest::Approx(hla::tv_norm(mu)).epsilon(1e-12));

    // Atoms off the lattice are rejected.
    const auto off = hla::HalfLineMeasure::from_atoms({{0.77, 1.0}});
    CHECK_THROWS_AS(hla::atoms_to_poly(off, base), hla::DomainError);
}

TEST_SUITE_END();
