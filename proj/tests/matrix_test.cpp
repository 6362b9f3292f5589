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
#include "hla/matrix.hpp"

namespace {

using hla::Complex;
using hla::HalfLineMeasure;
using hla::MeasureMatrix;

double entry_dist(const MeasureMatrix& a, const MeasureMatrix& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        m = std::max(m, hla::tv_norm(hla::sub(a.entries[k], b.entries[k])));
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("product of two opposite shears") {
    hla::Rng crng(37);
    const auto rho = hla::random_atomic(crng);
    const auto sigma = hla::random_atomic(crng);
    const auto prod = hla::mat_mul(MeasureMatrix::shear(2, 0, 1, rho),
                                   MeasureMatrix::shear(2, 1, 0, sigma));
    // [[d, rho],[0, d]] * [[d, 0],[sigma, d]] = [[d + rho*sigma, rho],[sigma, d]]
    MeasureMatrix expect(2);
    expect.at(0, 0) = hla::add(hla::dirac(), hla::convolve(rho, sigma));
    expect.at(0, 1) = rho;
    expect.at(1, 0) = sigma;
    expect.at(1, 1) = hla::dirac();
    CHECK(entry_dist(prod, expect) < 1e-13);
    // Shears have determinant dirac; atomic products keep that exactly.
    CHECK(hla::det_residual(prod) < 1e-13);
}

TEST_CASE("determinant via cofactor expansion, 3x3 atomic") {
    hla::Rng crng(41);
    const auto m = hla::random_shear_matrix(crng, 3, 4, /*atomic=*/true);
    CHECK(hla::det_residual(m) < 1e-12);
}

TEST_CASE("geometric series inverse of dirac plus half shift") {
    // (d + (1/2) d_1)^{-1} = sum_k (-1/2)^k d_k, truncated at the horizon.
    const auto mu = hla::add(hla::dirac(), hla::scale(0.5, hla::dirac_at(1.0)));
    const auto inv = hla::invert_measure(mu, hla::NeumannOptions{32.0, 0x1p-60, 10000});
    double max_err = 0.0;
    for (const auto& a : inv.atoms()) {
        const double k = std::round(a.loc);
        CHECK(std::abs(a.loc - k) < 1e-12);
        const double expect = std::pow(-0.5, k);
        max_err = std::max(max_err, std::abs(a.weight - Complex{expect}));
    }
    CHECK(max_err < 1e-12);
    CHECK(inv.atoms().size() >= 30);
    // Residual of the inversion: mu * inv = dirac up to the dropped tail.
    const auto resid = hla::sub(hla::convolve(mu, inv), hla::dirac());
    CHECK(hla::tv_norm(resid) < 0x1p-30);
}

TEST_CASE("inversion requires a dominant weight at zero") {
    CHECK_THROWS_AS(hla::invert_measure(hla::dirac_at(1.0)), hla::DomainError);
    const auto bad = hla::add(hla::dirac(), hla::scale(2.0, hla::dirac_at(1.0)));
    CHECK_THROWS_AS(hla::invert_measure(bad), hla::DomainError);
}

TEST_CASE("adjugate inverse of a shear product") {
    hla::Rng crng(43);
    const auto m = hla::random_shear_matrix(crng, 2, 3, /*atomic=*/true);
    const hla::ConvolveOptions conv{hla::kDefaultHorizon};
    const auto inv = hla::invert_matrix(m, hla::NeumannOptions{});
    const auto prod = hla::mat_mul(m, inv, conv);
    CHECK(entry_dist(prod, MeasureMatrix::identity(2)) < 1e-9);
}

TEST_CASE("near-identity inverse by the matrix Neumann series") {
    MeasureMatrix n(2);
    n.at(0, 1) = hla::scale(0.4, hla::dirac_at(0.5));
    n.at(1, 0) = hla::scale(0.3, hla::dirac_at(0.25));
    const auto m = hla::mat_add(MeasureMatrix::identity(2), n);
    const auto inv = hla::invert_near_identity(m);
    const auto prod = hla::mat_mul(m, inv, hla::ConvolveOptions{hla::kDefaultHorizon});
    CHECK(entry_dist(prod, MeasureMatrix::identity(2)) < 1e-9);
}

TEST_CASE("application is bounded by the Frobenius-type norm") {
    hla::Rng crng(47);
    for (int k = 0; k < 10; ++k) {
        const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
        const auto m = hla::random_shear_matrix(crng, n, 3, /*atomic=*/true);
        const auto v = hla::random_vector(crng, n, /*atomic=*/true);
        const auto mv = hla::mat_apply(m, v);
        CHECK(hla::vector_norm2(mv) <=
              hla::frobenius_bound(m) * hla::vector_norm2(v) + 1e-12);
    }
}

TEST_CASE("matrix deformation acts entrywise") {
    hla::Rng crng(53);
    const auto m = hla::random_shear_matrix(crng, 2, 2, /*atomic=*/true);
    const auto mt = hla::deform_matrix(m, 0.375);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(hla::tv_norm(hla::sub(mt.entries[k], hla::deform(m.entries[k], 0.375))) == 0.0);
}

TEST_SUITE_END();
