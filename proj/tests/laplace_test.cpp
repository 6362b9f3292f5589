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
#include "hla/laplace.hpp"

namespace {

using hla::Complex;

}  // namespace

TEST_SUITE_BEGIN("laplace");

TEST_CASE("points with negative real part are rejected") {
    CHECK_THROWS_AS(hla::HalfPlanePoint(Complex{-0.1, 2.0}), hla::DomainError);
    CHECK_NOTHROW(hla::HalfPlanePoint(Complex{0.0, -5.0}));
}

TEST_CASE("atomic transforms are exact exponential sums") {
    const auto mu = hla::HalfLineMeasure::from_atoms({{0.0, 2.0}, {1.5, Complex{0.0, 1.0}}});
    for (Complex s : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 3.0}}) {
        const Complex expect = 2.0 + Complex{0.0, 1.0} * std::exp(-1.5 * s);
        CHECK(std::abs(hla::laplace_eval(mu, s) - expect) < 1e-15);
    }
}

TEST_CASE("sampled exponential density matches its closed form") {
    // mu has density e^{-x} on [0, L]; the transform is
    // (1 - e^{-L(1+s)}) / (1+s). The sampler integrates the
    // piecewise-linear interpolant exactly, so the only error is the
    // O(h^2) interpolation error of e^{-x}.
    const double h = 0x1p-10, L = 32.0;
    const auto n = static_cast<std::size_t>(std::round(L / h)) + 1;
    hla::Density d = hla::Density::zeros(h, n);
    for (std::size_t k = 0; k < n; ++k)
        d.set(k, std::exp(-h * static_cast<double>(k)));
    const auto mu = hla::HalfLineMeasure::from_density(d);
    for (Complex s : {Complex{0.0, 0.0}, Complex{0.5, 0.0}, Complex{10.0, 0.0},
                      Complex{1.0, 4.0}, Complex{0.0, 7.0}}) {
        const Complex expect = (1.0 - std::exp(-L * (1.0 + s))) / (1.0 + s);
        CHECK(std::abs(hla::laplace_eval(mu, s) - expect) < 1e-6);
    }
}

TEST_CASE("transform is bounded by the tv norm on the half plane") {
    hla::Rng crng(23);
    for (int k = 0; k < 5; ++k) {
        const auto mu = hla::random_mixed(crng, 0x1p-8, 2.0);
        const double bound = hla::tv_norm(mu) + 1e-9;
        for (Complex s : {Complex{0.0, 0.0}, Complex{3.0, -2.0}, Complex{50.0, 0.0}})
            CHECK(std::abs(hla::laplace_eval(mu, s)) <= bound);
    }
}

TEST_CASE("deformation shifts the transform argument") {
    hla::Rng crng(29);
    const auto atomic = hla::random_atomic(crng);
    const auto mixed = hla::random_mixed(crng, 0x1p-8, 2.0);
    for (double t : {0.0, 0.25, 0.5, 0.99}) {
        for (Complex s : {Complex{0.0, 0.0}, Complex{1.0, 1.0}, Complex{4.0, 0.0}}) {
            CHECK(hla::laplace_shift_residual(atomic, t, hla::HalfPlanePoint(s)) < 1e-12);
            CHECK(hla::laplace_shift_residual(mixed, t, hla::HalfPlanePoint(s)) < 1e-3);
        }
    }
    CHECK_THROWS_AS(hla::laplace_shift_residual(atomic, 1.0, hla::HalfPlanePoint(Complex{1.0})),
                    hla::DomainError);
}

TEST_CASE("convolution multiplies transforms") {
    hla::Rng crng(31);
    const auto mu = hla::random_atomic(crng);
    const auto nu = hla::random_atomic(crng);
    for (Complex s : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 5.0}})
        CHECK(hla::laplace_product_residual(mu, nu, hla::HalfPlanePoint(s)) < 1e-13);

    const auto md = hla::random_mixed(crng, 0x1p-10, 2.0);
    const auto nd = hla::random_mixed(crng, 0x1p-10, 2.0);
    for (Complex s : {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 5.0}})
        CHECK(hla::laplace_product_residual(md, nd, hla::HalfPlanePoint(s)) < 1e-3);
}

TEST_CASE("real-axis limit recovers the weight at zero") {
    const auto mu = hla::HalfLineMeasure::from_atoms(
        {{0.0, Complex{0.7, -0.2}}, {0.4, 1.0}, {2.0, Complex{0.0, 0.5}}});
    std::vector<double> ray;
    for (double s = 10.0; s <= 10240.0; s *= 2.0) ray.push_back(s);
    const auto values = hla::rl_limit_probe(mu, ray);
    REQUIRE(values.size() == ray.size());
    double prev = 1e300;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double err = std::abs(values[k] - hla::atom_at_zero(mu));
        CHECK(err <= prev + 1e-15);  // monotone decay along the ray
        prev = err;
    }
    CHECK(prev < 1e-3);
}

TEST_SUITE_END();
