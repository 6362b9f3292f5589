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
#include "hla/homotopy.hpp"

namespace {

using hla::Complex;
using hla::ComplexMatrix;
using hla::MeasureMatrix;

double entry_dist(const MeasureMatrix& a, const MeasureMatrix& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        m = std::max(m, hla::tv_norm(hla::sub(a.entries[k], b.entries[k])));
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("homotopy");

TEST_CASE("constant part extracts the weights at zero") {
    MeasureMatrix m(2);
    m.at(0, 0) = hla::add(hla::scale(Complex{2.0, -1.0}, hla::dirac()), hla::dirac_at(1.0));
    m.at(0, 1) = hla::dirac_at(0.5);  // no mass at zero
    m.at(1, 0) = hla::HalfLineMeasure::zero();
    m.at(1, 1) = hla::dirac();
    const ComplexMatrix c = hla::constant_part(m);
    CHECK(c.at(0, 0) == Complex{2.0, -1.0});
    CHECK(c.at(0, 1) == Complex{0.0});
    CHECK(c.at(1, 0) == Complex{0.0});
    CHECK(c.at(1, 1) == Complex{1.0});
}

TEST_CASE("complex path runs from the matrix to the identity inside SL_n") {
    ComplexMatrix rot(2);  // [[0, 1], [-1, 0]]
    rot.at(0, 1) = 1.0;
    rot.at(1, 0) = -1.0;
    const auto path = hla::sl_path_complex(rot, 9);
    REQUIRE(path.size() == 9);
    CHECK(path.front().first == 0.0);
    CHECK(path.back().first == 1.0);
    CHECK(path.front().second.max_entry_dist(rot) < 1e-12);
    CHECK(path.back().second.max_entry_dist(ComplexMatrix::identity(2)) < 1e-12);
    for (const auto& [t, m] : path)
        CHECK(std::abs(hla::det_complex(m) - 1.0) < 1e-12);
}

TEST_CASE("embedding constants produces atomic dirac multiples") {
    ComplexMatrix c(2);
    c.at(0, 0) = Complex{1.0, 2.0};
    c.at(1, 1) = 1.0;
    const MeasureMatrix m = hla::embed_constant(c);
    CHECK(m.at(0, 0).is_atomic());
    CHECK(hla::atom_at_zero(m.at(0, 0)) == Complex{1.0, 2.0});
    CHECK(m.at(0, 1).is_zero());
}

TEST_CASE("null homotopy: exact endpoints, small determinant residual") {
    hla::Rng crng(71);
    const auto m = hla::random_shear_matrix(crng, 2, 3, /*atomic=*/true);
    const auto path = hla::null_homotopy(m, 17, 1e-6);
    REQUIRE(path.samples.size() == 17);
    CHECK(path.samples.front().t == 0.0);
    CHECK(path.samples.back().t == 1.0);
    CHECK(entry_dist(path.samples.front().matrix, m) == 0.0);
    CHECK(entry_dist(path.samples.back().matrix, MeasureMatrix::identity(2)) == 0.0);
    CHECK(path.max_det_residual < 1e-6);
    for (const auto& s : path.samples) CHECK(s.det_residual <= path.max_det_residual);
    CHECK(path.lipschitz > 0.0);
    CHECK(std::isfinite(path.lipschitz));
}

TEST_CASE("null homotopy midpoint lands on the embedded constant part") {
    hla::Rng crng(73);
    const auto m = hla::random_shear_matrix(crng, 2, 2, /*atomic=*/true);
    const auto path = hla::null_homotopy(m, 17, 1e-6);
    // Sample 8 of 17 is t = 1/2, the splice point of the two stages.
    const auto& mid = path.samples[8];
    CHECK(mid.t == 0.5);
    CHECK(entry_dist(mid.matrix, hla::embed_constant(hla::constant_part(m))) < 1e-12);
}

TEST_CASE("approximation path joins a truncation to its source") {
    const auto [f, g] = hla::desk_instance(8.0);
    const auto path = hla::approx_path(f, g, 9);
    REQUIRE(path.samples.size() == 9);
    // t = 1 reproduces f exactly by construction of the segment.
    CHECK(entry_dist(path.samples.back().matrix, f) < 1e-12);
    CHECK(path.max_det_residual < 1e-6);
    CHECK_FALSE(path.start_desc.empty());
    CHECK_FALSE(path.end_desc.empty());
}

TEST_SUITE_END();
