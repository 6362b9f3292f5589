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

#include <cstdio>

#include "hla/corpus.hpp"
#include "hla/json_io.hpp"

namespace {

using hla::Complex;

double measure_dist(const hla::HalfLineMeasure& a, const hla::HalfLineMeasure& b) {
    return hla::tv_norm(hla::sub(a, b));
}

}  // namespace

TEST_SUITE_BEGIN("json");

TEST_CASE("measures survive a serialization round trip") {
    hla::Rng crng(79);
    for (int k = 0; k < 10; ++k) {
        const auto mu = k % 2 == 0 ? hla::random_atomic(crng)
                                   : hla::random_mixed(crng, 0x1p-6, 2.0);
        const auto text = hla::measure_to_json(mu).dump();
        const auto back = hla::measure_from_json(nlohmann::json::parse(text));
        CHECK(measure_dist(mu, back) < 1e-12);
    }
    // The zero measure keeps its shape: no atoms, no density.
    const auto z = hla::measure_from_json(
        hla::measure_to_json(hla::HalfLineMeasure::zero()));
    CHECK(z.is_zero());
}

TEST_CASE("measure matrices survive a round trip") {
    hla::Rng crng(83);
    const auto m = hla::random_shear_matrix(crng, 3, 3, /*atomic=*/true);
    const auto back = hla::matrix_from_json(hla::matrix_to_json(m));
    REQUIRE(back.n == 3);
    for (std::size_t k = 0; k < 9; ++k)
        CHECK(measure_dist(m.entries[k], back.entries[k]) < 1e-12);
}

TEST_CASE("complex and polynomial matrices survive a round trip") {
    hla::Rng crng(89);
    const auto c = hla::random_complex_sl(crng, 3);
    const auto cb = hla::complex_matrix_from_json(hla::complex_matrix_to_json(c));
    CHECK(cb.max_entry_dist(c) < 1e-15);

    const auto [p, built] = hla::random_poly_sl2(crng);
    const auto pb = hla::poly_matrix_from_json(hla::poly_matrix_to_json(p));
    CHECK(pb.max_coeff_dist(p) < 1e-15);
}

TEST_CASE("factor lists are emitted with one-based indices") {
    const std::vector<hla::ElementaryFactor> fs = {
        {0, 1, Complex{2.0, -1.0}},
        {1, 0, hla::Polynomial1{1.0, 1.0}},
        {0, 1, hla::dirac_at(0.5)},
    };
    const auto j = hla::factors_to_json(fs);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["i"] == 1);
    CHECK(j[0]["j"] == 2);
    CHECK(j[0]["kind"] == "complex");
    CHECK(j[1]["i"] == 2);
    CHECK(j[1]["kind"] == "poly");
    CHECK(j[2]["kind"] == "measure");
}

TEST_CASE("path serialization carries residuals and optional matrices") {
    hla::Rng crng(97);
    const auto m = hla::random_shear_matrix(crng, 2, 2, /*atomic=*/true);
    const auto path = hla::null_homotopy(m, 9, 1e-6);
    const auto lean = hla::path_to_json(path, /*full=*/false);
    const auto full = hla::path_to_json(path, /*full=*/true);
    REQUIRE(lean["samples"].size() == 9);
    CHECK_FALSE(lean["samples"][0].contains("matrix"));
    CHECK(full["samples"][0].contains("matrix"));
    CHECK(lean["max_det_residual"].get<double>() == path.max_det_residual);
    CHECK(lean["samples"][0]["t"].get<double>() == 0.0);
}

TEST_CASE("text files write and read back") {
    const std::string path = "json_io_roundtrip.tmp";
    hla::write_text_file(path, "{\"k\": 1}\n");
    CHECK(hla::read_text_file(path) == "{\"k\": 1}\n");
    std::remove(path.c_str());
    CHECK_THROWS(hla::read_text_file("no/such/file.json"));
}

TEST_SUITE_END();
