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
#include <random>
#include <string>
#include <vector>

#include "hla/kernels.hpp"

namespace {

using hla::kernels::Impl;

struct Arrays {
    std::vector<double> re, im;
};

Arrays random_arrays(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Arrays a;
    a.re.resize(n);
    a.im.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        a.re[k] = u(rng);
        a.im[k] = u(rng);
    }
    return a;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// FMA contraction reorders roundings, so wide variants agree with the
// scalar reference to a small multiple of machine epsilon per term, not
// bit for bit.
constexpr double kEquivTol = 1e-12;

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("scalar reference is always available") {
    const Impl& s = hla::kernels::scalar();
    CHECK(std::string(s.name) == "scalar");
    CHECK(s.conv_accum != nullptr);
    CHECK(s.sum_abs != nullptr);
    CHECK(s.cdot != nullptr);
    CHECK(s.caxpy != nullptr);
}

TEST_CASE("set_active switches and rejects unknown names") {
    const std::string before = hla::kernels::active().name;
    CHECK(hla::kernels::set_active("scalar"));
    CHECK(std::string(hla::kernels::active().name) == "scalar");
    CHECK_FALSE(hla::kernels::set_active("no-such-impl"));
    CHECK(std::string(hla::kernels::active().name) == "scalar");
    CHECK(hla::kernels::set_active(before));
}

TEST_CASE("wide variants match the scalar reference") {
    const Impl* wide = hla::kernels::avx2();
    if (wide == nullptr) return;  // not supported on this host

    std::mt19937_64 rng(20260824);
    for (std::size_t na : {1u, 3u, 8u, 17u, 256u, 1000u}) {
        for (std::size_t nb : {1u, 5u, 64u, 333u}) {
            const Arrays a = random_arrays(rng, na);
            const Arrays b = random_arrays(rng, nb);
            const std::size_t nout = na + nb - 1;

            std::vector<double> sr(nout, 0.0), si(nout, 0.0);
            std::vector<double> wr(nout, 0.0), wi(nout, 0.0);
            hla::kernels::scalar().conv_accum(a.re.data(), a.im.data(), na, b.re.data(),
                                              b.im.data(), nb, sr.data(), si.data());
            wide->conv_accum(a.re.data(), a.im.data(), na, b.re.data(), b.im.data(), nb,
                             wr.data(), wi.data());
            CHECK(max_abs_diff(sr, wr) < kEquivTol * static_cast<double>(na));
            CHECK(max_abs_diff(si, wi) < kEquivTol * static_cast<double>(na));

            const double s_abs = hla::kernels::scalar().sum_abs(a.re.data(), a.im.data(), na);
            const double w_abs = wide->sum_abs(a.re.data(), a.im.data(), na);
            CHECK(std::abs(s_abs - w_abs) < kEquivTol * static_cast<double>(na));
        }
    }

    for (std::size_t n : {1u, 2u, 7u, 100u, 1023u}) {
        const Arrays x = random_arrays(rng, n);
        const Arrays y = random_arrays(rng, n);

        double sr = 0.0, si = 0.0, wr = 0.0, wi = 0.0;
        hla::kernels::scalar().cdot(x.re.data(), x.im.data(), y.re.data(), y.im.data(), n, &sr,
                                    &si);
        wide->cdot(x.re.data(), x.im.data(), y.re.data(), y.im.data(), n, &wr, &wi);
        CHECK(std::abs(sr - wr) < kEquivTol * static_cast<double>(n));
        CHECK(std::abs(si - wi) < kEquivTol * static_cast<double>(n));

        std::vector<double> ys_re = y.re, ys_im = y.im, yw_re = y.re, yw_im = y.im;
        hla::kernels::scalar().caxpy(0.37, -0.91, x.re.data(), x.im.data(), n, ys_re.data(),
                                     ys_im.data());
        wide->caxpy(0.37, -0.91, x.re.data(), x.im.data(), n, yw_re.data(), yw_im.data());
        CHECK(max_abs_diff(ys_re, yw_re) < kEquivTol);
        CHECK(max_abs_diff(ys_im, yw_im) < kEquivTol);
    }
}

TEST_CASE("conv_accum accumulates into a partial sum") {
    std::vector<double> ar{1.0, 2.0}, ai{0.0, 0.0};
    std::vector<double> br{3.0}, bi{0.0};
    std::vector<double> outr{10.0, 20.0}, outi{0.0, 0.0};
    hla::kernels::scalar().conv_accum(ar.data(), ai.data(), 2, br.data(), bi.data(), 1,
                                      outr.data(), outi.data());
    CHECK(outr[0] == doctest::Approx(13.0));
    CHECK(outr[1] == doctest::Approx(26.0));
}

TEST_SUITE_END();
