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

// AVX2/FMA variants. Split complex layout keeps the lanes independent:
// every loop below is a plain 4-wide double loop with an FMA body.

#include "hla/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace hla::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

void caxpy_avx2(double wr, double wi,
                const double* xr, const double* xi, std::size_t n,
                double* yr, double* yi) {
    const __m256d vwr = _mm256_set1_pd(wr);
    const __m256d vwi = _mm256_set1_pd(wi);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vxr = _mm256_loadu_pd(xr + k);
        const __m256d vxi = _mm256_loadu_pd(xi + k);
        __m256d vyr = _mm256_loadu_pd(yr + k);
        __m256d vyi = _mm256_loadu_pd(yi + k);
        vyr = _mm256_fmadd_pd(vwr, vxr, _mm256_fnmadd_pd(vwi, vxi, vyr));
        vyi = _mm256_fmadd_pd(vwr, vxi, _mm256_fmadd_pd(vwi, vxr, vyi));
        _mm256_storeu_pd(yr + k, vyr);
        _mm256_storeu_pd(yi + k, vyi);
    }
    for (; k < n; ++k) {
        yr[k] += wr * xr[k] - wi * xi[k];
        yi[k] += wr * xi[k] + wi * xr[k];
    }
}

void conv_accum_avx2(const double* ar, const double* ai, std::size_t na,
                     const double* br, const double* bi, std::size_t nb,
                     double* outr, double* outi) {
    for (std::size_t j = 0; j < na; ++j) {
        if (ar[j] == 0.0 && ai[j] == 0.0) continue;
        caxpy_avx2(ar[j], ai[j], br, bi, nb, outr + j, outi + j);
    }
}

double sum_abs_avx2(const double* re, const double* im, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d vr = _mm256_loadu_pd(re + k);
        const __m256d vi = _mm256_loadu_pd(im + k);
        const __m256d m = _mm256_fmadd_pd(vr, vr, _mm256_mul_pd(vi, vi));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(m));
    }
    double s = hsum(acc);
    for (; k < n; ++k) s += std::sqrt(re[k] * re[k] + im[k] * im[k]);
    return s;
}

void cdot_avx2(const double* ar, const double* ai,
               const double* br, const double* bi, std::size_t n,
               double* outr, double* outi) {
    __m256d accr = _mm256_setzero_pd();
    __m256d acci = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d var = _mm256_loadu_pd(ar + k);
        const __m256d vai = _mm256_loadu_pd(ai + k);
        const __m256d vbr = _mm256_loadu_pd(br + k);
        const __m256d vbi = _mm256_loadu_pd(bi + k);
        accr = _mm256_fmadd_pd(var, vbr, _mm256_fnmadd_pd(vai, vbi, accr));
        acci = _mm256_fmadd_pd(var, vbi, _mm256_fmadd_pd(vai, vbr, acci));
    }
    double sr = hsum(accr), si = hsum(acci);
    for (; k < n; ++k) {
        sr += ar[k] * br[k] - ai[k] * bi[k];
        si += ar[k] * bi[k] + ai[k] * br[k];
    }
    *outr = sr;
    *outi = si;
}

}  // namespace

const Impl* avx2() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma"))
        return nullptr;
    static const Impl impl{"avx2", conv_accum_avx2, sum_abs_avx2,
                           cdot_avx2, caxpy_avx2};
    return &impl;
}

}  // namespace hla::kernels

#endif  // x86_64
