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

#ifndef HLA_KERNELS_HPP
#define HLA_KERNELS_HPP

#include <cstddef>
#include <string>

namespace hla::kernels {

// Data-parallel inner loops on split complex arrays (re[] / im[]).
// A scalar reference implementation always exists; wider variants are
// selected at runtime from CPU capabilities and must agree with the
// reference to rounding accuracy (see tests/kernels_test.cpp).
struct Impl {
    const char* name;

    // out[k] += sum_{j} a[j] * b[k-j], complex; out has length na + nb - 1
    // and must be zero-initialized by the caller (or hold a partial sum).
    void (*conv_accum)(const double* ar, const double* ai, std::size_t na,
                       const double* br, const double* bi, std::size_t nb,
                       double* outr, double* outi);

    // sum_k |re[k] + i im[k]|
    double (*sum_abs)(const double* re, const double* im, std::size_t n);

    // sum_k a[k] * b[k] (complex product, no conjugation)
    void (*cdot)(const double* ar, const double* ai,
                 const double* br, const double* bi, std::size_t n,
                 double* outr, double* outi);

    // y[k] += w * x[k] (complex scalar w = wr + i wi)
    void (*caxpy)(double wr, double wi,
                  const double* xr, const double* xi, std::size_t n,
                  double* yr, double* yi);
};

const Impl& scalar();
const Impl* avx2();  // nullptr when unsupported at runtime

// Active implementation: best available unless overridden by set_active()
// or the HLA_SIMD environment variable ("scalar" / "avx2").
const Impl& active();
bool set_active(const std::string& name);

}  // namespace hla::kernels

#endif
