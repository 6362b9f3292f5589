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

#include "hla/kernels.hpp"

#include <cmath>

namespace hla::kernels {
namespace {

void conv_accum_scalar(const double* ar, const double* ai, std::size_t na,
                       const double* br, const double* bi, std::size_t nb,
                       double* outr, double* outi) {
    for (std::size_t j = 0; j < na; ++j) {
        const double wr = ar[j], wi = ai[j];
        if (wr == 0.0 && wi == 0.0) continue;
        for (std::size_t k = 0; k < nb; ++k) {
            outr[j + k] += wr * br[k] - wi * bi[k];
            outi[j + k] += wr * bi[k] + wi * br[k];
        }
    }
}

double sum_abs_scalar(const double* re, const double* im, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += std::sqrt(re[k] * re[k] + im[k] * im[k]);
    return s;
}

void cdot_scalar(const double* ar, const double* ai,
                 const double* br, const double* bi, std::size_t n,
                 double* outr, double* outi) {
    double sr = 0.0, si = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sr += ar[k] * br[k] - ai[k] * bi[k];
        si += ar[k] * bi[k] + ai[k] * br[k];
    }
    *outr = sr;
    *outi = si;
}

void caxpy_scalar(double wr, double wi,
                  const double* xr, const double* xi, std::size_t n,
                  double* yr, double* yi) {
    for (std::size_t k = 0; k < n; ++k) {
        yr[k] += wr * xr[k] - wi * xi[k];
        yi[k] += wr * xi[k] + wi * xr[k];
    }
}

}  // namespace

const Impl& scalar() {
    static const Impl impl{"scalar", conv_accum_scalar, sum_abs_scalar,
                           cdot_scalar, caxpy_scalar};
    return impl;
}

}  // namespace hla::kernels
