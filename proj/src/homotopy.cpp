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

#include "hla/homotopy.hpp"

#include <cmath>

namespace hla {
namespace {

ComplexMatrix eval_shear_shrink(const std::vector<ElementaryFactor>& factors, std::size_t n,
                                double s) {
    std::vector<ElementaryFactor> scaled;
    scaled.reserve(factors.size());
    for (const auto& f : factors)
        scaled.push_back({f.i, f.j, (1.0 - s) * std::get<Complex>(f.param)});
    return product_complex(scaled, n);
}

void finalize_stats(HomotopyPath& path) {
    path.max_det_residual = 0.0;
    path.lipschitz = 0.0;
    for (std::size_t k = 0; k < path.samples.size(); ++k) {
        path.max_det_residual = std::max(path.max_det_residual, path.samples[k].det_residual);
        if (k + 1 < path.samples.size()) {
            const double dt = path.samples[k + 1].t - path.samples[k].t;
            const double step =
                frobenius_bound(mat_sub(path.samples[k + 1].matrix, path.samples[k].matrix));
            if (dt > 0.0) path.lipschitz = std::max(path.lipschitz, step / dt);
        }
    }
}

}  // namespace

ComplexMatrix constant_part(const MeasureMatrix& m) {
    ComplexMatrix c(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) c.at(i, j) = atom_at_zero(m.at(i, j));
    return c;
}

std::vector<std::pair<double, ComplexMatrix>> sl_path_complex(const ComplexMatrix& c,
                                                              std::size_t samples) {
    if (samples < 2) throw DomainError("sl_path_complex: need at least 2 samples");
    const auto factors = factor_complex(c);
    std::vector<std::pair<double, ComplexMatrix>> path;
    path.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(samples - 1);
        path.emplace_back(s, eval_shear_shrink(factors, c.n, s));
    }
    return path;
}

MeasureMatrix embed_constant(const ComplexMatrix& c) {
    MeasureMatrix m(c.n);
    for (std::size_t i = 0; i < c.n; ++i)
        for (std::size_t j = 0; j < c.n; ++j)
            if (c.at(i, j) != Complex{})
                m.at(i, j) = scale(c.at(i, j), dirac());
    return m;
}

HomotopyPath null_homotopy(const MeasureMatrix& m, std::size_t samples, double det_tol,
                           const ConvolveOptions& opts) {
    if (samples < 3) throw DomainError("null_homotopy: need at least 3 samples");
    const double dres = det_residual(m, opts);
    if (dres > det_tol)
        throw DomainError("null_homotopy: ||det - dirac|| = " + std::to_string(dres) +
                          " exceeds tolerance");

    const ComplexMatrix c = constant_part(m);
    const auto factors = factor_complex(c);

    HomotopyPath path;
    path.start_desc = "input matrix M";
    path.end_desc = "identity";
    path.samples.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
        MeasureMatrix h;
        if (t <= 0.5)
            h = deform_matrix(m, 2.0 * t);
        else
            h = embed_constant(eval_shear_shrink(factors, m.n, 2.0 * t - 1.0));
        const double r = det_residual(h, opts);
        path.samples.push_back({t, std::move(h), r});
    }
    finalize_stats(path);
    return path;
}

HomotopyPath approx_path(const MeasureMatrix& f, const MeasureMatrix& g, std::size_t samples,
                         const NeumannOptions& opts) {
    if (f.n != g.n) throw DomainError("approx_path: dimension mismatch");
    if (samples < 2) throw DomainError("approx_path: need at least 2 samples");
    const ConvolveOptions conv{opts.horizon};

    const MeasureMatrix finv = invert_matrix(f, opts);
    const double bound = frobenius_bound(mat_sub(g, f)) * frobenius_bound(finv);
    if (bound >= 1.0)
        throw DomainError("approx_path: certified bound ||g-f||*||f^-1|| = " +
                          std::to_string(bound) + " is not < 1");

    // H(t) = (I + t (g-f) f^{-1})^{-1} g, first column rescaled by the
    // inverse of its determinant; H(1) = f, H(0) = column-scaled g.
    const MeasureMatrix b = mat_mul(mat_sub(g, f), finv, conv);

    HomotopyPath path;
    path.start_desc = "g with first column scaled by det(g)^{-1}";
    path.end_desc = "f";
    path.samples.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
        const MeasureMatrix x = mat_add(MeasureMatrix::identity(f.n), mat_scale(t, b));
        const MeasureMatrix xinv = invert_near_identity(x, opts);
        MeasureMatrix h = mat_mul(xinv, g, conv);
        const HalfLineMeasure delta_inv = invert_measure(det(h, conv), opts);
        for (std::size_t i = 0; i < h.n; ++i)
            h.at(i, 0) = convolve(h.at(i, 0), delta_inv, conv);
        const double r = det_residual(h, conv);
        path.samples.push_back({t, std::move(h), r});
    }
    finalize_stats(path);
    return path;
}

}  // namespace hla
