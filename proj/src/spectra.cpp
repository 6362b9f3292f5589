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

#include "hla/spectra.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

namespace hla {

HalfLineMeasure nonexample_measure(double h, double horizon) {
    if (!(h > 0.0) || !(horizon > 0.0))
        throw DomainError("nonexample_measure: h and horizon must be positive");
    const auto n = static_cast<std::size_t>(std::floor(horizon / h)) + 1;
    Density d = Density::zeros(h, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = h * static_cast<double>(k);
        d.re[k] = (2.0 * x - 3.0) * std::exp(-x);
    }
    return HalfLineMeasure::from_parts({{0.0, 1.0}}, std::move(d));
}

Complex nonexample_transform(Complex s) {
    return s * (s - 1.0) / ((s + 1.0) * (s + 1.0));
}

SpectrumRegion spectrum_curve(std::size_t samples) {
    if (samples < 3) throw DomainError("spectrum_curve: need at least 3 samples");
    SpectrumRegion region;
    region.curve.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples - 1);
        const Complex z = std::polar(1.0, theta);
        region.curve.push_back({theta, 0.5 * (z + z * z)});
    }
    return region;
}

bool region_membership(Complex w) {
    // Roots of z^2 + z - 2w: z = (-1 +- sqrt(1 + 8w)) / 2.
    const Complex r = std::sqrt(Complex{1.0, 0.0} + 8.0 * w);
    const double m1 = std::abs((-1.0 + r) / 2.0);
    const double m2 = std::abs((-1.0 - r) / 2.0);
    return std::min(m1, m2) <= 1.0 + 1e-12;
}

int complement_components(const std::function<bool(Complex)>& membership,
                          const RasterOptions& opts, const std::vector<Complex>& boundary) {
    const std::size_t res = opts.resolution;
    if (res < 64) throw DomainError("complement_components: resolution must be >= 64");
    const double span = opts.box_max - opts.box_min;
    const double px = span / static_cast<double>(res);

    // 1 = region, 0 = complement (later 2 = complement reached from border).
    std::vector<unsigned char> grid(res * res, 0);
    auto center = [&](std::size_t ix, std::size_t iy) {
        return Complex{opts.box_min + (static_cast<double>(ix) + 0.5) * px,
                       opts.box_min + (static_cast<double>(iy) + 0.5) * px};
    };
    for (std::size_t iy = 0; iy < res; ++iy)
        for (std::size_t ix = 0; ix < res; ++ix)
            if (membership(center(ix, iy))) grid[iy * res + ix] = 1;

    // Boundary pixels belong to the (closed) region.
    const double half_px = 0.5 * px * std::numbers::sqrt2;
    for (const Complex& w : boundary) {
        const auto bx = static_cast<long>(std::floor((w.real() - opts.box_min) / px));
        const auto by = static_cast<long>(std::floor((w.imag() - opts.box_min) / px));
        for (long dy = -1; dy <= 1; ++dy)
            for (long dx = -1; dx <= 1; ++dx) {
                const long ix = bx + dx, iy = by + dy;
                if (ix < 0 || iy < 0 || ix >= static_cast<long>(res) ||
                    iy >= static_cast<long>(res))
                    continue;
                if (std::abs(center(static_cast<std::size_t>(ix),
                                    static_cast<std::size_t>(iy)) -
                             w) <= half_px)
                    grid[static_cast<std::size_t>(iy) * res + static_cast<std::size_t>(ix)] = 1;
            }
    }

    // Flood fill the complement from the raster border; what is left of
    // the complement afterwards is bounded.
    auto flood = [&](std::size_t start, unsigned char mark) {
        std::queue<std::size_t> q;
        q.push(start);
        grid[start] = mark;
        while (!q.empty()) {
            const std::size_t p = q.front();
            q.pop();
            const std::size_t ix = p % res, iy = p / res;
            const std::size_t nb[4][2] = {{ix + 1, iy}, {ix - 1, iy}, {ix, iy + 1}, {ix, iy - 1}};
            for (const auto& c : nb) {
                if (c[0] >= res || c[1] >= res) continue;  // unsigned wrap covers < 0
                const std::size_t np = c[1] * res + c[0];
                if (grid[np] == 0) {
                    grid[np] = mark;
                    q.push(np);
                }
            }
        }
    };
    for (std::size_t i = 0; i < res; ++i) {
        const std::size_t border[4] = {i, (res - 1) * res + i, i * res, i * res + (res - 1)};
        for (std::size_t p : border)
            if (grid[p] == 0) flood(p, 2);
    }

    int bounded = 0;
    for (std::size_t p = 0; p < grid.size(); ++p)
        if (grid[p] == 0) {
            ++bounded;
            flood(p, 3);
        }
    return bounded;
}

PropertyPResult property_p_failure(const std::vector<Complex>& coeffs) {
    // At t = 1 - 1/e the shift is by exactly 1, and the closed form gives
    // hat(mu)(0) = hat(mu)(1) = 0, hat(mu)(2) = 2/9. Both residuals then
    // collapse to functions of c_0 alone.
    const Complex c0 = coeffs.empty() ? Complex{} : coeffs[0];
    PropertyPResult r{};
    r.residual0 = std::abs(c0);
    r.residual1 = std::abs(2.0 / 9.0 - c0);
    r.certificate = r.residual0 + r.residual1 >= 2.0 / 9.0 - 1e-12;
    return r;
}

Complex mobius_disc_to_halfplane(Complex z) {
    if (std::abs(z - 1.0) < 1e-300)
        return {std::numeric_limits<double>::infinity(), 0.0};
    return (1.0 + z) / (1.0 - z);
}

Complex mobius_halfplane_to_disc(Complex s) {
    if (std::isinf(s.real()) || std::isinf(s.imag())) return {1.0, 0.0};
    return (s - 1.0) / (s + 1.0);
}

}  // namespace hla
