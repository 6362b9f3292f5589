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

#include "hla/laplace.hpp"

#include <cmath>

#include "hla/kernels.hpp"

namespace hla {
namespace {

// Cell weights for the exact integral of e^{-q v} against a linear hat on
// [0,1]:  alpha(q) = int (1-v) e^{-qv} dv,  beta(q) = int v e^{-qv} dv.
// Closed forms divide by q^2, so small |q| switches to the series.
void cell_weights(Complex q, Complex* alpha, Complex* beta) {
    if (std::abs(q) < 1e-3) {
        // alpha = sum (-q)^m/(m+2)!,  beta = sum (m+1)(-q)^m/(m+2)!
        Complex a = 0.0, b = 0.0, pw = 1.0;
        constexpr double fact[] = {2, 6, 24, 120, 720, 5040};
        for (int m = 0; m < 6; ++m) {
            a += pw / fact[m];
            b += (m + 1.0) * pw / fact[m];
            pw *= -q;
        }
        *alpha = a;
        *beta = b;
        return;
    }
    const Complex eq = std::exp(-q);
    const Complex q2 = q * q;
    *alpha = (q - 1.0 + eq) / q2;
    *beta = (1.0 - (1.0 + q) * eq) / q2;
}

Complex density_transform(const Density& d, Complex s) {
    const std::size_t n = d.size();
    if (n < 2) return {};
    const Complex q = s * d.h;
    Complex alpha, beta;
    cell_weights(q, &alpha, &beta);

    // w_k = e^{-s k h}, recurrence with periodic renormalization.
    std::vector<double> wr(n), wi(n);
    const Complex r = std::exp(-q);
    Complex w = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k % 128 == 0) w = std::exp(-q * static_cast<double>(k));
        wr[k] = w.real();
        wi[k] = w.imag();
        w *= r;
    }

    // sum over cells: h * sum_k w_k (alpha f_k + beta f_{k+1})
    double d0r, d0i, d1r, d1i;
    kernels::active().cdot(wr.data(), wi.data(), d.re.data(), d.im.data(), n - 1, &d0r, &d0i);
    kernels::active().cdot(wr.data(), wi.data(), d.re.data() + 1, d.im.data() + 1, n - 1,
                           &d1r, &d1i);
    return d.h * (alpha * Complex{d0r, d0i} + beta * Complex{d1r, d1i});
}

}  // namespace

Complex laplace_eval(const HalfLineMeasure& mu, const HalfPlanePoint& sp) {
    const Complex s = sp.s;
    Complex out = 0.0;
    for (const Atom& a : mu.atoms()) out += a.weight * std::exp(-a.loc * s);
    if (const auto& d = mu.density()) out += density_transform(*d, s);
    return out;
}

double laplace_shift_residual(const HalfLineMeasure& mu, double t, const HalfPlanePoint& sp) {
    if (t < 0.0 || t >= 1.0)
        throw DomainError("laplace_shift_residual: t must lie in [0,1)");
    const Complex shifted = sp.s - std::log1p(-t);
    return std::abs(laplace_eval(deform(mu, t), sp) -
                    laplace_eval(mu, HalfPlanePoint(shifted)));
}

double laplace_product_residual(const HalfLineMeasure& mu, const HalfLineMeasure& nu,
                                const HalfPlanePoint& sp) {
    return std::abs(laplace_eval(convolve(mu, nu), sp) -
                    laplace_eval(mu, sp) * laplace_eval(nu, sp));
}

std::vector<Complex> rl_limit_probe(const HalfLineMeasure& mu,
                                    const std::vector<double>& s_values) {
    double prev = 0.0;
    for (std::size_t i = 0; i < s_values.size(); ++i) {
        if (!(s_values[i] > 0.0) || (i > 0 && s_values[i] <= prev))
            throw DomainError("rl_limit_probe: s values must be positive and ascending");
        prev = s_values[i];
    }
    std::vector<Complex> out;
    out.reserve(s_values.size());
    for (double s : s_values) out.push_back(laplace_eval(mu, HalfPlanePoint(s)));
    return out;
}

}  // namespace hla
