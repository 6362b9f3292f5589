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

#ifndef HLA_LAPLACE_HPP
#define HLA_LAPLACE_HPP

#include <vector>

#include "hla/measure.hpp"

namespace hla {

// A point of the closed right half-plane, checked at construction.
struct HalfPlanePoint {
    Complex s;
    explicit HalfPlanePoint(Complex value) : s(value) {
        if (s.real() < 0.0)
            throw DomainError("HalfPlanePoint: Re(s) must be nonnegative");
    }
};

// Transform value: sum of atom terms c * e^{-loc*s} plus the density
// integral. The density integrand is integrated exactly against the
// piecewise-linear interpolant of the samples (exponentially weighted
// trapezoid), which stays accurate for large real s.
Complex laplace_eval(const HalfLineMeasure& mu, const HalfPlanePoint& s);
inline Complex laplace_eval(const HalfLineMeasure& mu, Complex s) {
    return laplace_eval(mu, HalfPlanePoint(s));
}

// | (mu_t)^(s) - mu^(s - log(1-t)) |; t = 1 is rejected (shift undefined).
double laplace_shift_residual(const HalfLineMeasure& mu, double t, const HalfPlanePoint& s);

// | (mu * nu)^(s) - mu^(s) nu^(s) |
double laplace_product_residual(const HalfLineMeasure& mu, const HalfLineMeasure& nu,
                                const HalfPlanePoint& s);

// Transform values along an ascending positive real ray; the caller checks
// convergence to atom_at_zero(mu).
std::vector<Complex> rl_limit_probe(const HalfLineMeasure& mu,
                                    const std::vector<double>& s_values);

}  // namespace hla

#endif
