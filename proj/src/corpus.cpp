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

#include "hla/corpus.hpp"

#include <cmath>

namespace hla {
namespace {

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

HalfLineMeasure random_shear_param(Rng& rng, bool atomic, double h) {
    HalfLineMeasure p = atomic ? random_atomic(rng, 3, 2.0) : random_mixed(rng, h, 2.0);
    const double norm = tv_norm(p);
    if (norm > 0.0) p = scale(uniform(rng, 0.1, 0.5) / norm, p);
    return p;
}

}  // namespace

Complex random_unit_complex(Rng& rng) {
    // Rejection sample the unit disc; keeps the distribution uniform.
    for (;;) {
        const double x = uniform(rng, -1.0, 1.0);
        const double y = uniform(rng, -1.0, 1.0);
        if (x * x + y * y <= 1.0) return {x, y};
    }
}

HalfLineMeasure random_atomic(Rng& rng, std::size_t max_atoms, double max_loc) {
    const std::size_t count = uniform_index(rng, 1, max_atoms);
    std::vector<Atom> atoms;
    atoms.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        atoms.push_back({uniform(rng, 0.0, max_loc), random_unit_complex(rng)});
    return HalfLineMeasure::from_atoms(std::move(atoms));
}

HalfLineMeasure random_density_measure(Rng& rng, double h, double support) {
    const Complex a = random_unit_complex(rng);
    const Complex b = random_unit_complex(rng);
    const double c = uniform(rng, 3.0, 5.0);
    const auto n = static_cast<std::size_t>(std::floor(support / h)) + 1;
    Density d = Density::zeros(h, n);
    // x (a + b x) e^{-cx}: vanishes at 0 and is negligible at the
    // truncation edge, so the sampled support carries no jumps (a jump
    // shifted off-grid costs O(h |jump|) in any grid representation).
    for (std::size_t k = 0; k < n; ++k) {
        const double x = h * static_cast<double>(k);
        d.set(k, x * (a + b * x) * std::exp(-c * x));
    }
    return HalfLineMeasure::from_density(std::move(d));
}

HalfLineMeasure random_mixed(Rng& rng, double h, double support) {
    return add(random_atomic(rng, 3, support), random_density_measure(rng, h, support));
}

MeasureMatrix random_shear_matrix(Rng& rng, std::size_t n, std::size_t max_shears,
                                  bool atomic, double h) {
    MeasureMatrix acc = MeasureMatrix::identity(n);
    const std::size_t count = uniform_index(rng, 1, max_shears);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t i = uniform_index(rng, 0, n - 1);
        std::size_t j = uniform_index(rng, 0, n - 2);
        if (j >= i) ++j;
        acc = mat_mul(acc, MeasureMatrix::shear(n, i, j, random_shear_param(rng, atomic, h)),
                      ConvolveOptions{kDefaultHorizon});
    }
    return acc;
}

MeasureVector random_vector(Rng& rng, std::size_t n, bool atomic, double h) {
    MeasureVector v;
    v.entries.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        v.entries.push_back(atomic ? random_atomic(rng) : random_mixed(rng, h));
    return v;
}

ComplexMatrix random_complex_sl(Rng& rng, std::size_t n) {
    for (;;) {
        ComplexMatrix m(n);
        for (auto& e : m.a) e = random_unit_complex(rng);
        const Complex d = det_complex(m);
        if (std::abs(d) < 0.2) continue;  // resample ill-conditioned draws
        // Scale the first row by 1/d to land on det == 1.
        const Complex s = 1.0 / d;
        for (std::size_t j = 0; j < n; ++j) m.at(0, j) *= s;
        return m;
    }
}

std::pair<PolyMatrix, std::vector<ElementaryFactor>> random_poly_sl2(Rng& rng,
                                                                     std::size_t max_factors,
                                                                     std::size_t max_deg) {
    const std::size_t count = uniform_index(rng, 1, max_factors);
    std::vector<ElementaryFactor> fs;
    fs.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t i = uniform_index(rng, 0, 1);
        const std::size_t deg = uniform_index(rng, 0, max_deg);
        std::vector<Complex> coeffs(deg + 1);
        for (auto& c : coeffs) c = random_unit_complex(rng);
        fs.push_back({i, 1 - i, Polynomial1(std::move(coeffs))});
    }
    return {product_poly(fs, 2), std::move(fs)};
}

std::pair<MeasureMatrix, MeasureMatrix> desk_instance(double cutoff) {
    constexpr std::size_t kTerms = 60;
    std::vector<Atom> rho_atoms, sigma_atoms;
    for (std::size_t k = 1; k <= kTerms; ++k) {
        const double w = std::ldexp(1.0, -static_cast<int>(k));  // 2^-k
        rho_atoms.push_back({0.5 * static_cast<double>(k), w});
        sigma_atoms.push_back({0.7 * static_cast<double>(k), w});
    }
    const auto rho = HalfLineMeasure::from_atoms(std::move(rho_atoms));
    const auto sigma = HalfLineMeasure::from_atoms(std::move(sigma_atoms));

    const MeasureMatrix f =
        mat_mul(MeasureMatrix::shear(2, 0, 1, rho), MeasureMatrix::shear(2, 1, 0, sigma));

    MeasureMatrix g(2);
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<Atom> kept;
        for (const Atom& a : f.entries[k].atoms())
            if (a.loc <= cutoff) kept.push_back(a);
        g.entries[k] = HalfLineMeasure::from_atoms(std::move(kept));
    }
    return {f, g};
}

}  // namespace hla
