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

#include "hla/matrix.hpp"

#include <cmath>

namespace hla {

MeasureMatrix MeasureMatrix::identity(std::size_t n) {
    MeasureMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = dirac();
    return m;
}

MeasureMatrix MeasureMatrix::shear(std::size_t n, std::size_t i, std::size_t j,
                                   const HalfLineMeasure& param) {
    if (i == j || i >= n || j >= n) throw DomainError("shear: need i != j within 0..n-1");
    MeasureMatrix m = identity(n);
    m.at(i, j) = param;
    return m;
}

MeasureMatrix mat_mul(const MeasureMatrix& a, const MeasureMatrix& b,
                      const ConvolveOptions& opts) {
    if (a.n != b.n) throw DomainError("mat_mul: dimension mismatch");
    MeasureMatrix out(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            HalfLineMeasure s;
            for (std::size_t k = 0; k < a.n; ++k)
                s = add(s, convolve(a.at(i, k), b.at(k, j), opts));
            out.at(i, j) = std::move(s);
        }
    return out;
}

MeasureVector mat_apply(const MeasureMatrix& m, const MeasureVector& v,
                        const ConvolveOptions& opts) {
    if (m.n != v.size()) throw DomainError("mat_apply: dimension mismatch");
    MeasureVector out;
    out.entries.resize(m.n);
    for (std::size_t i = 0; i < m.n; ++i) {
        HalfLineMeasure s;
        for (std::size_t k = 0; k < m.n; ++k)
            s = add(s, convolve(m.at(i, k), v.entries[k], opts));
        out.entries[i] = std::move(s);
    }
    return out;
}

MeasureMatrix mat_add(const MeasureMatrix& a, const MeasureMatrix& b) {
    if (a.n != b.n) throw DomainError("mat_add: dimension mismatch");
    MeasureMatrix out(a.n);
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        out.entries[k] = add(a.entries[k], b.entries[k]);
    return out;
}

MeasureMatrix mat_sub(const MeasureMatrix& a, const MeasureMatrix& b) {
    return mat_add(a, mat_scale(-1.0, b));
}

MeasureMatrix mat_scale(Complex c, const MeasureMatrix& m) {
    MeasureMatrix out(m.n);
    for (std::size_t k = 0; k < m.entries.size(); ++k) out.entries[k] = scale(c, m.entries[k]);
    return out;
}

namespace {

MeasureMatrix minor_of(const MeasureMatrix& m, std::size_t row, std::size_t col) {
    MeasureMatrix out(m.n - 1);
    std::size_t r = 0;
    for (std::size_t i = 0; i < m.n; ++i) {
        if (i == row) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < m.n; ++j) {
            if (j == col) continue;
            out.at(r, c) = m.at(i, j);
            ++c;
        }
        ++r;
    }
    return out;
}

}  // namespace

HalfLineMeasure det(const MeasureMatrix& m, const ConvolveOptions& opts) {
    if (m.n == 0) return dirac();
    if (m.n == 1) return m.at(0, 0);
    if (m.n == 2)
        return sub(convolve(m.at(0, 0), m.at(1, 1), opts),
                   convolve(m.at(0, 1), m.at(1, 0), opts));
    HalfLineMeasure s;
    for (std::size_t j = 0; j < m.n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        HalfLineMeasure term = convolve(m.at(0, j), det(minor_of(m, 0, j), opts), opts);
        if (j % 2 == 1) term = scale(-1.0, term);
        s = add(s, term);
    }
    return s;
}

double det_residual(const MeasureMatrix& m, const ConvolveOptions& opts) {
    return tv_norm(sub(det(m, opts), dirac()));
}

double frobenius_bound(const MeasureMatrix& m) {
    double s = 0.0;
    for (const auto& e : m.entries) {
        const double t = tv_norm(e);
        s += t * t;
    }
    return std::sqrt(s);
}

double vector_norm2(const MeasureVector& v) {
    double s = 0.0;
    for (const auto& e : v.entries) {
        const double t = tv_norm(e);
        s += t * t;
    }
    return std::sqrt(s);
}

MeasureMatrix deform_matrix(const MeasureMatrix& m, double t) {
    MeasureMatrix out(m.n);
    for (std::size_t k = 0; k < m.entries.size(); ++k) out.entries[k] = deform(m.entries[k], t);
    return out;
}

HalfLineMeasure invert_measure(const HalfLineMeasure& mu, const NeumannOptions& opts) {
    const Complex alpha = atom_at_zero(mu);
    if (std::abs(alpha) <= kWeightDropTol)
        throw DomainError("invert_measure: no dominant atom at 0");
    const HalfLineMeasure rho = sub(mu, scale(alpha, dirac()));
    const double ratio = tv_norm(rho) / std::abs(alpha);
    if (ratio >= 1.0)
        throw DomainError("invert_measure: Neumann dominance condition fails (||rho||/|alpha| = " +
                          std::to_string(ratio) + ")");
    const ConvolveOptions conv{opts.horizon};
    const HalfLineMeasure base = scale(-1.0 / alpha, rho);
    HalfLineMeasure term = dirac();
    HalfLineMeasure sum = dirac();
    for (std::size_t k = 1; k <= opts.max_terms; ++k) {
        term = convolve(term, base, conv);
        if (tv_norm(term) < opts.term_tol) break;
        sum = add(sum, term);
    }
    return scale(1.0 / alpha, sum);
}

MeasureMatrix invert_matrix(const MeasureMatrix& m, const NeumannOptions& opts) {
    const ConvolveOptions conv{opts.horizon};
    const HalfLineMeasure dinv = invert_measure(det(m, conv), opts);
    MeasureMatrix out(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            // adj(m)_ij = (-1)^{i+j} det(minor_ji)
            HalfLineMeasure c = (m.n == 1) ? dirac() : det(minor_of(m, j, i), conv);
            if ((i + j) % 2 == 1) c = scale(-1.0, c);
            out.at(i, j) = convolve(c, dinv, conv);
        }
    return out;
}

MeasureMatrix invert_near_identity(const MeasureMatrix& m, const NeumannOptions& opts) {
    const ConvolveOptions conv{opts.horizon};
    const MeasureMatrix nilpart = mat_sub(MeasureMatrix::identity(m.n), m);  // I - m
    if (frobenius_bound(nilpart) >= 1.0)
        throw DomainError("invert_near_identity: ||I - m|| >= 1");
    MeasureMatrix term = MeasureMatrix::identity(m.n);
    MeasureMatrix sum = MeasureMatrix::identity(m.n);
    for (std::size_t k = 1; k <= opts.max_terms; ++k) {
        term = mat_mul(term, nilpart, conv);
        if (frobenius_bound(term) < opts.term_tol) break;
        sum = mat_add(sum, term);
    }
    return sum;
}

}  // namespace hla
