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

#include "hla/factor.hpp"

#include <cmath>

namespace hla {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

double ComplexMatrix::max_entry_dist(const ComplexMatrix& other) const {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - other.a[k]));
    return d;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial1::constant(1.0);
    return m;
}

double PolyMatrix::max_coeff_dist(const PolyMatrix& other) const {
    double d = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, a[k].max_coeff_dist(other.a[k]));
    return d;
}

Complex det_complex(const ComplexMatrix& m) {
    // LU with partial pivoting, sign tracked.
    ComplexMatrix w = m;
    Complex d = 1.0;
    for (std::size_t k = 0; k < w.n; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < w.n; ++r)
            if (std::abs(w.at(r, k)) > std::abs(w.at(p, k))) p = r;
        if (std::abs(w.at(p, k)) == 0.0) return 0.0;
        if (p != k) {
            for (std::size_t j = 0; j < w.n; ++j) std::swap(w.at(p, j), w.at(k, j));
            d = -d;
        }
        d *= w.at(k, k);
        for (std::size_t r = k + 1; r < w.n; ++r) {
            const Complex f = w.at(r, k) / w.at(k, k);
            for (std::size_t j = k; j < w.n; ++j) w.at(r, j) -= f * w.at(k, j);
        }
    }
    return d;
}

Polynomial1 det_poly(const PolyMatrix& m) {
    if (m.n == 1) return m.at(0, 0);
    if (m.n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (m.n == 3)
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    throw DomainError("det_poly: only n <= 3 supported");
}

namespace {

constexpr double kDetTol = 1e-9;

void push_shear(std::vector<ElementaryFactor>& out, std::size_t i, std::size_t j, Complex c) {
    if (std::abs(c) > 0.0) out.push_back({i, j, c});
}

// diag(lambda, 1/lambda) in slots (i,j) as six shears:
// E_ij(l) E_ji(-1/l) E_ij(l) E_ij(-1) E_ji(1) E_ij(-1).
void push_whitehead(std::vector<ElementaryFactor>& out, std::size_t i, std::size_t j,
                    Complex lambda) {
    if (std::abs(lambda - 1.0) <= 1e-14) return;
    out.push_back({i, j, lambda});
    out.push_back({j, i, -1.0 / lambda});
    out.push_back({i, j, lambda});
    out.push_back({i, j, Complex{-1.0}});
    out.push_back({j, i, Complex{1.0}});
    out.push_back({i, j, Complex{-1.0}});
}

}  // namespace

std::vector<ElementaryFactor> factor_complex(const ComplexMatrix& c) {
    const std::size_t n = c.n;
    if (std::abs(det_complex(c) - 1.0) > kDetTol)
        throw DomainError("factor_complex: determinant must equal 1");

    ComplexMatrix w = c;
    // Row operations E_ij(f): row_i += f * row_j, recorded in application
    // order. Their product (last applied leftmost) maps c to diag(d).
    struct Op {
        std::size_t i, j;
        Complex f;
    };
    std::vector<Op> ops;
    auto row_add = [&](std::size_t i, std::size_t j, Complex f) {
        for (std::size_t col = 0; col < n; ++col) w.at(i, col) += f * w.at(j, col);
        ops.push_back({i, j, f});
    };

    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Column-max pivot via row addition, never a swap: fold the
        // largest-modulus row below into the pivot row.
        std::size_t p = k;
        for (std::size_t r = k; r < n; ++r)
            if (std::abs(w.at(r, k)) > std::abs(w.at(p, k))) p = r;
        if (std::abs(w.at(p, k)) <= 1e-13)
            throw DomainError("factor_complex: numerically singular pivot column");
        if (p != k) row_add(k, p, 1.0);
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(w.at(r, k)) > 0.0) row_add(r, k, -w.at(r, k) / w.at(k, k));
    }
    // Back substitution above the diagonal.
    for (std::size_t k = n; k-- > 1;)
        for (std::size_t r = 0; r < k; ++r)
            if (std::abs(w.at(r, k)) > 0.0) row_add(r, k, -w.at(r, k) / w.at(k, k));

    // c = inv(op_1) inv(op_2) ... inv(op_m) * diag(d); a shear inverts by
    // negating its parameter.
    std::vector<ElementaryFactor> out;
    for (const Op& op : ops) push_shear(out, op.i, op.j, -op.f);

    // diag(d_0..d_{n-1}) = prod_i W_i(p_i) with prefix products p_i.
    Complex prefix = 1.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        prefix *= w.at(i, i);
        push_whitehead(out, i, i + 1, prefix);
    }
    return out;
}

namespace {

// Leading coefficients at or below rounding noise (relative to the
// operands) are pure cancellation residue; dividing by them would blow
// the quotients up. Stripping them costs at most the stripped mass in
// the round trip.
Polynomial1 strip_noise(const Polynomial1& p, double floor_val) {
    std::vector<Complex> c = p.coeffs();
    while (!c.empty() && std::abs(c.back()) <= floor_val) c.pop_back();
    return Polynomial1(std::move(c));
}

double coeff_scale(const Polynomial1& p) {
    double s = 0.0;
    for (Complex c : p.coeffs()) s = std::max(s, std::abs(c));
    return s;
}

// Classic first-column Euclidean reduction. Complete in exact arithmetic,
// but ill-conditioned on long division chains; used as the fallback when
// the degree-peeling pass stalls.
std::vector<ElementaryFactor> factor_poly_column(PolyMatrix w) {
    struct Op {
        std::size_t i, j;
        Polynomial1 f;
    };
    std::vector<Op> ops;
    auto row_add = [&](std::size_t i, std::size_t j, const Polynomial1& f) {
        w.at(i, 0) = w.at(i, 0) + f * w.at(j, 0);
        w.at(i, 1) = w.at(i, 1) + f * w.at(j, 1);
        ops.push_back({i, j, f});
    };

    // Euclidean reduction of the first column (a, c) until c = 0.
    for (int guard = 0; !w.at(1, 0).is_zero(); ++guard) {
        if (guard > 1000) throw DomainError("factor_poly: Euclidean reduction did not terminate");
        const Polynomial1& a = w.at(0, 0);
        const Polynomial1& cc = w.at(1, 0);
        if (a.is_zero()) {
            // (0, c) -> (c, c) -> (c, 0); the second subtraction is exact.
            row_add(0, 1, Polynomial1::constant(1.0));
            row_add(1, 0, Polynomial1::constant(-1.0));
            continue;
        }
        bool reduce_first = a.degree() > cc.degree();
        // On a degree tie, reduce the row with the larger leading modulus
        // (ties toward the first row) -- except for two constants, where
        // only eliminating the second row can terminate.
        if (a.degree() == cc.degree())
            reduce_first = cc.degree() > 0 && std::abs(a.leading()) >= std::abs(cc.leading());
        // Install the exact division remainder in the first column; the
        // generic recomputation a - q*cc can leave rounding residue at the
        // cancelled top degrees and stall the degree descent.
        const double noise = 1e-12 * std::max(coeff_scale(a), coeff_scale(cc));
        if (reduce_first) {
            const auto [q, r] = a.divmod(cc);
            const Polynomial1 f = -q;
            w.at(0, 0) = strip_noise(r, noise);
            w.at(0, 1) = w.at(0, 1) + f * w.at(1, 1);
            ops.push_back({0, 1, f});
        } else {
            const auto [q, r] = cc.divmod(a);
            const Polynomial1 f = -q;
            w.at(1, 0) = strip_noise(r, noise);
            w.at(1, 1) = w.at(1, 1) + f * w.at(0, 1);
            ops.push_back({1, 0, f});
        }
    }

    const Polynomial1& u = w.at(0, 0);
    if (u.degree() != 0)
        throw DomainError("factor_poly: first column did not reduce to a unit (degenerate input)");
    const Complex uc = u.coeff(0);
    const Polynomial1& b = w.at(0, 1);
    const Polynomial1& d = w.at(1, 1);  // = 1/u as a constant, since det = 1

    std::vector<ElementaryFactor> out;
    for (const Op& op : ops)
        if (!op.f.is_zero()) out.push_back({op.i, op.j, -op.f});
    std::vector<ElementaryFactor> tail;
    push_whitehead(tail, 0, 1, uc);
    for (const auto& f : tail)
        out.push_back({f.i, f.j, Polynomial1::constant(std::get<Complex>(f.param))});
    const Polynomial1 beta = b * d;  // w = diag(u,1/u) * E_01(b/u)
    if (!beta.is_zero()) out.push_back({std::size_t{0}, std::size_t{1}, beta});
    return out;
}

int total_degree(const PolyMatrix& w) {
    int s = 0;
    for (const auto& p : w.a) s += std::max(p.degree(), 0);
    return s;
}

}  // namespace

std::vector<ElementaryFactor> factor_poly(const PolyMatrix& m) {
    if (m.n != 2) throw DomainError("factor_poly: only 2x2 supported");
    if (det_poly(m).max_coeff_dist(Polynomial1::constant(1.0)) > kDetTol)
        throw DomainError("factor_poly: determinant must equal the constant polynomial 1");

    // Peel shear factors off the right greedily: a right factor E_ij(q)
    // shows up as column j being column i times q plus lower-degree rest,
    // so dividing one column entry by its neighbour and subtracting drops
    // the total degree. Quotients stay small, unlike the column Euclid
    // whose conditioning degrades exponentially with chain length.
    PolyMatrix w = m;
    std::vector<ElementaryFactor> peeled;  // w_final * reverse(peeled) == m
    while (total_degree(w) > 0) {
        const int cur = total_degree(w);
        double w_scale = 0.0;
        for (const auto& p : w.a) w_scale = std::max(w_scale, coeff_scale(p));
        bool found = false;
        int best_deg = cur;
        double best_q_scale = 0.0;
        PolyMatrix best_w;
        ElementaryFactor best_f;
        for (std::size_t i = 0; i < 2; ++i) {
            const std::size_t j = 1 - i;
            for (std::size_t r = 0; r < 2; ++r) {
                const Polynomial1& den = w.at(r, i);
                const Polynomial1& num = w.at(r, j);
                if (den.is_zero() || num.is_zero() || num.degree() < den.degree()) continue;
                const auto [q, rem] = num.divmod(den);
                if (q.is_zero()) continue;
                // A quotient far above the matrix scale means the divisor's
                // leading coefficient is cancellation residue; following it
                // destroys the round trip.
                const double qs = coeff_scale(q);
                if (qs > 1e6 * (1.0 + w_scale)) continue;
                // Division cancellation residue grows roughly by the inverse
                // of the divisor's leading coefficient per eliminated degree,
                // so a floor near machine epsilon misses it after a couple of
                // steps. The mass discarded equals the actual residue, not the
                // floor, so a generous relative floor is the safe direction.
                const double noise = 1e-7 * w_scale;
                PolyMatrix trial = w;
                trial.at(r, j) = strip_noise(rem, noise);
                const std::size_t r2 = 1 - r;
                trial.at(r2, j) = strip_noise(trial.at(r2, j) - q * w.at(r2, i), noise);
                const int tdeg = total_degree(trial);
                if (tdeg >= cur) continue;
                // Deepest degree descent first; smaller quotient on ties.
                if (!found || tdeg < best_deg || (tdeg == best_deg && qs < best_q_scale)) {
                    found = true;
                    best_deg = tdeg;
                    best_q_scale = qs;
                    best_w = trial;
                    best_f = {i, j, q};
                }
            }
        }
        if (!found) break;  // stalled; hand the rest to the fallback
        w = best_w;
        // Scrub every entry relative to the matrix scale: leftover
        // cancellation residue above the per-polynomial trim threshold
        // would otherwise become a divisor in a later step.
        double ms = 0.0;
        for (const auto& p : w.a) ms = std::max(ms, coeff_scale(p));
        for (auto& p : w.a) p = strip_noise(p, 1e-7 * ms);
        peeled.push_back(best_f);
    }

    std::vector<ElementaryFactor> out;
    if (total_degree(w) == 0) {
        ComplexMatrix c(2);
        for (std::size_t k = 0; k < 4; ++k) c.a[k] = w.a[k].coeff(0);
        for (const auto& f : factor_complex(c))
            out.push_back({f.i, f.j, Polynomial1::constant(std::get<Complex>(f.param))});
    } else {
        out = factor_poly_column(w);
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) out.push_back(*it);
    return out;
}

ComplexMatrix product_complex(const std::vector<ElementaryFactor>& fs, std::size_t n) {
    ComplexMatrix acc = ComplexMatrix::identity(n);
    for (const auto& f : fs) {
        const Complex p = std::get<Complex>(f.param);
        // acc *= E_ij(p): column j of acc gains p * column i... careful:
        // (A * E_ij(p))_{r,c} = A_{r,c} + p * A_{r,i} [c == j].
        for (std::size_t r = 0; r < n; ++r) acc.at(r, f.j) += p * acc.at(r, f.i);
    }
    return acc;
}

PolyMatrix product_poly(const std::vector<ElementaryFactor>& fs, std::size_t n) {
    PolyMatrix acc = PolyMatrix::identity(n);
    for (const auto& f : fs) {
        const Polynomial1& p = std::get<Polynomial1>(f.param);
        for (std::size_t r = 0; r < n; ++r)
            acc.at(r, f.j) = acc.at(r, f.j) + p * acc.at(r, f.i);
    }
    return acc;
}

MeasureMatrix product_measure(const std::vector<ElementaryFactor>& fs, std::size_t n,
                              const ConvolveOptions& opts) {
    MeasureMatrix acc = MeasureMatrix::identity(n);
    for (const auto& f : fs) {
        const HalfLineMeasure& p = std::get<HalfLineMeasure>(f.param);
        for (std::size_t r = 0; r < n; ++r)
            acc.at(r, f.j) = add(acc.at(r, f.j), convolve(acc.at(r, f.i), p, opts));
    }
    return acc;
}

Poly2Matrix cohn_matrix() {
    using P2 = Polynomial2;
    const P2 one = P2::constant(1.0);
    const P2 z1z2 = P2::term(1, 1, 1.0);
    Poly2Matrix m;
    m.a = {one + z1z2, P2::term(2, 0, 1.0), P2::term(0, 2, -1.0), one - z1z2};
    return m;
}

Polynomial2 det_poly2(const Poly2Matrix& m) {
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

LatticeCoeffs atoms_to_poly(const HalfLineMeasure& mu, const std::vector<double>& base) {
    if (mu.density())
        throw DomainError("atoms_to_poly: measure must be purely atomic");
    LatticeCoeffs out;
    for (const Atom& a : mu.atoms()) {
        std::vector<int> idx;
        const double tol = 1e-9 * std::max(1.0, a.loc);
        if (!lattice_decompose(a.loc, base, tol, &idx))
            throw DomainError("atoms_to_poly: atom at loc " + std::to_string(a.loc) +
                              " does not decompose over the base");
        out[idx] += a.weight;
    }
    std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) <= kWeightDropTol; });
    return out;
}

HalfLineMeasure poly_to_atoms(const LatticeCoeffs& coeffs, const std::vector<double>& base) {
    std::vector<Atom> atoms;
    for (const auto& [idx, c] : coeffs) {
        if (idx.size() != base.size())
            throw DomainError("poly_to_atoms: multi-index arity mismatch");
        double loc = 0.0;
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (idx[i] < 0) throw DomainError("poly_to_atoms: negative exponent");
            loc += idx[i] * base[i];
        }
        atoms.push_back({loc, c});
    }
    return HalfLineMeasure::from_atoms(std::move(atoms));
}

LatticeCoeffs lattice_poly_mul(const LatticeCoeffs& a, const LatticeCoeffs& b) {
    LatticeCoeffs out;
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            std::vector<int> idx(ia.size());
            for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = ia[k] + ib[k];
            out[idx] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return std::abs(kv.second) <= kWeightDropTol; });
    return out;
}

}  // namespace hla
