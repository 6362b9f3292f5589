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

#include "hla/measure.hpp"

#include <algorithm>
#include <cmath>

#include "hla/kernels.hpp"

namespace hla {
namespace {

bool same_location(double a, double b) {
    return std::abs(a - b) <= kAtomMergeTol * std::max(1.0, std::max(a, b));
}

std::vector<Atom> normalize_atoms(std::vector<Atom> atoms) {
    for (const Atom& a : atoms)
        if (a.loc < 0.0) throw DomainError("atom location must be nonnegative");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.loc < b.loc; });
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!out.empty() && same_location(out.back().loc, a.loc))
            out.back().weight += a.weight;
        else
            out.push_back(a);
    }
    std::erase_if(out, [](const Atom& a) { return std::abs(a.weight) <= kWeightDropTol; });
    return out;
}

bool density_is_zero(const Density& d) {
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d.re[k] != 0.0 || d.im[k] != 0.0) return false;
    return true;
}

// Linear interpolation of d at abscissa x; zero outside the sampled support.
Complex sample_at(const Density& d, double x) {
    if (x < 0.0) return {};
    const double u = x / d.h;
    const auto k = static_cast<std::size_t>(u);
    if (k + 1 >= d.size()) {
        if (k < d.size() && u - static_cast<double>(k) < 1e-12) return d.value(k);
        return {};
    }
    const double frac = u - static_cast<double>(k);
    return (1.0 - frac) * d.value(k) + frac * d.value(k + 1);
}

// L1 mass of samples [from, n) by the trapezoid rule on |f|.
double tail_mass(const Density& d, std::size_t from) {
    if (from >= d.size()) return 0.0;
    double s = 0.0;
    for (std::size_t k = from; k < d.size(); ++k) {
        const double m = std::abs(d.value(k));
        const bool endpoint = (k == from || k + 1 == d.size());
        s += endpoint ? 0.5 * m : m;
    }
    return s * d.h;
}

}  // namespace

HalfLineMeasure HalfLineMeasure::from_atoms(std::vector<Atom> atoms) {
    return from_parts(std::move(atoms), std::nullopt);
}

HalfLineMeasure HalfLineMeasure::from_density(Density d) {
    return from_parts({}, std::move(d));
}

HalfLineMeasure HalfLineMeasure::from_parts(std::vector<Atom> atoms,
                                            std::optional<Density> d) {
    if (d) {
        if (!(d->h > 0.0)) throw DomainError("density grid step must be positive");
        if (d->re.empty() || d->re.size() != d->im.size())
            throw DomainError("density sample arrays must be nonempty and equal length");
        if (density_is_zero(*d)) d.reset();
    }
    HalfLineMeasure m;
    m.atoms_ = normalize_atoms(std::move(atoms));
    m.density_ = std::move(d);
    return m;
}

double HalfLineMeasure::support_bound() const {
    double s = atoms_.empty() ? 0.0 : atoms_.back().loc;
    if (density_) s = std::max(s, density_->support());
    return s;
}

AlgebraClass AlgebraClass::atomic_lattice(std::vector<double> base) {
    for (double e : base)
        if (!(e > 0.0)) throw DomainError("lattice base frequencies must be strictly positive");
    return {Tag::AtomicLattice, std::move(base)};
}

HalfLineMeasure dirac() { return HalfLineMeasure::from_atoms({{0.0, 1.0}}); }

HalfLineMeasure dirac_at(double loc) {
    if (loc < 0.0) throw DomainError("dirac_at: location must be nonnegative");
    return HalfLineMeasure::from_atoms({{loc, 1.0}});
}

HalfLineMeasure scale(Complex c, const HalfLineMeasure& mu) {
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& a : atoms) a.weight *= c;
    std::optional<Density> d = mu.density();
    if (d)
        for (std::size_t k = 0; k < d->size(); ++k) d->set(k, c * d->value(k));
    return HalfLineMeasure::from_parts(std::move(atoms), std::move(d));
}

Density resample(const Density& d, double new_h, std::size_t new_n) {
    Density out = Density::zeros(new_h, new_n);
    for (std::size_t k = 0; k < new_n; ++k)
        out.set(k, sample_at(d, new_h * static_cast<double>(k)));
    return out;
}

HalfLineMeasure add(const HalfLineMeasure& mu, const HalfLineMeasure& nu) {
    std::vector<Atom> atoms = mu.atoms();
    atoms.insert(atoms.end(), nu.atoms().begin(), nu.atoms().end());

    std::optional<Density> d;
    const auto& da = mu.density();
    const auto& db = nu.density();
    if (da && db) {
        // Common refined grid: the finer step wins, coarser is resampled.
        const double h = std::min(da->h, db->h);
        const double sup = std::max(da->support(), db->support());
        const auto n = static_cast<std::size_t>(std::round(sup / h)) + 1;
        Density a = (da->h == h && da->size() == n) ? *da : resample(*da, h, n);
        Density b = (db->h == h && db->size() == n) ? *db : resample(*db, h, n);
        for (std::size_t k = 0; k < n; ++k) a.set(k, a.value(k) + b.value(k));
        d = std::move(a);
    } else if (da) {
        d = *da;
    } else if (db) {
        d = *db;
    }
    return HalfLineMeasure::from_parts(std::move(atoms), std::move(d));
}

HalfLineMeasure sub(const HalfLineMeasure& mu, const HalfLineMeasure& nu) {
    return add(mu, scale(-1.0, nu));
}

HalfLineMeasure convolve(const HalfLineMeasure& mu, const HalfLineMeasure& nu,
                         const ConvolveOptions& opts, double* truncated_mass) {
    double dropped = 0.0;

    // Atomic x atomic part: exact atom at the sum of locations.
    std::vector<Atom> atoms;
    atoms.reserve(mu.atoms().size() * nu.atoms().size());
    for (const Atom& a : mu.atoms())
        for (const Atom& b : nu.atoms()) {
            const double loc = a.loc + b.loc;
            if (loc > opts.horizon)
                dropped += std::abs(a.weight * b.weight);
            else
                atoms.push_back({loc, a.weight * b.weight});
        }

    std::optional<Density> out_density;
    const auto& da = mu.density();
    const auto& db = nu.density();
    if (da || db) {
        const double h = (da && db) ? std::min(da->h, db->h) : (da ? da->h : db->h);

        // Support of all density contributions before truncation.
        double sup = 0.0;
        auto atom_shift_sup = [](const std::vector<Atom>& as, const Density& den) {
            return as.empty() ? -1.0 : as.back().loc + den.support();
        };
        if (da) sup = std::max(sup, atom_shift_sup(nu.atoms(), *da));
        if (db) sup = std::max(sup, atom_shift_sup(mu.atoms(), *db));
        if (da && db) sup = std::max(sup, da->support() + db->support());

        if (sup >= 0.0) {
            const auto n_full = static_cast<std::size_t>(std::ceil(sup / h - 1e-9)) + 1;
            Density acc = Density::zeros(h, n_full);

            // Atom (loc,c) times density: shift-and-scale onto the output grid.
            auto accumulate_shifted = [&](const std::vector<Atom>& as, const Density& den) {
                if (as.empty()) return;
                const Density* src = &den;
                Density tmp;
                if (den.h != h) {
                    const auto n = static_cast<std::size_t>(std::round(den.support() / h)) + 1;
                    tmp = resample(den, h, n);
                    src = &tmp;
                }
                for (const Atom& a : as) {
                    const double shift_cells = a.loc / h;
                    const auto off = static_cast<std::size_t>(std::round(shift_cells));
                    if (std::abs(shift_cells - static_cast<double>(off)) < 1e-9) {
                        // On-grid shift: exact, and the hot path.
                        const std::size_t n = std::min(src->size(), acc.size() - std::min(off, acc.size()));
                        if (off < acc.size())
                            kernels::active().caxpy(a.weight.real(), a.weight.imag(),
                                                    src->re.data(), src->im.data(), n,
                                                    acc.re.data() + off, acc.im.data() + off);
                    } else {
                        // Off-grid shift: scatter each source node onto the
                        // two bracketing target nodes. Unlike resampling the
                        // shifted interpolant, this conserves cell mass, so
                        // the density's jump at its left edge is not smeared
                        // away (the jump carries O(h |f(0)|) of mass).
                        const auto base = static_cast<std::size_t>(std::floor(shift_cells));
                        const double frac = shift_cells - std::floor(shift_cells);
                        const Complex w_lo = a.weight * (1.0 - frac);
                        const Complex w_hi = a.weight * frac;
                        if (base < acc.size()) {
                            const std::size_t n = std::min(src->size(), acc.size() - base);
                            kernels::active().caxpy(w_lo.real(), w_lo.imag(),
                                                    src->re.data(), src->im.data(), n,
                                                    acc.re.data() + base, acc.im.data() + base);
                        }
                        if (base + 1 < acc.size()) {
                            const std::size_t n = std::min(src->size(), acc.size() - base - 1);
                            kernels::active().caxpy(w_hi.real(), w_hi.imag(),
                                                    src->re.data(), src->im.data(), n,
                                                    acc.re.data() + base + 1,
                                                    acc.im.data() + base + 1);
                        }
                    }
                }
            };
            if (da) accumulate_shifted(nu.atoms(), *da);
            if (db) accumulate_shifted(mu.atoms(), *db);

            if (da && db) {
                // Trapezoid-rule discrete convolution on the common grid.
                auto prep = [&](const Density& den) {
                    if (den.h == h) return den;
                    const auto n = static_cast<std::size_t>(std::round(den.support() / h)) + 1;
                    return resample(den, h, n);
                };
                const Density f = prep(*da);
                const Density g = prep(*db);
                const std::size_t nc = f.size() + g.size() - 1;
                Density conv = Density::zeros(h, nc);
                kernels::active().conv_accum(f.re.data(), f.im.data(), f.size(),
                                             g.re.data(), g.im.data(), g.size(),
                                             conv.re.data(), conv.im.data());
                // Trapezoid endpoint halving over the actual overlap
                // [jmin, jmax]: both supports are truncated, so past either
                // end the interval endpoints are interior array samples.
                for (std::size_t k = 0; k < nc; ++k) {
                    const std::size_t jmin = (k >= g.size()) ? k - (g.size() - 1) : 0;
                    const std::size_t jmax = std::min(k, f.size() - 1);
                    Complex c = conv.value(k);
                    c -= 0.5 * f.value(jmin) * g.value(k - jmin);
                    c -= 0.5 * f.value(jmax) * g.value(k - jmax);
                    conv.set(k, h * c);
                }
                const std::size_t n = std::min(nc, acc.size());
                for (std::size_t k = 0; k < n; ++k)
                    acc.set(k, acc.value(k) + conv.value(k));
            }

            // Truncate at the horizon; report the dropped mass.
            auto n_keep = acc.size();
            if (std::isfinite(opts.horizon)) {
                const auto cap = static_cast<std::size_t>(std::floor(opts.horizon / h)) + 1;
                if (cap < n_keep) {
                    dropped += tail_mass(acc, cap > 0 ? cap - 1 : 0);
                    n_keep = cap;
                }
            }
            acc.re.resize(n_keep);
            acc.im.resize(n_keep);
            if (n_keep > 0) out_density = std::move(acc);
        }
    }

    if (truncated_mass) *truncated_mass = dropped;
    return HalfLineMeasure::from_parts(std::move(atoms), std::move(out_density));
}

double tv_norm(const HalfLineMeasure& mu) {
    double s = 0.0;
    for (const Atom& a : mu.atoms()) s += std::abs(a.weight);
    if (const auto& d = mu.density()) {
        const std::size_t n = d->size();
        double l1 = kernels::active().sum_abs(d->re.data(), d->im.data(), n);
        l1 -= 0.5 * std::abs(d->value(0));
        if (n > 1) l1 -= 0.5 * std::abs(d->value(n - 1));
        s += d->h * l1;
    }
    return s;
}

Complex atom_at_zero(const HalfLineMeasure& mu) {
    if (!mu.atoms().empty() && same_location(mu.atoms().front().loc, 0.0))
        return mu.atoms().front().weight;
    return {};
}

HalfLineMeasure deform(const HalfLineMeasure& mu, double t) {
    if (t < 0.0 || t > 1.0) throw DomainError("deform: t must lie in [0,1]");
    if (t == 0.0) return mu;
    if (t == 1.0) {
        const Complex c = atom_at_zero(mu);
        if (c == Complex{}) return HalfLineMeasure::zero();
        return HalfLineMeasure::from_atoms({{0.0, c}});
    }
    const double l = std::log1p(-t);  // log(1-t)
    std::vector<Atom> atoms = mu.atoms();
    for (Atom& a : atoms) a.weight *= std::exp(a.loc * l);
    std::optional<Density> d = mu.density();
    if (d)
        for (std::size_t k = 0; k < d->size(); ++k)
            d->set(k, d->value(k) * std::exp(d->h * static_cast<double>(k) * l));
    return HalfLineMeasure::from_parts(std::move(atoms), std::move(d));
}

bool lattice_decompose(double loc, const std::vector<double>& base, double tol,
                       std::vector<int>* out) {
    // Depth-first search over nonnegative integer combinations. The base is
    // caller-certified rationally independent, so a hit is unique in exact
    // arithmetic; numerically we accept the first one within tol.
    std::vector<int> counts(base.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, double rem) -> bool {
        if (i == base.size()) {
            if (std::abs(rem) <= tol) {
                if (out) *out = counts;
                return true;
            }
            return false;
        }
        const int nmax = static_cast<int>(std::floor((rem + tol) / base[i]));
        for (int n = 0; n <= nmax; ++n) {
            counts[i] = n;
            if (self(self, i + 1, rem - n * base[i])) return true;
        }
        counts[i] = 0;
        return false;
    };
    return rec(rec, 0, loc);
}

HalfLineMeasure project_to_class(const HalfLineMeasure& mu, const AlgebraClass& cls) {
    using Tag = AlgebraClass::Tag;
    switch (cls.tag) {
        case Tag::FullMixed:
            return mu;
        case Tag::DiracPlusL1:
            for (const Atom& a : mu.atoms())
                if (!same_location(a.loc, 0.0))
                    throw DomainError("project_to_class: atom at loc " +
                                      std::to_string(a.loc) + " outside dirac+L1 class");
            return mu;
        case Tag::Atomic:
            if (mu.density())
                throw DomainError("project_to_class: density part not allowed in atomic class");
            return mu;
        case Tag::AtomicLattice: {
            if (mu.density())
                throw DomainError("project_to_class: density part not allowed in lattice class");
            for (const Atom& a : mu.atoms()) {
                const double tol = 1e-9 * std::max(1.0, a.loc);
                if (!lattice_decompose(a.loc, cls.base, tol, nullptr))
                    throw DomainError("project_to_class: atom at loc " +
                                      std::to_string(a.loc) +
                                      " not on the generated lattice semigroup");
            }
            return mu;
        }
    }
    throw DomainError("project_to_class: unknown class tag");
}

}  // namespace hla
