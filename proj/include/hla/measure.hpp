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

#ifndef HLA_MEASURE_HPP
#define HLA_MEASURE_HPP

#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hla {

using Complex = std::complex<double>;

// Thrown on precondition violations (negative locations, t out of range,
// class membership failures, non-invertible inputs, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kDefaultH = 0x1p-10;
inline constexpr double kDefaultHorizon = 32.0;
inline constexpr double kAtomMergeTol = 0x1p-40;
inline constexpr double kWeightDropTol = 0x1p-50;

struct Atom {
    double loc = 0.0;
    Complex weight;
};

// Absolutely continuous part, sampled on the uniform grid {0, h, 2h, ...}.
// Split re/im storage so the hot kernels can run unshuffled.
struct Density {
    double h = kDefaultH;
    std::vector<double> re, im;

    std::size_t size() const { return re.size(); }
    double support() const { return re.empty() ? 0.0 : h * static_cast<double>(re.size() - 1); }
    Complex value(std::size_t k) const { return {re[k], im[k]}; }
    void set(std::size_t k, Complex v) {
        re[k] = v.real();
        im[k] = v.imag();
    }
    static Density zeros(double h, std::size_t n) {
        Density d;
        d.h = h;
        d.re.assign(n, 0.0);
        d.im.assign(n, 0.0);
        return d;
    }
};

// A complex Borel measure on [0,+inf) with finite atomic part and an
// optional sampled absolutely continuous part. Immutable after
// construction; every operation below is a pure function.
class HalfLineMeasure {
public:
    HalfLineMeasure() = default;

    static HalfLineMeasure zero() { return {}; }
    static HalfLineMeasure from_atoms(std::vector<Atom> atoms);
    static HalfLineMeasure from_density(Density d);
    static HalfLineMeasure from_parts(std::vector<Atom> atoms, std::optional<Density> d);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<Density>& density() const { return density_; }
    bool is_atomic() const { return !density_.has_value(); }
    bool is_zero() const { return atoms_.empty() && !density_.has_value(); }

    // Largest location carrying mass (0 for the zero measure).
    double support_bound() const;

private:
    std::vector<Atom> atoms_;          // sorted by loc, pairwise distinct
    std::optional<Density> density_;
};

struct AlgebraClass {
    enum class Tag { FullMixed, DiracPlusL1, Atomic, AtomicLattice };
    Tag tag = Tag::FullMixed;
    std::vector<double> base;  // lattice generators, AtomicLattice only

    static AlgebraClass full_mixed() { return {Tag::FullMixed, {}}; }
    static AlgebraClass dirac_plus_l1() { return {Tag::DiracPlusL1, {}}; }
    static AlgebraClass atomic() { return {Tag::Atomic, {}}; }
    static AlgebraClass atomic_lattice(std::vector<double> base);
};

HalfLineMeasure dirac();
HalfLineMeasure dirac_at(double loc);

HalfLineMeasure add(const HalfLineMeasure& mu, const HalfLineMeasure& nu);
HalfLineMeasure sub(const HalfLineMeasure& mu, const HalfLineMeasure& nu);
HalfLineMeasure scale(Complex c, const HalfLineMeasure& mu);

struct ConvolveOptions {
    // Mass beyond the horizon is dropped; infinite by default so atomic
    // identities stay exact. Iterated products (Neumann series) pass a
    // finite horizon to keep supports bounded.
    double horizon = std::numeric_limits<double>::infinity();
};

HalfLineMeasure convolve(const HalfLineMeasure& mu, const HalfLineMeasure& nu,
                         const ConvolveOptions& opts = {},
                         double* truncated_mass = nullptr);

double tv_norm(const HalfLineMeasure& mu);
Complex atom_at_zero(const HalfLineMeasure& mu);

// mu_t: atom (loc,c) -> (loc, c*(1-t)^loc), density f(x) -> (1-t)^x f(x);
// t = 1 keeps exactly the atom at zero.
HalfLineMeasure deform(const HalfLineMeasure& mu, double t);

// Returns mu unchanged when it belongs to the class, throws DomainError
// naming the offending component otherwise.
HalfLineMeasure project_to_class(const HalfLineMeasure& mu, const AlgebraClass& cls);

// Resample a density onto a finer grid by linear interpolation.
Density resample(const Density& d, double new_h, std::size_t new_n);

// Nonnegative-integer decomposition of loc over the semigroup generated by
// base, within tol. Returns false when no decomposition exists.
bool lattice_decompose(double loc, const std::vector<double>& base, double tol,
                       std::vector<int>* out);

}  // namespace hla

#endif
