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

#include "hla/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <utility>

#include "hla/corpus.hpp"
#include "hla/homotopy.hpp"
#include "hla/laplace.hpp"
#include "hla/spectra.hpp"

namespace hla {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << x;
    return ss.str();
}

Rng sub_rng(std::uint64_t seed, std::uint64_t check) {
    Rng r(seed);
    r.discard(7 * check + 1);
    return Rng(r());
}

// 1. Closed-form transform of the dirac + (2x-3)e^{-x} measure.
CheckResult check_nonexample_transform() {
    const auto t0 = Clock::now();
    const double tol = 5e-4;
    const HalfLineMeasure mu = nonexample_measure();
    double worst = 0.0;
    for (double s : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0})
        worst = std::max(worst, std::abs(laplace_eval(mu, Complex{s, 0.0}) -
                                         nonexample_transform(Complex{s, 0.0})));
    const double elapsed = seconds_since(t0);
    return {"nonexample-closed-form", worst <= tol && elapsed < 1.0, tol - worst,
            "max |transform - closed form| = " + fmt(worst) + " over 6 real points, " +
                fmt(elapsed) + " s"};
}

// 2. |c0| + |2/9 - c0| >= 2/9 for random coefficient vectors.
CheckResult check_property_p(std::uint64_t seed) {
    const auto t0 = Clock::now();
    Rng rng = sub_rng(seed, 2);
    double worst_margin = 1e300;
    bool all_pass = true;
    for (int k = 0; k < 100000; ++k) {
        std::vector<Complex> coeffs(1 + (rng() % 8));
        for (auto& c : coeffs) c = 4.0 * random_unit_complex(rng);
        const PropertyPResult r = property_p_failure(coeffs);
        all_pass = all_pass && r.certificate;
        worst_margin =
            std::min(worst_margin, r.residual0 + r.residual1 - (2.0 / 9.0 - 1e-12));
    }
    const double elapsed = seconds_since(t0);
    return {"property-p-failure", all_pass && elapsed < 1.0, worst_margin,
            "min margin over 1e5 vectors = " + fmt(worst_margin) + ", " + fmt(elapsed) + " s"};
}

// 3. The spectrum region's complement is connected; curve endpoint values.
CheckResult check_region() {
    const SpectrumRegion region = spectrum_curve(2049);
    std::vector<Complex> boundary;
    for (const auto& s : region.curve) boundary.push_back(s.w);
    const int bounded = complement_components(region_membership, RasterOptions{512}, boundary);

    const Complex w0 = region.curve.front().w;           // theta = 0
    const Complex wpi = region.curve[1024].w;            // theta = pi exactly
    const double curve_err = std::max(std::abs(w0 - 1.0), std::abs(wpi));
    const bool pass = bounded == 0 && curve_err <= 1e-12;
    return {"region-connectivity", pass, 1e-12 - curve_err,
            std::to_string(bounded) + " bounded complement components, curve endpoint error " +
                fmt(curve_err)};
}

// 4. (mu * nu)_t == mu_t * nu_t across the deformation parameter.
CheckResult check_deformation_homomorphism(std::uint64_t seed) {
    Rng rng = sub_rng(seed, 4);
    const std::vector<double> ts{0.0, 0.25, 0.5, 1.0 - 1.0 / std::numbers::e, 0.99, 1.0};
    const double h = kDefaultH;
    double worst_atomic = 0.0, worst_mixed = 0.0;
    for (int k = 0; k < 200; ++k) {
        const bool mixed = k >= 100;
        const HalfLineMeasure mu =
            mixed ? random_mixed(rng, h, 2.0) : random_atomic(rng);
        const HalfLineMeasure nu =
            mixed ? random_mixed(rng, h, 2.0) : random_atomic(rng);
        const HalfLineMeasure prod = convolve(mu, nu);
        for (double t : ts) {
            const double r =
                tv_norm(sub(deform(prod, t), convolve(deform(mu, t), deform(nu, t))));
            (mixed ? worst_mixed : worst_atomic) = std::max(mixed ? worst_mixed : worst_atomic, r);
        }
    }
    const bool pass = worst_atomic <= 1e-12 && worst_mixed <= 1e-2;
    return {"deformation-homomorphism", pass,
            std::min(1e-12 - worst_atomic, 1e-2 - worst_mixed),
            "atomic residual " + fmt(worst_atomic) + ", mixed residual " + fmt(worst_mixed) +
                " over 200 pairs x 6 t"};
}

// 5. Transform shift and product identities.
CheckResult check_laplace_identities(std::uint64_t seed) {
    Rng rng = sub_rng(seed, 5);
    const std::vector<HalfPlanePoint> pts{HalfPlanePoint({0.0, 0.0}), HalfPlanePoint({1.0, 0.0}),
                                          HalfPlanePoint({2.0, 3.0}), HalfPlanePoint({0.0, 5.0})};
    const std::vector<double> ts{0.0, 0.25, 0.5, 1.0 - 1.0 / std::numbers::e, 0.99};
    double worst_atomic = 0.0, worst_mixed = 0.0;
    for (int k = 0; k < 40; ++k) {
        const bool mixed = k >= 20;
        const HalfLineMeasure mu =
            mixed ? random_mixed(rng, kDefaultH, 2.0) : random_atomic(rng);
        const HalfLineMeasure nu =
            mixed ? random_mixed(rng, kDefaultH, 2.0) : random_atomic(rng);
        double& worst = mixed ? worst_mixed : worst_atomic;
        for (const auto& s : pts) {
            worst = std::max(worst, laplace_product_residual(mu, nu, s));
            for (double t : ts) worst = std::max(worst, laplace_shift_residual(mu, t, s));
        }
    }
    const bool pass = worst_atomic <= 1e-12 && worst_mixed <= 1e-3;
    return {"laplace-identities", pass, std::min(1e-12 - worst_atomic, 1e-3 - worst_mixed),
            "atomic residual " + fmt(worst_atomic) + ", mixed residual " + fmt(worst_mixed)};
}

// 6. Large-s decay of the nonexample transform toward its atom at zero.
CheckResult check_rl_limit() {
    const HalfLineMeasure mu = nonexample_measure();
    std::vector<double> s_values;
    for (double s = 10.0; s <= 10240.0; s *= 2.0) s_values.push_back(s);
    const std::vector<Complex> vals = rl_limit_probe(mu, s_values);
    bool pass = true;
    double worst_slack = 1e300;
    double prev = 1e300;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        const double dist = std::abs(vals[k] - 1.0);
        worst_slack = std::min(worst_slack, 3.2 / s_values[k] - dist);
        if (dist > 3.2 / s_values[k] || dist >= prev) pass = false;
        prev = dist;
    }
    return {"riemann-lebesgue-decay", pass, worst_slack,
            "monotone |transform - 1| <= 3.2/s over s in [10, 10240]"};
}

// 7. Two-stage null-homotopy endpoints and determinant conservation.
CheckResult check_null_homotopy(std::uint64_t seed) {
    const auto t0 = Clock::now();
    Rng rng = sub_rng(seed, 7);
    double worst_atomic = 0.0, worst_mixed = 0.0, endpoint_err = 0.0;
    for (int k = 0; k < 50; ++k) {
        const bool mixed = k >= 40;
        const std::size_t n = 2 + (k % 2);
        const MeasureMatrix m = random_shear_matrix(rng, n, 6, !mixed, 0x1p-7);
        const HomotopyPath path = mixed ? null_homotopy(m, 33, 1e-2, {kDefaultHorizon})
                                        : null_homotopy(m, 129, 1e-9, {kDefaultHorizon});
        endpoint_err = std::max(
            endpoint_err,
            std::max(frobenius_bound(mat_sub(path.samples.front().matrix, m)),
                     frobenius_bound(
                         mat_sub(path.samples.back().matrix, MeasureMatrix::identity(n)))));
        (mixed ? worst_mixed : worst_atomic) =
            std::max(mixed ? worst_mixed : worst_atomic, path.max_det_residual);
    }
    const double elapsed = seconds_since(t0);
    const bool pass =
        endpoint_err == 0.0 && worst_atomic <= 1e-9 && worst_mixed <= 1e-2 && elapsed < 30.0;
    return {"null-homotopy-certificate", pass,
            std::min(1e-9 - worst_atomic, 1e-2 - worst_mixed),
            "endpoint error " + fmt(endpoint_err) + ", det residual atomic " + fmt(worst_atomic) +
                " / mixed " + fmt(worst_mixed) + ", " + fmt(elapsed) + " s"};
}

// 8. Shear factorizations reproduce their inputs; prefix determinants stay 1.
CheckResult check_factor_roundtrip(std::uint64_t seed) {
    Rng rng = sub_rng(seed, 8);
    double worst_entry = 0.0, worst_prefix = 0.0, worst_poly = 0.0;
    for (int k = 0; k < 500; ++k) {
        const std::size_t n = 2 + (static_cast<std::size_t>(k) % 3);
        const ComplexMatrix c = random_complex_sl(rng, n);
        const auto fs = factor_complex(c);
        worst_entry = std::max(worst_entry, product_complex(fs, n).max_entry_dist(c));
        std::vector<ElementaryFactor> prefix;
        for (const auto& f : fs) {
            prefix.push_back(f);
            worst_prefix =
                std::max(worst_prefix, std::abs(det_complex(product_complex(prefix, n)) - 1.0));
        }
    }
    for (int k = 0; k < 100; ++k) {
        const auto [m, built] = random_poly_sl2(rng, 4, 5);
        const auto fs = factor_poly(m);
        worst_poly = std::max(worst_poly, product_poly(fs, 2).max_coeff_dist(m));
    }
    const bool pass = worst_entry <= 1e-9 && worst_prefix <= 1e-9 && worst_poly <= 1e-9;
    return {"factorization-roundtrip", pass,
            1e-9 - std::max({worst_entry, worst_prefix, worst_poly}),
            "complex entry error " + fmt(worst_entry) + ", prefix det error " +
                fmt(worst_prefix) + ", polynomial coeff error " + fmt(worst_poly)};
}

// 9. det [[1+z1 z2, z1^2], [-z2^2, 1-z1 z2]] == 1 symbolically.
CheckResult check_cohn_det() {
    const double err = det_poly2(cohn_matrix()).max_coeff_dist(Polynomial2::constant(1.0));
    return {"cohn-determinant", err == 0.0, -err,
            "symbolic det coefficient distance from 1 = " + fmt(err)};
}

// 10. Approximation path on the atomic geometric-tail instance.
CheckResult check_approx_path() {
    const auto [f, g] = desk_instance();
    const HomotopyPath path = approx_path(f, g, 33);

    const double end_err = frobenius_bound(mat_sub(path.samples.back().matrix, f));
    MeasureMatrix start = g;
    const HalfLineMeasure dg_inv = invert_measure(det(g, {kDefaultHorizon}));
    for (std::size_t i = 0; i < start.n; ++i)
        start.at(i, 0) = convolve(start.at(i, 0), dg_inv, {kDefaultHorizon});
    const double start_err = frobenius_bound(mat_sub(path.samples.front().matrix, start));

    const double worst = std::max({path.max_det_residual, end_err, start_err});
    return {"approximation-path", worst <= 1e-6, 1e-6 - worst,
            "max det residual " + fmt(path.max_det_residual) + ", endpoint errors " +
                fmt(start_err) + " / " + fmt(end_err)};
}

// 11. ||M v||_2 <= frobenius_bound(M) ||v||_2 on random pairs.
CheckResult check_norm_bound(std::uint64_t seed) {
    Rng rng = sub_rng(seed, 11);
    double worst_slack = 1e300;
    for (int k = 0; k < 200; ++k) {
        const bool mixed = k >= 100;
        const std::size_t n = 2 + (k % 2);
        const double h = 0x1p-7;
        MeasureMatrix m(n);
        for (auto& e : m.entries)
            e = mixed ? random_mixed(rng, h, 2.0) : random_atomic(rng);
        const MeasureVector v = random_vector(rng, n, !mixed, h);
        const double lhs = vector_norm2(mat_apply(m, v));
        const double rhs = frobenius_bound(m) * vector_norm2(v) + 1e-2;
        worst_slack = std::min(worst_slack, rhs - lhs);
    }
    return {"operator-norm-bound", worst_slack >= 0.0, worst_slack,
            "min slack of ||Mv|| <= frob(M)||v|| + 1e-2 over 200 pairs = " + fmt(worst_slack)};
}

}  // namespace

std::vector<CheckResult> run_acceptance(std::uint64_t seed) {
    using Check = std::pair<const char*, std::function<CheckResult()>>;
    const std::vector<Check> checks{
        {"nonexample-closed-form", [] { return check_nonexample_transform(); }},
        {"property-p-failure", [seed] { return check_property_p(seed); }},
        {"region-connectivity", [] { return check_region(); }},
        {"deformation-homomorphism", [seed] { return check_deformation_homomorphism(seed); }},
        {"laplace-identities", [seed] { return check_laplace_identities(seed); }},
        {"riemann-lebesgue-decay", [] { return check_rl_limit(); }},
        {"null-homotopy-certificate", [seed] { return check_null_homotopy(seed); }},
        {"factorization-roundtrip", [seed] { return check_factor_roundtrip(seed); }},
        {"cohn-determinant", [] { return check_cohn_det(); }},
        {"approximation-path", [] { return check_approx_path(); }},
        {"operator-norm-bound", [seed] { return check_norm_bound(seed); }}};
    std::vector<CheckResult> out;
    out.reserve(checks.size());
    for (const auto& [name, fn] : checks) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({name, false, 0.0, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

}  // namespace hla
