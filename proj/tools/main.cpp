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

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hla/corpus.hpp"
#include "hla/homotopy.hpp"
#include "hla/json_io.hpp"
#include "hla/laplace.hpp"
#include "hla/spectra.hpp"
#include "hla/verify.hpp"

namespace {

using nlohmann::json;

std::uint64_t env_seed() {
    const char* s = std::getenv("HLA_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        hla::write_text_file(out_path, text);
}

std::string csv_double(double x) {
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

struct CommonOpts {
    double h = hla::kDefaultH;
    double horizon = hla::kDefaultHorizon;
    std::string in, in_b, out;
};

void add_io(CLI::App* cmd, CommonOpts& o, bool two_inputs = false) {
    if (two_inputs) {
        cmd->add_option("--a", o.in, "first measure JSON file")->required();
        cmd->add_option("--b", o.in_b, "second measure JSON file")->required();
    } else {
        cmd->add_option("--in", o.in, "input JSON file")->required();
    }
    cmd->add_option("-o,--out", o.out, "output file (default: stdout)");
}

int run(int argc, char** argv) {
    CLI::App app{"measure algebra on the half line: convolution, deformation, "
                 "Laplace transforms, shear factorizations, homotopy certificates"};
    app.require_subcommand(1);

    CommonOpts o;
    double t_param = 0.0;
    std::size_t samples = hla::kDefaultPathSamples;
    std::size_t resolution = 512;
    double tol = 1e-6;
    std::string grid = "0:10:101";
    bool full_path = false;
    std::uint64_t seed = env_seed();

    auto* c_conv = app.add_subcommand("convolve", "convolve two measures");
    add_io(c_conv, o, true);
    c_conv->add_option("--horizon", o.horizon, "truncation horizon");

    auto* c_deform = app.add_subcommand("deform", "apply the deformation mu -> mu_t");
    add_io(c_deform, o);
    c_deform->add_option("--t", t_param, "deformation parameter in [0,1]")->required();

    auto* c_norm = app.add_subcommand("norm", "total-variation norm of a measure");
    add_io(c_norm, o);

    auto* c_laplace = app.add_subcommand("laplace", "Laplace transform along a grid of points");
    add_io(c_laplace, o);
    c_laplace->add_option("--grid", grid, "real-axis grid min:max:count (default 0:10:101)");

    auto* c_det = app.add_subcommand("det", "determinant of a measure matrix");
    add_io(c_det, o);
    c_det->add_option("--horizon", o.horizon, "truncation horizon");

    auto* c_fc = app.add_subcommand("factor-complex", "shear factorization over C");
    add_io(c_fc, o);

    auto* c_fp = app.add_subcommand("factor-poly", "shear factorization over C[z], 2x2");
    add_io(c_fp, o);

    auto* c_hom = app.add_subcommand("homotopy", "null-homotopy path for a measure matrix");
    add_io(c_hom, o);
    c_hom->add_option("--samples", samples, "path sample count");
    c_hom->add_option("--tol", tol, "determinant residual tolerance");
    c_hom->add_flag("--full", full_path, "include matrices in the path JSON");

    auto* c_spec = app.add_subcommand("spectrum", "spectrum boundary curve and region report");
    c_spec->add_option("-o,--out", o.out, "CSV output file (default: stdout)");
    c_spec->add_option("--samples", samples, "curve sample count")->default_val(720);
    c_spec->add_option("--resolution", resolution, "raster resolution");

    auto* c_verify = app.add_subcommand("verify", "run the full invariant suite");
    c_verify->add_option("--seed", seed, "corpus seed (default: HLA_SEED or 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << json{{"error", std::string("usage: ") + e.what()}}.dump() << "\n";
        return 1;
    }

    const hla::ConvolveOptions conv{o.horizon};

    if (c_conv->parsed()) {
        const auto a = hla::measure_from_json(json::parse(hla::read_text_file(o.in)));
        const auto b = hla::measure_from_json(json::parse(hla::read_text_file(o.in_b)));
        emit(o.out, hla::measure_to_json(hla::convolve(a, b, conv)).dump(2) + "\n");
    } else if (c_deform->parsed()) {
        const auto mu = hla::measure_from_json(json::parse(hla::read_text_file(o.in)));
        emit(o.out, hla::measure_to_json(hla::deform(mu, t_param)).dump(2) + "\n");
    } else if (c_norm->parsed()) {
        const auto mu = hla::measure_from_json(json::parse(hla::read_text_file(o.in)));
        emit(o.out, json{{"tv_norm", hla::tv_norm(mu)}}.dump(2) + "\n");
    } else if (c_laplace->parsed()) {
        const auto mu = hla::measure_from_json(json::parse(hla::read_text_file(o.in)));
        double lo = 0.0, hi = 10.0;
        std::size_t count = 101;
        char c1 = 0, c2 = 0;
        std::istringstream gs(grid);
        if (!(gs >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2 ||
            lo < 0.0 || hi < lo)
            throw hla::DomainError("laplace: --grid must be min:max:count with 0 <= min <= max");
        std::ostringstream csv;
        csv << "s_re,s_im,val_re,val_im\n";
        for (std::size_t k = 0; k < count; ++k) {
            const double s =
                lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
            const hla::Complex v = hla::laplace_eval(mu, hla::Complex{s, 0.0});
            csv << csv_double(s) << ",0," << csv_double(v.real()) << ','
                << csv_double(v.imag()) << '\n';
        }
        emit(o.out, csv.str());
    } else if (c_det->parsed()) {
        const auto m = hla::matrix_from_json(json::parse(hla::read_text_file(o.in)));
        const auto d = hla::det(m, conv);
        emit(o.out,
             json{{"det", hla::measure_to_json(d)}, {"residual", hla::det_residual(m, conv)}}
                     .dump(2) +
                 "\n");
    } else if (c_fc->parsed()) {
        const auto c = hla::complex_matrix_from_json(json::parse(hla::read_text_file(o.in)));
        const auto fs = hla::factor_complex(c);
        const double err = hla::product_complex(fs, c.n).max_entry_dist(c);
        emit(o.out,
             json{{"factors", hla::factors_to_json(fs)}, {"max_roundtrip_error", err}}.dump(2) +
                 "\n");
    } else if (c_fp->parsed()) {
        const auto m = hla::poly_matrix_from_json(json::parse(hla::read_text_file(o.in)));
        const auto fs = hla::factor_poly(m);
        const double err = hla::product_poly(fs, m.n).max_coeff_dist(m);
        emit(o.out,
             json{{"factors", hla::factors_to_json(fs)}, {"max_roundtrip_error", err}}.dump(2) +
                 "\n");
    } else if (c_hom->parsed()) {
        const auto m = hla::matrix_from_json(json::parse(hla::read_text_file(o.in)));
        const auto path = hla::null_homotopy(m, samples, tol, conv);
        emit(o.out, hla::path_to_json(path, full_path).dump(2) + "\n");
    } else if (c_spec->parsed()) {
        const auto region = hla::spectrum_curve(samples);
        std::ostringstream csv;
        csv << "theta,re,im\n";
        std::vector<hla::Complex> boundary;
        for (const auto& s : region.curve) {
            boundary.push_back(s.w);
            csv << csv_double(s.theta) << ',' << csv_double(s.w.real()) << ','
                << csv_double(s.w.imag()) << '\n';
        }
        const int bounded = hla::complement_components(hla::region_membership,
                                                       hla::RasterOptions{resolution}, boundary);
        const auto mu = hla::nonexample_measure();
        double max_err = 0.0;
        for (int k = 0; k <= 64; ++k) {
            const double v = 10.0 * k / 64.0;
            for (hla::Complex s : {hla::Complex{v, 0.0}, hla::Complex{0.0, v}})
                max_err = std::max(max_err, std::abs(hla::laplace_eval(mu, s) -
                                                     hla::nonexample_transform(s)));
        }
        const json report{{"bounded_components", bounded}, {"closed_form_max_error", max_err}};
        if (o.out.empty()) {
            std::cout << csv.str();
            std::cerr << report.dump(2) << "\n";
        } else {
            hla::write_text_file(o.out, csv.str());
            std::cout << report.dump(2) << "\n";
        }
    } else if (c_verify->parsed()) {
        const auto results = hla::run_acceptance(seed);
        bool all = true;
        for (const auto& r : results) {
            all = all && r.pass;
            std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name
                      << " slack=" << r.slack << " (" << r.detail << ")\n";
        }
        std::cout << (all ? "all checks passed\n" : "verification FAILED\n");
        return all ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
