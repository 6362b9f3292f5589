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

#include "hla/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hla {

using nlohmann::json;

json measure_to_json(const HalfLineMeasure& mu) {
    json atoms = json::array();
    for (const Atom& a : mu.atoms())
        atoms.push_back({{"loc", a.loc}, {"re", a.weight.real()}, {"im", a.weight.imag()}});
    json j{{"atoms", std::move(atoms)}};
    if (mu.density()) {
        const Density& d = *mu.density();
        json values = json::array();
        for (std::size_t k = 0; k < d.size(); ++k)
            values.push_back({d.re[k], d.im[k]});
        j["density"] = {{"h", d.h}, {"values", std::move(values)}};
    } else {
        j["density"] = nullptr;
    }
    return j;
}

HalfLineMeasure measure_from_json(const json& j) {
    std::vector<Atom> atoms;
    if (j.contains("atoms"))
        for (const auto& a : j.at("atoms"))
            atoms.push_back({a.at("loc").get<double>(),
                             {a.at("re").get<double>(), a.at("im").get<double>()}});
    std::optional<Density> density;
    if (j.contains("density") && !j.at("density").is_null()) {
        const auto& dj = j.at("density");
        Density d;
        d.h = dj.at("h").get<double>();
        for (const auto& v : dj.at("values")) {
            d.re.push_back(v.at(0).get<double>());
            d.im.push_back(v.at(1).get<double>());
        }
        density = std::move(d);
    }
    return HalfLineMeasure::from_parts(std::move(atoms), std::move(density));
}

json matrix_to_json(const MeasureMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries) entries.push_back(measure_to_json(e));
    return {{"n", m.n}, {"entries", std::move(entries)}};
}

MeasureMatrix matrix_from_json(const json& j) {
    MeasureMatrix m(j.at("n").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.n * m.n)
        throw DomainError("matrix_from_json: entry count does not match n*n");
    for (std::size_t k = 0; k < entries.size(); ++k)
        m.entries[k] = measure_from_json(entries[k]);
    return m;
}

namespace {

json complex_to_json(Complex c) { return {c.real(), c.imag()}; }
Complex complex_from_json(const json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json poly_to_json(const Polynomial1& p) {
    json coeffs = json::array();
    for (Complex c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    return coeffs;
}

Polynomial1 poly_from_json(const json& j) {
    std::vector<Complex> coeffs;
    for (const auto& c : j) coeffs.push_back(complex_from_json(c));
    return Polynomial1(std::move(coeffs));
}

}  // namespace

json complex_matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (Complex c : m.a) entries.push_back(complex_to_json(c));
    return {{"n", m.n}, {"entries", std::move(entries)}};
}

ComplexMatrix complex_matrix_from_json(const json& j) {
    ComplexMatrix m(j.at("n").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.n * m.n)
        throw DomainError("complex_matrix_from_json: entry count does not match n*n");
    for (std::size_t k = 0; k < entries.size(); ++k) m.a[k] = complex_from_json(entries[k]);
    return m;
}

json poly_matrix_to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (const auto& p : m.a) entries.push_back(poly_to_json(p));
    return {{"n", m.n}, {"entries", std::move(entries)}};
}

PolyMatrix poly_matrix_from_json(const json& j) {
    PolyMatrix m(j.at("n").get<std::size_t>());
    const auto& entries = j.at("entries");
    if (entries.size() != m.n * m.n)
        throw DomainError("poly_matrix_from_json: entry count does not match n*n");
    for (std::size_t k = 0; k < entries.size(); ++k) m.a[k] = poly_from_json(entries[k]);
    return m;
}

json factors_to_json(const std::vector<ElementaryFactor>& fs) {
    json out = json::array();
    for (const auto& f : fs) {
        json jf{{"i", f.i + 1}, {"j", f.j + 1}};  // 1-based on the wire
        if (std::holds_alternative<Complex>(f.param)) {
            jf["kind"] = "complex";
            jf["param"] = complex_to_json(std::get<Complex>(f.param));
        } else if (std::holds_alternative<Polynomial1>(f.param)) {
            jf["kind"] = "poly";
            jf["param"] = poly_to_json(std::get<Polynomial1>(f.param));
        } else {
            jf["kind"] = "measure";
            jf["param"] = measure_to_json(std::get<HalfLineMeasure>(f.param));
        }
        out.push_back(std::move(jf));
    }
    return out;
}

json path_to_json(const HomotopyPath& p, bool full) {
    json samples = json::array();
    for (const auto& s : p.samples) {
        json js{{"t", s.t}, {"det_residual", s.det_residual}};
        if (full) js["matrix"] = matrix_to_json(s.matrix);
        samples.push_back(std::move(js));
    }
    return {{"start", p.start_desc},
            {"end", p.end_desc},
            {"max_det_residual", p.max_det_residual},
            {"lipschitz", p.lipschitz},
            {"samples", std::move(samples)}};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open file for writing: " + path);
    out << contents;
}

}  // namespace hla
