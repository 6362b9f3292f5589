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

#ifndef HLA_POLYNOMIAL_HPP
#define HLA_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hla {

inline constexpr double kCoeffTrimTol = 0x1p-40;

// Dense univariate complex polynomial; coefficients below kCoeffTrimTol
// are trimmed after every operation to keep the degree honest.
class Polynomial1 {
public:
    Polynomial1() = default;
    Polynomial1(std::initializer_list<std::complex<double>> c) : coeffs_(c) { trim(); }
    explicit Polynomial1(std::vector<std::complex<double>> c) : coeffs_(std::move(c)) { trim(); }
    static Polynomial1 constant(std::complex<double> c) { return Polynomial1({c}); }

    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::complex<double> leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
    std::complex<double> coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    std::complex<double> eval(std::complex<double> z) const {
        std::complex<double> v = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * z + *it;
        return v;
    }

    friend Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b) {
        std::vector<std::complex<double>> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
        return Polynomial1(std::move(c));
    }
    friend Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b) {
        std::vector<std::complex<double>> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
        return Polynomial1(std::move(c));
    }
    friend Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::complex<double>> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial1(std::move(c));
    }
    friend Polynomial1 operator*(std::complex<double> c, const Polynomial1& p) {
        std::vector<std::complex<double>> out = p.coeffs_;
        for (auto& x : out) x *= c;
        return Polynomial1(std::move(out));
    }
    friend Polynomial1 operator-(const Polynomial1& p) { return std::complex<double>(-1.0) * p; }

    // Euclidean division: *this = q*divisor + r with deg r < deg divisor.
    std::pair<Polynomial1, Polynomial1> divmod(const Polynomial1& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("Polynomial1: division by zero");
        std::vector<std::complex<double>> rem = coeffs_;
        const int dd = divisor.degree();
        std::vector<std::complex<double>> q;
        if (degree() >= dd) q.assign(static_cast<std::size_t>(degree() - dd) + 1, 0.0);
        for (int k = degree(); k >= dd; --k) {
            const std::complex<double> f = rem[static_cast<std::size_t>(k)] / divisor.leading();
            if (f != std::complex<double>{}) {
                q[static_cast<std::size_t>(k - dd)] = f;
                for (int j = 0; j <= dd; ++j)
                    rem[static_cast<std::size_t>(k - dd + j)] -=
                        f * divisor.coeff(static_cast<std::size_t>(j));
            }
        }
        if (dd <= degree()) rem.resize(static_cast<std::size_t>(dd));
        return {Polynomial1(std::move(q)), Polynomial1(std::move(rem))};
    }

    double max_coeff_dist(const Polynomial1& other) const {
        double m = 0.0;
        const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
        for (std::size_t k = 0; k < n; ++k)
            m = std::max(m, std::abs(coeff(k) - other.coeff(k)));
        return m;
    }

private:
    void trim() {
        while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kCoeffTrimTol)
            coeffs_.pop_back();
    }
    std::vector<std::complex<double>> coeffs_;
};

// Dense bivariate complex polynomial on a coefficient grid c[k][l] z1^k z2^l.
class Polynomial2 {
public:
    Polynomial2() = default;
    explicit Polynomial2(std::vector<std::vector<std::complex<double>>> grid)
        : grid_(std::move(grid)) {
        trim();
    }
    static Polynomial2 constant(std::complex<double> c) { return Polynomial2({{c}}); }
    static Polynomial2 term(std::size_t k, std::size_t l, std::complex<double> c) {
        std::vector<std::vector<std::complex<double>>> g(k + 1);
        for (auto& row : g) row.assign(l + 1, 0.0);
        g[k][l] = c;
        return Polynomial2(std::move(g));
    }

    bool is_zero() const { return grid_.empty(); }
    std::complex<double> coeff(std::size_t k, std::size_t l) const {
        if (k >= grid_.size() || l >= grid_[k].size()) return 0.0;
        return grid_[k][l];
    }
    std::size_t rows() const { return grid_.size(); }
    std::size_t cols() const {
        std::size_t c = 0;
        for (const auto& r : grid_) c = std::max(c, r.size());
        return c;
    }

    friend Polynomial2 operator+(const Polynomial2& a, const Polynomial2& b) {
        const std::size_t nr = std::max(a.rows(), b.rows());
        const std::size_t nc = std::max(a.cols(), b.cols());
        std::vector<std::vector<std::complex<double>>> g(nr);
        for (std::size_t k = 0; k < nr; ++k) {
            g[k].assign(nc, 0.0);
            for (std::size_t l = 0; l < nc; ++l) g[k][l] = a.coeff(k, l) + b.coeff(k, l);
        }
        return Polynomial2(std::move(g));
    }
    friend Polynomial2 operator-(const Polynomial2& a, const Polynomial2& b) {
        return a + std::complex<double>(-1.0) * b;
    }
    friend Polynomial2 operator*(std::complex<double> c, const Polynomial2& p) {
        auto g = p.grid_;
        for (auto& row : g)
            for (auto& x : row) x *= c;
        return Polynomial2(std::move(g));
    }
    friend Polynomial2 operator*(const Polynomial2& a, const Polynomial2& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::vector<std::complex<double>>> g(a.rows() + b.rows() - 1);
        const std::size_t nc = a.cols() + b.cols() - 1;
        for (auto& row : g) row.assign(nc, 0.0);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.grid_[i].size(); ++j) {
                if (a.grid_[i][j] == std::complex<double>{}) continue;
                for (std::size_t k = 0; k < b.rows(); ++k)
                    for (std::size_t l = 0; l < b.grid_[k].size(); ++l)
                        g[i + k][j + l] += a.grid_[i][j] * b.grid_[k][l];
            }
        return Polynomial2(std::move(g));
    }

    double max_coeff_dist(const Polynomial2& other) const {
        double m = 0.0;
        const std::size_t nr = std::max(rows(), other.rows());
        const std::size_t nc = std::max(cols(), other.cols());
        for (std::size_t k = 0; k < nr; ++k)
            for (std::size_t l = 0; l < nc; ++l)
                m = std::max(m, std::abs(coeff(k, l) - other.coeff(k, l)));
        return m;
    }

private:
    void trim() {
        for (auto& row : grid_)
            while (!row.empty() && std::abs(row.back()) <= kCoeffTrimTol) row.pop_back();
        while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
    }
    std::vector<std::vector<std::complex<double>>> grid_;  // trimmed rows
};

}  // namespace hla

#endif
