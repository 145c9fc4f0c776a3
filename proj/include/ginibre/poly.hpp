/*
 * Copyright 2026 ginibre-interp developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GINIBRE_POLY_HPP
#define GINIBRE_POLY_HPP

#include <complex>
#include <vector>

namespace ginibre {

// Real-coefficient polynomial in the monomial basis, coefficients ascending.
// Adequate up to degree ~60; larger degrees evaluate through recurrences.
class Polynomial {
public:
    Polynomial() : c_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(0.0);
        trim();
    }

    static Polynomial monomial(int degree, double coeff = 1.0) {
        std::vector<double> c(static_cast<size_t>(degree) + 1, 0.0);
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coefficients() const { return c_; }

    double operator()(double x) const {
        double acc = 0.0;
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
        return acc;
    }
    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (int i = degree(); i >= 0; --i) acc = acc * z + c_[static_cast<size_t>(i)];
        return acc;
    }

    Polynomial derivative() const {
        if (degree() == 0) return Polynomial();
        std::vector<double> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
        return Polynomial(std::move(d));
    }

    // x -> x + shift of degree by one (multiply by x).
    Polynomial times_x() const {
        std::vector<double> d(c_.size() + 1, 0.0);
        for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i];
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<double> d(std::max(a.c_.size(), b.c_.size()), 0.0);
        for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
        return Polynomial(std::move(d));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<double> d(std::max(a.c_.size(), b.c_.size()), 0.0);
        for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
        return Polynomial(std::move(d));
    }
    friend Polynomial operator*(double s, const Polynomial& a) {
        std::vector<double> d = a.c_;
        for (double& v : d) v *= s;
        return Polynomial(std::move(d));
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
    }
    std::vector<double> c_;
};

}  // namespace ginibre

#endif
