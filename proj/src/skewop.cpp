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

#include "ginibre/skewop.hpp"

#include <cmath>
#include <limits>

namespace ginibre {

SkewOPFamily::SkewOPFamily(double tau, int n_max) : ctx_(tau, n_max) {}

Polynomial SkewOPFamily::c_polynomial(int n) const {
    if (n < 0 || n > ctx_.n_max) throw DomainError("c_polynomial: degree out of range");
    Polynomial cm, cc(std::vector<double>{1.0});
    for (int k = 0; k < n; ++k) {
        Polynomial cn = cc.times_x() - (k * ctx_.tau) * cm;
        cm = cc;
        cc = cn;
    }
    return cc;
}

Polynomial SkewOPFamily::r_polynomial(int n) const {
    if (n % 2 == 0 || n == 1) return c_polynomial(n);
    return c_polynomial(n) - static_cast<double>(n - 1) * c_polynomial(n - 2);
}

std::complex<double> r_poly(const SkewOPFamily& family, int n, std::complex<double> z) {
    HermiteContext ctx(family.tau(), n + 1);
    if (n % 2 == 0 || n == 1) return c_poly(ctx, n, z);
    return c_poly(ctx, n, z) - static_cast<double>(n - 1) * c_poly(ctx, n - 2, z);
}

double r_poly(const SkewOPFamily& family, int n, double x) {
    HermiteContext ctx(family.tau(), n + 1);
    if (n % 2 == 0 || n == 1) return c_poly(ctx, n, x);
    return c_poly(ctx, n, x) - static_cast<double>(n - 1) * c_poly(ctx, n - 2, x);
}

ScaledValue r_norm(const SkewOPFamily& family, int n) {
    if (n < 0) throw DomainError("r_norm: n must be >= 0");
    ScaledValue fact(1.0);
    for (int k = 2; k <= 2 * n; ++k) fact *= ScaledValue(static_cast<double>(k));
    return fact * ScaledValue(2.0 * std::sqrt(2.0 * M_PI) * (1.0 + family.tau()));
}

namespace {

double inner_skew_real(const Polynomial& f, const Polynomial& g, double tau,
                       const QuadratureSpec& spec) {
    const double s2 = 1.0 + tau;
    const double inf = std::numeric_limits<double>::infinity();
    const int deg = f.degree() + g.degree();
    const double r = truncation_radius(s2, deg, spec.trunc_epsilon);
    auto w = [s2](double u) { return std::exp(-u * u / (2.0 * s2)); };
    // Inner integral split at the diagonal keeps each panel smooth.
    auto outer = [&](double x) {
        double upper = integrate([&](double y) { return w(y) * g(y); }, x, r, spec);
        double lower = integrate([&](double y) { return w(y) * g(y); }, -r, x, spec);
        return w(x) * f(x) * (upper - lower);
    };
    return integrate(outer, -inf, inf, spec, GaussianBound{s2, 0.0, deg});
}

double inner_skew_cplx(const Polynomial& f, const Polynomial& g, double tau,
                       const QuadratureSpec& spec) {
    const double gamma = std::sqrt(2.0 / (1.0 - tau * tau));
    const double inf = std::numeric_limits<double>::infinity();
    const int deg = f.degree() + g.degree();
    // e^{(y^2-x^2)/(1+tau)} erfc(gamma y) decays like e^{-y^2/(1-tau)}.
    const double ry = truncation_radius(0.5 * (1.0 - tau), deg, spec.trunc_epsilon);
    auto outer = [&](double x) {
        return integrate(
            [&](double y) {
                std::complex<double> wz(x, y);
                double im = std::imag(f(wz) * std::conj(g(wz)));
                return std::exp((y * y - x * x) / (1.0 + tau)) * erfc(gamma * y) * im;
            },
            0.0, ry, spec);
    };
    return -4.0 * integrate(outer, -inf, inf, spec, GaussianBound{0.5 * (1.0 + tau), 0.0, deg});
}

}  // namespace

double inner_skew(const Polynomial& f, const Polynomial& g, double tau,
                  const QuadratureSpec& spec) {
    if (!(tau >= 0.0) || !(tau < 1.0)) throw DomainError("inner_skew: tau must lie in [0, 1)");
    return inner_skew_real(f, g, tau, spec) + inner_skew_cplx(f, g, tau, spec);
}

M1Result verify_m1(int j, int k, double tau, const QuadratureSpec& spec) {
    if (j < 0 || k < 0 || j > 6 || k > 6)
        throw DomainError("verify_m1: degrees must satisfy 0 <= j,k <= 6");
    SkewOPFamily family(tau, 2 * std::max(j, k) + 2);
    double closed = 0.0;
    if (j >= k)
        closed = -std::pow(2.0, j + k + 1.5) * std::tgamma(j + 1.0) *
                 std::tgamma(k + 0.5) * (1.0 + tau);
    double numeric =
        inner_skew(family.c_polynomial(2 * j + 1), family.c_polynomial(2 * k), tau, spec);
    double residual = std::fabs(numeric - closed) / std::max(1.0, std::fabs(closed));
    return {numeric, closed, residual};
}

}  // namespace ginibre
