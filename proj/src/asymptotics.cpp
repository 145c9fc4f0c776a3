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

#include "ginibre/asymptotics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ginibre/kernels.hpp"
#include "ginibre/specfun.hpp"

namespace ginibre {
namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

void check_tau_limit(double tau, const char* where) {
    if (!(tau >= 0.0 && tau < 1.0)) {
        if (tau == 1.0)
            throw DomainError(std::string(where) +
                              ": tau = 1 is the symmetric limit; the scaled tau -> 1 regime is "
                              "covered by the weak_* limits");
        throw DomainError(std::string(where) + ": tau must lie in [0,1)");
    }
}

void check_alpha(double alpha, const char* where) {
    if (!(alpha > 0.0)) throw DomainError(std::string(where) + ": alpha must be > 0");
}

double weak_tau(int n, double alpha, const char* where) {
    if (n < 2 || n % 2 != 0) throw DomainError(std::string(where) + ": N must be even and >= 2");
    check_alpha(alpha, where);
    const double tau = 1.0 - alpha * alpha / n;
    if (!(tau >= 0.0)) throw DomainError(std::string(where) + ": require alpha^2 <= N");
    return tau;
}

}  // namespace

void EdgeFrame::check() const {
    if (n < 1) throw DomainError("EdgeFrame: N must be >= 1");
    check_tau_limit(tau, "EdgeFrame");
}

double EdgeFrame::edge() const {
    check();
    return (1.0 + tau) * std::sqrt(static_cast<double>(n));
}

double EdgeFrame::offset(double x) const { return x - edge(); }

double EdgeFrame::global_coordinate(double off) const { return edge() + off; }

bool SupportEllipse::contains(std::complex<double> z, double inflation) const {
    if (!(a * inflation > 0.0) || !(b * inflation > 0.0))
        throw DomainError("SupportEllipse: axes must be positive");
    const double u = z.real() / (a * inflation);
    const double v = z.imag() / (b * inflation);
    return u * u + v * v <= 1.0;
}

SupportEllipse support_ellipse(int n, double tau) {
    if (n < 1) throw DomainError("support_ellipse: N must be >= 1");
    check_tau_limit(tau, "support_ellipse");
    const double root = std::sqrt(static_cast<double>(n));
    return {root * (1.0 + tau), root * (1.0 - tau)};
}

double bulk_real_density(double tau) {
    check_tau_limit(tau, "bulk_real_density");
    return 1.0 / std::sqrt(2.0 * M_PI * (1.0 - tau * tau));
}

double edge_real_density(double offset, double tau) {
    check_tau_limit(tau, "edge_real_density");
    const double s2 = 1.0 - tau * tau;
    const double s = std::sqrt(s2);
    return (0.5 * (1.0 - std::erf(std::sqrt(2.0) * offset / s)) +
            std::exp(-offset * offset / s2) / (2.0 * std::sqrt(2.0)) *
                (1.0 + std::erf(offset / s))) /
           std::sqrt(2.0 * M_PI * s2);
}

double bulk_sr_limit(double x, double y, double tau) {
    check_tau_limit(tau, "bulk_sr_limit");
    const double s2 = 1.0 - tau * tau;
    return std::exp(-(x - y) * (x - y) / (2.0 * s2)) / std::sqrt(2.0 * M_PI * s2);
}

// Prefactor (w-z)/(2 sqrt(2 pi) (1-tau^2)^{3/2}): evaluating the Gaussian
// smearing integral of the tau = 0 limit in closed form gives the power 3/2,
// which is confirmed by the finite-size kernel (the truncation error is
// geometric, so N = 50 already agrees to machine precision) and by the
// complex bulk density closing to the elliptic-law value 1/(pi (1-tau^2)).
std::complex<double> bulk_sc_limit(std::complex<double> w, std::complex<double> z, double tau) {
    check_tau_limit(tau, "bulk_sc_limit");
    const double s2 = 1.0 - tau * tau;
    return (w - z) / (2.0 * std::sqrt(2.0 * M_PI) * s2 * std::sqrt(s2)) *
           std::exp(-(z - w) * (z - w) / (2.0 * s2));
}

std::complex<double> bulk_sc_limit_raw(std::complex<double> w, std::complex<double> z,
                                       double tau) {
    check_tau_limit(tau, "bulk_sc_limit_raw");
    const double s2 = 1.0 - tau * tau;
    return (w - z) / (2.0 * std::sqrt(2.0 * M_PI) * s2 * std::sqrt(s2)) *
           std::exp(-tau / (2.0 * s2) * (z * z + w * w) + w * z / s2);
}

double weak_sr(double x, double y, double alpha) {
    check_alpha(alpha, "weak_sr");
    const double d = x - y;
    return integrate(
        [&](double u) { return std::exp(-alpha * alpha * u * u) * std::cos(M_PI * u * d); }, 0.0,
        1.0);
}

std::complex<double> weak_sc(std::complex<double> w, std::complex<double> z, double alpha) {
    check_alpha(alpha, "weak_sc");
    const std::complex<double> d = w - z;
    auto f = [&](double u) {
        return u * std::exp(-alpha * alpha * u * u) * std::sin(M_PI * u * d);
    };
    const double re = integrate([&](double u) { return f(u).real(); }, 0.0, 1.0);
    const double im = integrate([&](double u) { return f(u).imag(); }, 0.0, 1.0);
    return 0.5 * M_PI * std::complex<double>(re, im);
}

double weak_complex_weight(double y, double alpha) {
    check_alpha(alpha, "weak_complex_weight");
    return std::erfc(M_PI * y / alpha);
}

double weak_sr_finite(int n, double alpha, double x, double y) {
    const double tau = weak_tau(n, alpha, "weak_sr_finite");
    KernelContext ctx(n, tau);
    const double scale = M_PI / std::sqrt(static_cast<double>(n));
    return scale * s_r_high(ctx, scale * x, scale * y);
}

double weak_sc_finite(int n, double alpha, double x, double y) {
    const double tau = weak_tau(n, alpha, "weak_sc_finite");
    const double scale = M_PI / std::sqrt(static_cast<double>(n));
    const HighFloat tau_h(tau);
    const HighFloat xv(scale * x), yv(scale * y);
    // Normalized polynomials p_k = C_k/sqrt(k!), no weight (the raw kernel is
    // wanted here); the scaled arguments are O(1), so p_k stays bounded.
    std::vector<HighFloat> px(static_cast<size_t>(n)), py(static_cast<size_t>(n));
    px[0] = 1;
    py[0] = 1;
    px[1] = xv;
    py[1] = yv;
    for (int k = 1; k + 1 < n; ++k) {
        const HighFloat a = sqrt(HighFloat(k + 1));
        const HighFloat b = tau_h * sqrt(HighFloat(k) / HighFloat(k + 1));
        px[static_cast<size_t>(k) + 1] = xv * px[static_cast<size_t>(k)] / a -
                                         b * px[static_cast<size_t>(k) - 1];
        py[static_cast<size_t>(k) + 1] = yv * py[static_cast<size_t>(k)] / a -
                                         b * py[static_cast<size_t>(k) - 1];
    }
    HighFloat sum = 0;
    for (int j = 0; j <= n - 2; ++j)
        sum += sqrt(HighFloat(j + 1)) * (px[static_cast<size_t>(j) + 1] * py[static_cast<size_t>(j)] -
                                         px[static_cast<size_t>(j)] * py[static_cast<size_t>(j) + 1]);
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    const HighFloat value = sum / (2 * (1 + tau_h) * sqrt(2 * pi));
    return scale * scale * static_cast<double>(value);
}

}  // namespace ginibre
