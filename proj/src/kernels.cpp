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

#include "ginibre/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ginibre/pfaff.hpp"

namespace ginibre {
namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

double real_erfc(double x) { return std::erfc(x); }
HighFloat real_erfc(const HighFloat& x) { return boost::math::erfc(x); }

template <class Real>
Real real_pi() {
    return boost::math::constants::pi<Real>();
}
template <>
double real_pi<double>() {
    return M_PI;
}

// Per-point arrays of the normalized weighted sweep, k = 0..count-1:
//   wc_k    = exp(-x^2/2(1+tau)) C_k(x) / sqrt(k!)
//   g_hat_k = G_k(x) / sqrt(k!),  G_k(x) = int_x^inf C_k(y) exp(-y^2/2(1+tau)) dy
//   phi_hat_k = Phi^C_k(x) / sqrt(k!) = m_hat_k - 2 g_hat_k
// G obeys G_{k+1} = k G_{k-1} + (1+tau) w(x) C_k(x) (integration by parts
// against the weight), seeded by erfc; the full-line moments m_hat enter only
// for even k.
template <class Real>
struct SweepData {
    std::vector<Real> wc, g_hat, phi_hat;
};

template <class Real>
SweepData<Real> sweep(int count, double tau, const Real& x) {
    using std::exp;
    using std::sqrt;
    SweepData<Real> s;
    s.wc.resize(static_cast<size_t>(count));
    s.g_hat.resize(static_cast<size_t>(count));
    s.phi_hat.resize(static_cast<size_t>(count));
    const Real one_plus(1.0 + tau);
    const Real tau_r(tau);
    const Real pi = real_pi<Real>();
    const Real w0 = exp(-x * x / (2 * one_plus));

    s.wc[0] = w0;
    if (count > 1) s.wc[1] = x * w0;
    for (int k = 1; k + 1 < count; ++k)
        s.wc[static_cast<size_t>(k) + 1] = x / sqrt(Real(k + 1)) * s.wc[static_cast<size_t>(k)] -
                                           tau_r * sqrt(Real(k) / Real(k + 1)) *
                                               s.wc[static_cast<size_t>(k) - 1];

    s.g_hat[0] = sqrt(pi * one_plus / 2) * real_erfc(x / sqrt(2 * one_plus));
    if (count > 1) s.g_hat[1] = one_plus * w0;
    for (int k = 1; k + 1 < count; ++k)
        s.g_hat[static_cast<size_t>(k) + 1] =
            sqrt(Real(k) / Real(k + 1)) * s.g_hat[static_cast<size_t>(k) - 1] +
            one_plus * s.wc[static_cast<size_t>(k)] / sqrt(Real(k + 1));

    Real m_even = sqrt(2 * pi * one_plus);
    for (int k = 0; k < count; ++k) {
        if (k >= 2 && k % 2 == 0) m_even *= sqrt(Real(k - 1) / Real(k));
        const Real moment = (k % 2 == 0) ? m_even : Real(0);
        s.phi_hat[static_cast<size_t>(k)] = moment - 2 * s.g_hat[static_cast<size_t>(k)];
    }
    return s;
}

// psi_k = sqrt(2k+1) phi_hat_{2k+1} - sqrt(2k) phi_hat_{2k-1}: the normalized
// image of Phi^R_{2k+1} scaled by r_k's factorial.
template <class Real>
Real psi(const SweepData<Real>& s, int k) {
    using std::sqrt;
    Real value = sqrt(Real(2 * k + 1)) * s.phi_hat[static_cast<size_t>(2 * k) + 1];
    if (k > 0) value -= sqrt(Real(2 * k)) * s.phi_hat[static_cast<size_t>(2 * k) - 1];
    return value;
}

template <class Real>
Real s_r_from(const SweepData<Real>& sx, const SweepData<Real>& sy, int n, double tau) {
    using std::sqrt;
    const Real pi = real_pi<Real>();
    Real sum(0);
    for (int k = 0; k <= n - 2; ++k) sum += sx.wc[static_cast<size_t>(k)] * sy.wc[static_cast<size_t>(k)];
    Real value = sum / sqrt(2 * pi);
    value += sqrt(Real(n - 1)) / (2 * sqrt(2 * pi) * Real(1.0 + tau)) *
             sy.wc[static_cast<size_t>(n) - 1] * sx.phi_hat[static_cast<size_t>(n) - 2];
    return value;
}

int checked_even_n(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("KernelContext: N must be even and >= 2");
    return n;
}

double checked_tau(double tau) {
    if (!(tau >= 0.0 && tau < 1.0)) {
        if (tau == 1.0)
            throw DomainError(
                "KernelContext: tau = 1 is the symmetric limit where the spectrum is entirely "
                "real; only tau in [0,1) is supported");
        throw DomainError("KernelContext: tau must lie in [0,1)");
    }
    return tau;
}

}  // namespace

KernelContext::KernelContext(int n, double tau, QuadratureSpec spec)
    : n_(checked_even_n(n)), tau_(checked_tau(tau)), spec_(spec), family_(tau, n) {
    spec_.check();
    r_norms_.reserve(static_cast<size_t>(n) / 2);
    for (int k = 0; k < n / 2; ++k) r_norms_.push_back(ginibre::r_norm(family_, k));
}

ScaledValue KernelContext::r_norm(int k) const {
    if (k < 0 || k >= n_ / 2) throw DomainError("KernelContext::r_norm: index out of range");
    return r_norms_[static_cast<size_t>(k)];
}

void CorrelationRequest::check() const {
    for (size_t i = 0; i < real_points.size(); ++i)
        for (size_t j = i + 1; j < real_points.size(); ++j)
            if (real_points[i] == real_points[j])
                throw DomainError("CorrelationRequest: real points must be distinct");
    for (const auto& z : complex_points)
        if (!(z.imag() > 1e-8))
            throw DomainError("CorrelationRequest: complex points must satisfy y > 1e-8");
    for (size_t i = 0; i < complex_points.size(); ++i)
        for (size_t j = i + 1; j < complex_points.size(); ++j)
            if (complex_points[i] == complex_points[j])
                throw DomainError("CorrelationRequest: complex points must be distinct");
}

double phi(const KernelContext& ctx, int k, double x) {
    if (k < 0 || k > ctx.n() - 1) throw DomainError("phi: require 0 <= k <= N-1");
    const SweepData<double> s = sweep<double>(k + 1, ctx.tau(), x);
    double root_fact = 1.0;
    for (int i = 1; i <= k; ++i) root_fact *= std::sqrt(static_cast<double>(i));
    double value = root_fact * s.phi_hat[static_cast<size_t>(k)];
    if (k % 2 == 1 && k >= 3) {
        const double root_fact_2 = root_fact / std::sqrt(static_cast<double>(k) * (k - 1));
        value -= (k - 1) * root_fact_2 * s.phi_hat[static_cast<size_t>(k) - 2];
    }
    return value;
}

double s_r(const KernelContext& ctx, double x, double y) {
    const SweepData<double> sx = sweep<double>(ctx.n(), ctx.tau(), x);
    const SweepData<double> sy = sweep<double>(ctx.n(), ctx.tau(), y);
    return s_r_from(sx, sy, ctx.n(), ctx.tau());
}

double s_r_high(const KernelContext& ctx, double x, double y) {
    const SweepData<HighFloat> sx = sweep<HighFloat>(ctx.n(), ctx.tau(), HighFloat(x));
    const SweepData<HighFloat> sy = sweep<HighFloat>(ctx.n(), ctx.tau(), HighFloat(y));
    return static_cast<double>(s_r_from(sx, sy, ctx.n(), ctx.tau()));
}

double d_r(const KernelContext& ctx, double x, double y) {
    const int n = ctx.n();
    const double tau = ctx.tau();
    const SweepData<double> sx = sweep<double>(n, tau, x);
    const SweepData<double> sy = sweep<double>(n, tau, y);
    // d/dx wc_k = sqrt(k) wc_{k-1} - x wc_k/(1+tau).
    double sum = 0.0;
    for (int k = 0; k <= n - 2; ++k) {
        double deriv = -x / (1.0 + tau) * sx.wc[static_cast<size_t>(k)];
        if (k > 0) deriv += std::sqrt(static_cast<double>(k)) * sx.wc[static_cast<size_t>(k) - 1];
        sum += deriv * sy.wc[static_cast<size_t>(k)];
    }
    double value = sum / std::sqrt(2.0 * M_PI);
    // d/dx phi_hat_{N-2} = 2 wc_{N-2}.
    value += std::sqrt(static_cast<double>(n - 1)) / (std::sqrt(2.0 * M_PI) * (1.0 + tau)) *
             sy.wc[static_cast<size_t>(n) - 1] * sx.wc[static_cast<size_t>(n) - 2];
    return value;
}

double i_tilde_r(const KernelContext& ctx, double x, double y) {
    const int n = ctx.n();
    const double tau = ctx.tau();
    const SweepData<double> sx = sweep<double>(n, tau, x);
    const SweepData<double> sy = sweep<double>(n, tau, y);
    // Integrating the summation form of S^r over [x,y] pairs the Phi's into a
    // manifestly antisymmetric combination; the sgn term carries the jump.
    double sum = 0.0;
    for (int k = 0; k < n / 2; ++k)
        sum += sx.phi_hat[static_cast<size_t>(2 * k)] * psi(sy, k) -
               psi(sx, k) * sy.phi_hat[static_cast<size_t>(2 * k)];
    const double sgn = (y > x) ? 1.0 : (y < x ? -1.0 : 0.0);
    return 0.5 * sgn - sum / (4.0 * std::sqrt(2.0 * M_PI) * (1.0 + tau));
}

double rho_r(const KernelContext& ctx, const std::vector<double>& points) {
    const int count = static_cast<int>(points.size());
    if (count < 1) throw DomainError("rho_r: at least one point required");
    CorrelationRequest request;
    request.real_points = points;
    request.check();

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * count, 2 * count);
    for (int j = 0; j < count; ++j) {
        m(2 * j, 2 * j + 1) = s_r(ctx, points[static_cast<size_t>(j)], points[static_cast<size_t>(j)]);
        m(2 * j + 1, 2 * j) = -m(2 * j, 2 * j + 1);
        for (int k = j + 1; k < count; ++k) {
            const double xj = points[static_cast<size_t>(j)];
            const double xk = points[static_cast<size_t>(k)];
            m(2 * j, 2 * k) = -i_tilde_r(ctx, xj, xk);
            m(2 * j, 2 * k + 1) = s_r(ctx, xj, xk);
            m(2 * j + 1, 2 * k) = -s_r(ctx, xk, xj);
            m(2 * j + 1, 2 * k + 1) = d_r(ctx, xj, xk);
            m(2 * k, 2 * j) = -m(2 * j, 2 * k);
            m(2 * k + 1, 2 * j) = -m(2 * j, 2 * k + 1);
            m(2 * k, 2 * j + 1) = -m(2 * j + 1, 2 * k);
            m(2 * k + 1, 2 * j + 1) = -m(2 * j + 1, 2 * k + 1);
        }
    }
    return pfaffian(SkewMatrix(m)).to_double();
}

std::vector<double> rho_r1_profile(const KernelContext& ctx, const std::vector<double>& grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    for (double x : grid) {
        const SweepData<double> s = sweep<double>(ctx.n(), ctx.tau(), x);
        out.push_back(s_r_from(s, s, ctx.n(), ctx.tau()));
    }
    return out;
}

namespace {

// Normalized complex sweep c_hat_k(w) = exp(-w^2/2(1+tau)) C_k(w)/sqrt(k!).
std::vector<std::complex<double>> complex_sweep(int count, double tau, std::complex<double> w) {
    std::vector<std::complex<double>> c(static_cast<size_t>(count));
    c[0] = std::exp(-w * w / (2.0 * (1.0 + tau)));
    if (count > 1) c[1] = w * c[0];
    for (int k = 1; k + 1 < count; ++k)
        c[static_cast<size_t>(k) + 1] =
            w / std::sqrt(static_cast<double>(k + 1)) * c[static_cast<size_t>(k)] -
            tau * std::sqrt(static_cast<double>(k) / (k + 1)) * c[static_cast<size_t>(k) - 1];
    return c;
}

}  // namespace

std::complex<double> s_c_hat(const KernelContext& ctx, std::complex<double> w,
                             std::complex<double> z) {
    const int n = ctx.n();
    const std::vector<std::complex<double>> cw = complex_sweep(n, ctx.tau(), w);
    const std::vector<std::complex<double>> cz = complex_sweep(n, ctx.tau(), z);
    std::complex<double> sum(0.0, 0.0);
    for (int j = 0; j <= n - 2; ++j)
        sum += std::sqrt(static_cast<double>(j + 1)) *
               (cw[static_cast<size_t>(j) + 1] * cz[static_cast<size_t>(j)] -
                cw[static_cast<size_t>(j)] * cz[static_cast<size_t>(j) + 1]);
    return sum / (2.0 * (1.0 + ctx.tau()) * std::sqrt(2.0 * M_PI));
}

std::complex<double> s_c(const KernelContext& ctx, std::complex<double> w,
                         std::complex<double> z) {
    const std::complex<double> exponent = (w * w + z * z) / (2.0 * (1.0 + ctx.tau()));
    if (exponent.real() > 700.0)
        throw PrecisionError("s_c: unweighted kernel overflows here; use s_c_hat");
    return s_c_hat(ctx, w, z) * std::exp(exponent);
}

double rho_c(const KernelContext& ctx, const std::vector<std::complex<double>>& points) {
    const int count = static_cast<int>(points.size());
    if (count < 1) throw DomainError("rho_c: at least one point required");
    CorrelationRequest request;
    request.complex_points = points;
    request.check();

    std::vector<std::complex<double>> args;
    args.reserve(2 * points.size());
    for (const auto& z : points) {
        args.push_back(std::conj(z));
        args.push_back(z);
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * count, 2 * count);
    for (int a = 0; a < 2 * count; ++a)
        for (int b = a + 1; b < 2 * count; ++b) {
            m(a, b) = s_c_hat(ctx, args[static_cast<size_t>(a)], args[static_cast<size_t>(b)]);
            m(b, a) = -m(a, b);
        }
    std::complex<double> value = pfaffian_complex(m);
    const double gamma = std::sqrt(2.0 / (1.0 - ctx.tau() * ctx.tau()));
    for (const auto& z : points)
        value *= std::complex<double>(0.0, 2.0) * std::erfc(gamma * z.imag());
    if (std::abs(value.imag()) > 1e-9 * std::abs(value) + 1e-300)
        throw NumericError("rho_c: imaginary residual exceeds 1e-9 relative");
    return value.real();
}

}  // namespace ginibre
