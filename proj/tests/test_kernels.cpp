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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "ginibre/exactprob.hpp"
#include "ginibre/kernels.hpp"
#include "ginibre/sampler.hpp"
#include "ginibre/skewop.hpp"
#include "ginibre/specfun.hpp"

using namespace ginibre;
using cplx = std::complex<double>;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Quadrature evaluation of Phi_k(x) = int sgn(x-y) R_k(y) w(y) dy straight
// from the defining integral; independent of the recurrence the library uses.
double phi_oracle(const KernelContext& ctx, int k, double x) {
    const double tau = ctx.tau();
    const SkewOPFamily& fam = ctx.family();
    QuadratureSpec spec;
    GaussianBound bound{1.0 + tau, 0.0, k};
    auto f = [&](double y) { return r_poly(fam, k, y) * std::exp(-y * y / (2.0 * (1.0 + tau))); };
    return integrate(f, -kInf, x, spec, bound) - integrate(f, x, kInf, spec, bound);
}

// Skew-orthogonal summation form of the real-real kernel, built only from
// quadrature Phi's, the polynomial evaluations, and the norms r_k.
double s_r_oracle(const KernelContext& ctx, double x, double y) {
    const double tau = ctx.tau();
    const SkewOPFamily& fam = ctx.family();
    const double wy = std::exp(-y * y / (2.0 * (1.0 + tau)));
    double sum = 0.0;
    for (int k = 0; k < ctx.n() / 2; ++k) {
        const double uk = ctx.r_norm(k).to_double();
        sum += (phi_oracle(ctx, 2 * k, x) * r_poly(fam, 2 * k + 1, y) -
                phi_oracle(ctx, 2 * k + 1, x) * r_poly(fam, 2 * k, y)) /
               uk;
    }
    return wy * sum;
}

// Same summation form for the weighted complex kernel, via the complex
// polynomial evaluations.
cplx s_c_hat_oracle(const KernelContext& ctx, cplx w, cplx z) {
    const double tau = ctx.tau();
    const SkewOPFamily& fam = ctx.family();
    const cplx weight = std::exp(-(w * w + z * z) / (2.0 * (1.0 + tau)));
    cplx sum(0.0, 0.0);
    for (int k = 0; k < ctx.n() / 2; ++k) {
        const double uk = ctx.r_norm(k).to_double();
        sum += (r_poly(fam, 2 * k + 1, w) * r_poly(fam, 2 * k, z) -
                r_poly(fam, 2 * k, w) * r_poly(fam, 2 * k + 1, z)) /
               uk;
    }
    return weight * sum;
}

double real_axis_mass(const KernelContext& ctx, double rel_tol = 1e-10) {
    QuadratureSpec spec;
    spec.rel_tol = rel_tol;
    const double lim = std::sqrt(static_cast<double>(ctx.n())) * (1.0 + ctx.tau()) + 9.0;
    return integrate([&](double x) { return s_r(ctx, x, x); }, -lim, lim, spec);
}

// Mean number of complex-conjugate pairs: the plane integral of the one-point
// complex density over the upper half plane.  The strip y < 2e-8 is excluded
// (the density vanishes linearly at the axis, so its mass is ~1e-14).
double complex_plane_mass(const KernelContext& ctx) {
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    const double xmax = std::sqrt(static_cast<double>(ctx.n())) * (1.0 + ctx.tau()) + 9.0;
    const double ymax = std::sqrt(static_cast<double>(ctx.n())) * (1.0 - ctx.tau()) + 9.0;
    auto inner = [&](double y) {
        return integrate([&](double x) { return rho_c(ctx, {cplx(x, y)}); }, -xmax, xmax, spec);
    };
    return integrate(inner, 2e-8, ymax, spec);
}

}  // namespace

TEST_CASE("phi matches its defining integral and closed forms") {
    for (double tau : {0.0, 0.6}) {
        KernelContext ctx(8, tau);
        // Phi_0 integrates the bare weight.
        for (double x : {-1.5, 0.0, 0.9}) {
            const double expect =
                std::sqrt(2.0 * M_PI * (1.0 + tau)) * std::erf(x / std::sqrt(2.0 * (1.0 + tau)));
            CHECK(std::abs(phi(ctx, 0, x) - expect) < 1e-13 * (1.0 + std::abs(expect)));
        }
        CHECK(std::abs(phi(ctx, 0, 0.0)) < 1e-15);
        for (int k = 0; k <= 5; ++k)
            for (double x : {-1.1, 0.4, 2.0}) {
                const double expect = phi_oracle(ctx, k, x);
                CHECK(std::abs(phi(ctx, k, x) - expect) < 1e-9 * (1.0 + std::abs(expect)));
            }
        // Parity: even-index Phi is odd in x, odd-index Phi is even.
        CHECK(phi(ctx, 2, -1.3) == doctest::Approx(-phi(ctx, 2, 1.3)).epsilon(1e-12));
        CHECK(phi(ctx, 3, -1.3) == doctest::Approx(phi(ctx, 3, 1.3)).epsilon(1e-12));
        // Far-right limits: odd-index Phi's tend to 0 (odd integrand over the
        // line), even-index ones to the full-line moment of C_k.
        CHECK(std::abs(phi(ctx, 1, 30.0)) < 1e-100);
        CHECK(phi(ctx, 2, 30.0) ==
              doctest::Approx(std::sqrt(2.0 * M_PI * (1.0 + tau))).epsilon(1e-12));
    }
}

TEST_CASE("kernel context exposes the skew norms") {
    KernelContext ctx(8, 0.3);
    double factorial = 1.0;
    for (int k = 0; k < 4; ++k) {
        if (k > 0) factorial *= (2.0 * k - 1.0) * (2.0 * k);
        const double expect = factorial * 2.0 * std::sqrt(2.0 * M_PI) * 1.3;
        CHECK(ctx.r_norm(k).to_double() == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ctx.r_norm(4), DomainError);
    CHECK_THROWS_AS(ctx.r_norm(-1), DomainError);
}

TEST_CASE("s_r agrees with the skew-orthogonal summation form") {
    struct Case {
        int n;
        double tau, x, y;
    };
    const Case cases[] = {
        {6, 0.0, 0.3, -0.8}, {6, 0.0, -1.2, 1.5}, {6, 0.5, 0.3, -0.8},
        {6, 0.5, 2.0, 2.2},  {12, 0.3, 0.7, -0.4}, {12, 0.3, -2.5, 1.1},
    };
    for (const Case& c : cases) {
        KernelContext ctx(c.n, c.tau);
        const double expect = s_r_oracle(ctx, c.x, c.y);
        CHECK(std::abs(s_r(ctx, c.x, c.y) - expect) < 1e-9 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("s_r_high matches the double path at moderate size") {
    KernelContext ctx(12, 0.5);
    for (double x : {-1.8, 0.3, 2.1})
        for (double y : {-0.6, 1.4}) {
            const double hi = s_r_high(ctx, x, y);
            CHECK(std::abs(s_r(ctx, x, y) - hi) < 1e-12 * (std::abs(hi) + 1e-30));
        }
}

TEST_CASE("d_r differentiates s_r") {
    struct Case {
        int n;
        double tau, x, y;
    };
    const Case cases[] = {{6, 0.3, 0.4, 1.0}, {6, 0.3, -1.3, 0.2}, {8, 0.0, 0.0, 0.5}};
    for (const Case& c : cases) {
        KernelContext ctx(c.n, c.tau);
        const double h = 1e-5;
        // Central difference: truncation error ~ h^2 |S'''| / 6 ~ 1e-10.
        const double fd = (s_r(ctx, c.x + h, c.y) - s_r(ctx, c.x - h, c.y)) / (2.0 * h);
        const double d = d_r(ctx, c.x, c.y);
        CHECK(std::abs(d - fd) < 1e-6 * (1.0 + std::abs(d)));
        CHECK(std::abs(d_r(ctx, c.x, c.y) + d_r(ctx, c.y, c.x)) < 1e-12 * (1.0 + std::abs(d)));
    }
    KernelContext ctx(6, 0.3);
    CHECK(std::abs(d_r(ctx, 1.1, 1.1)) < 1e-13);
}

TEST_CASE("i_tilde_r reproduces the integrated kernel") {
    for (double tau : {0.0, 0.6}) {
        for (int n : {4, 8}) {
            KernelContext ctx(n, tau);
            QuadratureSpec spec;
            for (auto [x, y] : {std::pair<double, double>{-0.7, 1.3},
                                std::pair<double, double>{0.4, -1.9},
                                std::pair<double, double>{1.1, 2.0}}) {
                const double lo = std::min(x, y), hi = std::max(x, y);
                double integral = integrate([&](double z) { return s_r(ctx, x, z); }, lo, hi, spec);
                if (y < x) integral = -integral;
                const double expect = 0.5 * ((y > x) - (y < x)) - integral;
                CHECK(std::abs(i_tilde_r(ctx, x, y) - expect) < 1e-9);
                CHECK(i_tilde_r(ctx, x, y) == -i_tilde_r(ctx, y, x));  // exact by construction
            }
            CHECK(i_tilde_r(ctx, 0.8, 0.8) == 0.0);
        }
    }
}

TEST_CASE("rho_r one-point density and pair correlations") {
    KernelContext ctx(6, 0.3);
    for (double x : {-1.1, 0.2, 1.7})
        CHECK(rho_r(ctx, {x}) == doctest::Approx(s_r(ctx, x, x)).epsilon(1e-13));

    // Pair correlation is symmetric under point exchange and nonnegative.
    const double r2 = rho_r(ctx, {0.2, 1.1});
    CHECK(r2 == doctest::Approx(rho_r(ctx, {1.1, 0.2})).epsilon(1e-10));
    CHECK(r2 > 0.0);

    // Linear level repulsion: rho_2(x, x+t) ~ c t as t -> 0.
    const double x0 = 0.2;
    const double near = rho_r(ctx, {x0, x0 + 1e-4});
    const double far = rho_r(ctx, {x0, x0 + 1e-2});
    CHECK(near > -1e-12);
    CHECK(near / 1e-4 == doctest::Approx(far / 1e-2).epsilon(0.1));
    CHECK(near < 1e-3);
}

TEST_CASE("integrated one-point density equals the exact mean real count") {
    CHECK(real_axis_mass(KernelContext(2, 0.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    for (int n : {2, 4, 8})
        for (double tau : {0.0, 0.5}) {
            KernelContext ctx(n, tau);
            CHECK(real_axis_mass(ctx) ==
                  doctest::Approx(mean_real_count_closed(n, tau)).epsilon(1e-7));
        }
}

TEST_CASE("rho_r1_profile matches pointwise evaluation and decays off support") {
    KernelContext ctx(16, 0.5);
    const std::vector<double> grid = {-2.0, 0.0, 1.3, 9.0, 12.0};
    const std::vector<double> profile = rho_r1_profile(ctx, grid);
    REQUIRE(profile.size() == grid.size());
    for (size_t i = 0; i < grid.size(); ++i) CHECK(profile[i] == s_r(ctx, grid[i], grid[i]));
    // The tail beyond the spectrum edge (1+tau) sqrt(N) = 6 decays with a
    // single weight factor exp(-x^2/2(1+tau)); by x = 12 it is < 1e-8.
    CHECK(profile.back() < 1e-8);
    CHECK(profile.back() >= 0.0);
    CHECK(profile[3] < 1e-3);
    CHECK(profile.back() < profile[3]);
}

TEST_CASE("bulk density plateau") {
    KernelContext free_ctx(200, 0.0);
    CHECK(std::abs(std::sqrt(2.0 * M_PI) * s_r(free_ctx, 0.0, 0.0) - 1.0) < 0.01);
    KernelContext ctx(200, 0.5);
    CHECK(std::abs(std::sqrt(2.0 * M_PI * 0.75) * s_r(ctx, 0.0, 0.0) - 1.0) < 0.01);
}

TEST_CASE("s_c closed form, antisymmetry, and summation form") {
    KernelContext free_ctx(2, 0.0);
    const cplx w(0.3, 0.4), z(-0.5, 0.2);
    const cplx expect = (w - z) / (2.0 * std::sqrt(2.0 * M_PI));
    CHECK(std::abs(s_c(free_ctx, w, z) - expect) < 1e-12 * std::abs(expect));
    CHECK(std::abs(s_c_hat(free_ctx, w, z) -
                   expect * std::exp(-(w * w + z * z) / 2.0)) < 1e-12 * std::abs(expect));

    for (int n : {4, 8})
        for (double tau : {0.3, 0.7}) {
            KernelContext ctx(n, tau);
            const cplx a(0.6, 0.9), b(-0.4, 0.35);
            CHECK(s_c_hat(ctx, a, b) == -s_c_hat(ctx, b, a));  // exact by construction
            CHECK(s_c_hat(ctx, a, a) == cplx(0.0, 0.0));
            const cplx oracle = s_c_hat_oracle(ctx, a, b);
            CHECK(std::abs(s_c_hat(ctx, a, b) - oracle) < 1e-10 * (1.0 + std::abs(oracle)));
        }
}

TEST_CASE("s_c matches the Gaussian smearing of the tau = 0 kernel") {
    const int n = 4;
    const double tau = 0.5;
    KernelContext ctx(n, tau);
    const cplx w(0.4, 0.3), z(-0.2, 0.5);
    // The tau = 0 kernel of the same size, smeared by independent Gaussians
    // along the imaginary direction, reproduces the tau-deformed kernel.
    auto sc0 = [&](cplx a, cplx b) {
        cplx sum(0.0, 0.0), term(1.0, 0.0);
        for (int j = 0; j <= n - 2; ++j) {
            if (j > 0) term *= a * b / static_cast<double>(j);
            sum += term;
        }
        return (a - b) / (2.0 * std::sqrt(2.0 * M_PI)) * sum;
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-9;
    const double root = std::sqrt(2.0 * tau);
    auto smeared = [&](double t1, double t2) {
        return sc0(w + cplx(0.0, root * t1), z + cplx(0.0, root * t2)) *
               std::exp(-t1 * t1 - t2 * t2);
    };
    auto inner = [&](double t1, bool real_part) {
        return integrate(
            [&](double t2) {
                const cplx v = smeared(t1, t2);
                return real_part ? v.real() : v.imag();
            },
            -8.0, 8.0, spec);
    };
    const double re = integrate([&](double t1) { return inner(t1, true); }, -8.0, 8.0, spec);
    const double im = integrate([&](double t1) { return inner(t1, false); }, -8.0, 8.0, spec);
    const cplx expect = cplx(re, im) / (M_PI * (1.0 + tau));
    CHECK(std::abs(s_c(ctx, w, z) - expect) < 1e-7 * (1.0 + std::abs(expect)));
}

TEST_CASE("rho_c one-point density: closed form, positivity, axis vanishing") {
    KernelContext free_ctx(2, 0.0);
    for (auto [x, y] : {std::pair<double, double>{0.3, 0.8}, std::pair<double, double>{-1.0, 0.4}}) {
        const double expect =
            std::sqrt(2.0 / M_PI) * y * std::erfc(std::sqrt(2.0) * y) * std::exp(y * y - x * x);
        CHECK(rho_c(free_ctx, {cplx(x, y)}) == doctest::Approx(expect).epsilon(1e-12));
    }

    KernelContext ctx(4, 0.3);
    for (cplx z : {cplx(0.5, 0.7), cplx(-1.2, 0.3), cplx(0.0, 1.5)})
        CHECK(rho_c(ctx, {z}) > 0.0);
    // Density vanishes linearly at the real axis.
    const double near = rho_c(ctx, {cplx(0.5, 1e-6)});
    const double twice = rho_c(ctx, {cplx(0.5, 2e-6)});
    CHECK(near > 0.0);
    CHECK(near < 1e-4);
    CHECK(twice / near == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("rho_c pair correlation is exchange-symmetric and factorizes at distance") {
    KernelContext ctx(8, 0.0);
    const cplx z1(-1.5, 0.8), z2(1.5, 0.8);
    const double r2 = rho_c(ctx, {z1, z2});
    CHECK(r2 == doctest::Approx(rho_c(ctx, {z2, z1})).epsilon(1e-10));
    CHECK(r2 > 0.0);
    const double product = rho_c(ctx, {z1}) * rho_c(ctx, {z2});
    CHECK(r2 == doctest::Approx(product).epsilon(0.01));
}

TEST_CASE("real and complex masses add up to the matrix size") {
    struct Case {
        int n;
        double tau;
    };
    for (const Case& c : {Case{2, 0.0}, Case{2, 0.5}, Case{4, 0.0}, Case{4, 0.5}, Case{6, 0.0},
                          Case{6, 0.5}}) {
        KernelContext ctx(c.n, c.tau);
        const double total = real_axis_mass(ctx, 1e-8) + 2.0 * complex_plane_mass(ctx);
        CHECK(std::abs(total - c.n) < 1e-6 * c.n);
    }
}

TEST_CASE("monte carlo spectra match the kernel densities") {
    const int n = 8;
    EnsembleParams params;
    params.n = n;
    params.tau = 0.0;
    params.seed = 20260823;
    params.draws = 100000;
    Binning binning;
    binning.real_lo = -4.0;
    binning.real_hi = 4.0;
    binning.real_bins = 16;
    binning.x_lo = -1.0;
    binning.x_hi = 1.0;
    binning.x_bins = 1;
    binning.y_lo = 0.4;
    binning.y_hi = 1.2;
    binning.y_bins = 1;
    const EmpiricalStats stats = empirical_density(params, binning, 1);

    KernelContext ctx(n, 0.0);
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    const double width = stats.real_hist.bin_width();
    for (int b = 0; b < binning.real_bins; ++b) {
        const double lo = binning.real_lo + b * width;
        const double expected =
            params.draws * integrate([&](double x) { return s_r(ctx, x, x); }, lo, lo + width, spec);
        const double sigma = std::sqrt(std::max(expected, 1.0));
        CHECK(std::abs(static_cast<double>(stats.real_hist.counts[static_cast<size_t>(b)]) -
                       expected) <= 3.0 * sigma + 10.0);
    }

    auto inner = [&](double y) {
        return integrate([&](double x) { return rho_c(ctx, {cplx(x, y)}); }, -1.0, 1.0, spec);
    };
    const double expected_pairs = params.draws * integrate(inner, 0.4, 1.2, spec);
    CHECK(std::abs(static_cast<double>(stats.complex_hist.counts[0]) - expected_pairs) <=
          3.0 * std::sqrt(expected_pairs) + 10.0);

    CHECK(std::abs(stats.mean_real_count - mean_real_count_closed(n, 0.0)) <=
          3.0 * stats.mean_real_count_std_error + 1e-12);
}

TEST_CASE("kernel domain validation") {
    CHECK_THROWS_AS((KernelContext{3, 0.2}), DomainError);
    CHECK_THROWS_AS((KernelContext{0, 0.2}), DomainError);
    CHECK_THROWS_AS((KernelContext{2, 1.0}), DomainError);
    CHECK_THROWS_AS((KernelContext{2, -0.1}), DomainError);

    KernelContext ctx(8, 0.2);
    CHECK_THROWS_AS(phi(ctx, 8, 0.0), DomainError);
    CHECK_THROWS_AS(phi(ctx, -1, 0.0), DomainError);
    CHECK_THROWS_AS(rho_r(ctx, {}), DomainError);
    CHECK_THROWS_AS(rho_r(ctx, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(rho_c(ctx, {}), DomainError);
    CHECK_THROWS_AS(rho_c(ctx, {cplx(0.0, 1e-9)}), DomainError);
    CHECK_THROWS_AS(rho_c(ctx, {cplx(0.0, -0.5)}), DomainError);
    CHECK_THROWS_AS(rho_c(ctx, {cplx(0.1, 0.5), cplx(0.1, 0.5)}), DomainError);
    CHECK_THROWS_AS(s_c(KernelContext(2, 0.0), cplx(40.0, 0.0), cplx(40.0, 0.0)), PrecisionError);

    CorrelationRequest request;
    request.real_points = {0.5, 0.5};
    CHECK_THROWS_AS(request.check(), DomainError);
}
