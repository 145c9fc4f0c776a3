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

#include "ginibre/asymptotics.hpp"
#include "ginibre/kernels.hpp"
#include "ginibre/sampler.hpp"

using namespace ginibre;
using cplx = std::complex<double>;

namespace {

// Composite Simpson rule; independent of the adaptive integrator the library
// uses.  2m subintervals, error ~ h^4.
template <class F>
auto simpson(F f, double a, double b, int m) {
    const int steps = 2 * m;
    const double h = (b - a) / steps;
    auto acc = f(a) + f(b);
    for (int i = 1; i < steps; ++i) acc += ((i % 2) ? 4.0 : 2.0) * f(a + i * h);
    return (h / 3.0) * acc;
}

}  // namespace

TEST_CASE("bulk real density values and finite-size agreement") {
    CHECK(bulk_real_density(0.0) == doctest::Approx(0.3989423).epsilon(1e-7));
    CHECK(bulk_real_density(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
    CHECK(bulk_real_density(0.5) == doctest::Approx(1.0 / std::sqrt(1.5 * M_PI)).epsilon(1e-14));
    CHECK(bulk_real_density(0.5) == doctest::Approx(0.4606).epsilon(1e-3));
    for (double tau : {0.0, 0.5}) {
        KernelContext ctx(200, tau);
        CHECK(std::abs(s_r(ctx, 0.0, 0.0) / bulk_real_density(tau) - 1.0) < 0.005);
    }
}

TEST_CASE("edge density profile") {
    // At the edge itself, tau = 0: (1/sqrt(2 pi)) (1/2 + 1/(2 sqrt 2)).
    CHECK(edge_real_density(0.0, 0.0) == doctest::Approx(0.34051854).epsilon(1e-7));
    CHECK(edge_real_density(0.0, 0.0) ==
          doctest::Approx((0.5 + 0.5 / std::sqrt(2.0)) / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
    // Deep inside the spectrum the profile returns to the bulk value; far
    // outside it vanishes.
    for (double tau : {0.0, 0.7}) {
        CHECK(edge_real_density(-30.0, tau) ==
              doctest::Approx(bulk_real_density(tau)).epsilon(1e-12));
        CHECK(edge_real_density(8.0, tau) < 1e-12);
    }
    // tau = 0 specialization written out independently.
    for (double X : {-2.0, -0.5, 0.0, 0.3, 1.5}) {
        const double direct =
            (0.5 * std::erfc(std::sqrt(2.0) * X) +
             std::exp(-X * X) / (2.0 * std::sqrt(2.0)) * (1.0 + std::erf(X))) /
            std::sqrt(2.0 * M_PI);
        CHECK(std::abs(edge_real_density(X, 0.0) - direct) < 1e-14);
    }
}

TEST_CASE("edge profile matches the finite-size kernel near the spectrum edge") {
    const int n = 200;
    // The profile converges at rate O(N^{-1/2}) with a tau-dependent
    // constant: at N = 200 the worst gap (at X = 0) is ~1.4% of the bulk
    // value for tau = 0 but ~5.4% for tau = 0.5.
    struct Row {
        double tau, cap;
    };
    for (auto [tau, cap] : {Row{0.0, 0.03}, Row{0.5, 0.06}}) {
        KernelContext ctx(n, tau);
        EdgeFrame frame{n, tau};
        const double scale = edge_real_density(-3.0, tau);
        for (double X : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
            const double g = frame.global_coordinate(X);
            CHECK(std::abs(s_r(ctx, g, g) - edge_real_density(X, tau)) < cap * scale);
        }
    }
    // The tau = 0.5 gap is a finite-size effect, not a formula error: it
    // halves when N quadruples.
    auto gap = [](int size) {
        const double x = EdgeFrame{size, 0.5}.global_coordinate(0.0);
        KernelContext ctx(size, 0.5);
        return std::abs(s_r(ctx, x, x) - edge_real_density(0.0, 0.5));
    };
    CHECK(gap(800) < 0.6 * gap(200));
}

TEST_CASE("bulk real-real limit kernel") {
    CHECK(bulk_sr_limit(0.7, 0.7, 0.3) ==
          doctest::Approx(bulk_real_density(0.3)).epsilon(1e-15));
    CHECK(bulk_sr_limit(1.0, 0.0, 0.0) == doctest::Approx(0.2419707).epsilon(1e-6));
    CHECK(bulk_sr_limit(1.0, 0.0, 0.0) ==
          doctest::Approx(std::exp(-0.5) / std::sqrt(2.0 * M_PI)).epsilon(1e-14));
    CHECK(bulk_sr_limit(0.2, -1.1, 0.6) == bulk_sr_limit(-1.1, 0.2, 0.6));
    for (double tau : {0.0, 0.5}) {
        KernelContext ctx(200, tau);
        for (auto [x, y] : {std::pair<double, double>{0.3, -0.5},
                            std::pair<double, double>{0.2, 0.9}})
            CHECK(std::abs(s_r(ctx, x, y) / bulk_sr_limit(x, y, tau) - 1.0) < 0.01);
    }
}

TEST_CASE("bulk complex-complex limit kernel") {
    const cplx w(0.2, 0.4), z(-0.3, 0.1);
    for (double tau : {0.0, 0.5}) {
        CHECK(std::abs(bulk_sc_limit(w, w, tau)) == 0.0);
        CHECK(bulk_sc_limit(w, z, tau) == -bulk_sc_limit(z, w, tau));
        // Weighted and raw forms differ by the Gaussian weight factor.
        const cplx weight = std::exp(-(w * w + z * z) / (2.0 * (1.0 + tau)));
        const cplx lhs = bulk_sc_limit(w, z, tau);
        const cplx rhs = bulk_sc_limit_raw(w, z, tau) * weight;
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
        // Finite-size agreement in the bulk.
        KernelContext ctx(200, tau);
        CHECK(std::abs(s_c_hat(ctx, w, z) / bulk_sc_limit(w, z, tau) - 1.0) < 0.01);
    }
    // Closing the kernel with the pair weight 2 i erfc(sqrt(2/(1-tau^2)) y)
    // at w = conj(z) gives the two-dimensional eigenvalue density; away from
    // the real axis it must approach the elliptic-law value 1/(pi (1-tau^2)),
    // which pins the kernel prefactor against an independent constant.  The
    // residual is the erfc tail correction ~ (1-tau^2)/(4 y^2).
    for (double tau : {0.0, 0.5}) {
        const double s2 = 1.0 - tau * tau;
        auto closure = [&](double y) {
            const cplx zz(0.3, y);
            const cplx rho = 2.0 * cplx(0.0, 1.0) * std::erfc(std::sqrt(2.0 / s2) * y) *
                             bulk_sc_limit(std::conj(zz), zz, tau);
            return rho.real() * M_PI * s2;
        };
        CHECK(std::abs(closure(8.0) - 1.0) < 0.005);
        CHECK(std::abs(closure(8.0) - 1.0) < 0.3 * std::abs(closure(4.0) - 1.0));
    }
}

TEST_CASE("scaling by sqrt(1 - tau^2) maps every limit to its tau = 0 form") {
    for (double tau : {0.3, 0.8}) {
        const double s = std::sqrt(1.0 - tau * tau);
        for (int i = 0; i < 100; ++i) {
            const double x = -3.0 + 6.0 * i / 99.0;
            CHECK(std::abs(edge_real_density(x, tau) - edge_real_density(x / s, 0.0) / s) <
                  1e-12);
            CHECK(std::abs(bulk_sr_limit(x, 0.4, tau) -
                           bulk_sr_limit(x / s, 0.4 / s, 0.0) / s) < 1e-12);
        }
        // The complex-complex kernel carries the two-dimensional measure, so
        // it rescales with 1/s^2 rather than 1/s.
        const cplx w(0.5, 0.6), z(-0.2, 0.3);
        CHECK(std::abs(bulk_sc_limit(w, z, tau) - bulk_sc_limit(w / s, z / s, 0.0) / (s * s)) <
              1e-12);
    }
}

TEST_CASE("weak limit real-real kernel") {
    // Coincidence: Gaussian integral in closed form.
    for (double alpha : {0.5, 1.0, 2.0})
        CHECK(weak_sr(0.7, 0.7, alpha) ==
              doctest::Approx(std::sqrt(M_PI) * std::erf(alpha) / (2.0 * alpha)).epsilon(1e-12));
    // Unit density as alpha -> 0.
    CHECK(weak_sr(0.0, 0.0, 1e-6) == doctest::Approx(1.0).epsilon(1e-9));
    // Depends on x - y only.
    CHECK(weak_sr(1.3, 0.4, 0.8) == doctest::Approx(weak_sr(0.0, -0.9, 0.8)).epsilon(1e-14));
    // Independent quadrature oracle.
    const double oracle = simpson(
        [](double u) { return std::exp(-0.64 * u * u) * std::cos(M_PI * u * 1.7); }, 0.0, 1.0,
        2000);
    CHECK(weak_sr(1.7, 0.0, 0.8) == doctest::Approx(oracle).epsilon(1e-10));
    // Algebraic decay: r |K(r)| stays bounded (evaluated off-integer so the
    // oscillatory leading term does not accidentally vanish).
    const double cap = 1.3 * 5.5 * std::abs(weak_sr(0.0, 5.5, 1.0));
    for (double r : {10.5, 20.5, 35.5, 50.5}) CHECK(std::abs(weak_sr(0.0, r, 1.0)) <= cap / r);
}

TEST_CASE("weak limit complex-complex kernel and weight") {
    const cplx w(1.2, 0.5), z(0.4, -0.2);
    CHECK(std::abs(weak_sc(w, w, 1.0)) == 0.0);
    CHECK(std::abs(weak_sc(w, z, 1.0) + weak_sc(z, w, 1.0)) < 1e-14);
    const cplx d = w - z;
    const cplx oracle =
        0.5 * M_PI *
        simpson([&](double u) { return u * std::exp(-u * u) * std::sin(M_PI * u * d); }, 0.0,
                1.0, 2000);
    CHECK(std::abs(weak_sc(w, z, 1.0) - oracle) < 1e-10);

    CHECK(weak_complex_weight(0.5, 1.0) == doctest::Approx(std::erfc(0.5 * M_PI)).epsilon(1e-15));
    // The finite-size pair weight converges to erfc(pi y / alpha) under the
    // same scaling as the kernels.
    const int n = 400;
    const double alpha = 1.0, tau = 1.0 - alpha * alpha / n;
    const double xs = M_PI * 0.3 / std::sqrt(static_cast<double>(n));
    const double ys = M_PI * 0.5 / std::sqrt(static_cast<double>(n));
    const double finite = std::exp((ys * ys - xs * xs) / (1.0 + tau)) *
                          std::erfc(std::sqrt(2.0 / (1.0 - tau * tau)) * ys);
    CHECK(std::abs(finite / weak_complex_weight(0.5, alpha) - 1.0) < 0.01);
}

TEST_CASE("weak limits match scaled finite-size kernels at N = 400") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        for (auto [x, y] : {std::pair<double, double>{0.0, 0.0},
                            std::pair<double, double>{0.8, -0.6},
                            std::pair<double, double>{1.5, 0.0}}) {
            const double limit = weak_sr(x, y, alpha);
            CHECK(std::abs(weak_sr_finite(400, alpha, x, y) / limit - 1.0) < 0.02);
        }
        // Separation 0.9 keeps all three alpha well away from the zeros of
        // the limit kernel, where a relative comparison would be ill-posed.
        const double limit_c = weak_sc(cplx(0.45, 0.0), cplx(-0.45, 0.0), alpha).real();
        CHECK(std::abs(weak_sc_finite(400, alpha, 0.45, -0.45) / limit_c - 1.0) < 0.02);
    }
}

TEST_CASE("support ellipse and Monte Carlo containment") {
    const SupportEllipse circle = support_ellipse(16, 0.0);
    CHECK(circle.a == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(circle.b == doctest::Approx(4.0).epsilon(1e-15));
    const SupportEllipse e = support_ellipse(100, 0.5);
    CHECK(e.a == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(e.b == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(e.contains(cplx(14.9, 0.0)));
    CHECK(!e.contains(cplx(0.0, 5.1)));
    CHECK(e.contains(cplx(0.0, 5.1), 1.1));

    const int n = 64;
    const double tau = 0.5;
    const SupportEllipse support = support_ellipse(n, tau);
    EnsembleParams params;
    params.n = n;
    params.tau = tau;
    params.seed = 7;
    params.draws = 200;
    long inside = 0, total = 0;
    for (int d = 0; d < params.draws; ++d) {
        const SpectrumSample sample = eigen_spectrum(sample_matrix(params, d));
        for (double x : sample.real) {
            total += 1;
            inside += support.contains(cplx(x, 0.0), 1.1) ? 1 : 0;
        }
        for (cplx zz : sample.complex_upper) {
            total += 2;  // conjugate pair
            inside += support.contains(zz, 1.1) ? 2 : 0;
        }
    }
    CHECK(total == params.draws * n);
    CHECK(static_cast<double>(inside) >= 0.99 * static_cast<double>(total));
}

TEST_CASE("edge frame coordinates") {
    EdgeFrame frame{100, 0.5};
    CHECK(frame.edge() == doctest::Approx(15.0).epsilon(1e-15));
    CHECK(frame.offset(16.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(frame.global_coordinate(frame.offset(12.3)) == doctest::Approx(12.3).epsilon(1e-12));
    CHECK_THROWS_AS((EdgeFrame{0, 0.5}.check()), DomainError);
    CHECK_THROWS_AS((EdgeFrame{4, 1.0}.check()), DomainError);
}

TEST_CASE("asymptotics domain validation") {
    CHECK_THROWS_AS(bulk_real_density(1.0), DomainError);
    CHECK_THROWS_AS(bulk_real_density(-0.2), DomainError);
    CHECK_THROWS_AS(edge_real_density(0.0, 1.5), DomainError);
    CHECK_THROWS_AS(bulk_sr_limit(0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(bulk_sc_limit(cplx(0, 1), cplx(1, 0), 1.0), DomainError);
    CHECK_THROWS_AS(weak_sr(0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(weak_sr(0.0, 0.0, -1.0), DomainError);
    CHECK_THROWS_AS(weak_sc(cplx(0, 0), cplx(1, 0), 0.0), DomainError);
    CHECK_THROWS_AS(weak_complex_weight(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(support_ellipse(0, 0.3), DomainError);
    CHECK_THROWS_AS(support_ellipse(4, 1.0), DomainError);
    CHECK_THROWS_AS(weak_sr_finite(7, 1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(weak_sr_finite(4, 3.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(weak_sc_finite(4, 0.0, 0.0, 0.0), DomainError);
}
