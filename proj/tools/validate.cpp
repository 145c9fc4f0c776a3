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

// Cross-validation checks behind `ginibre validate`.  These mirror the
// release-gate suite in tests/test_acceptance.cpp with the same pinned
// tolerances; each entry reports the measured figure so a failure is
// diagnosable from the JSON alone.

#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "ginibre/asymptotics.hpp"
#include "ginibre/errors.hpp"
#include "ginibre/exactprob.hpp"
#include "ginibre/kernels.hpp"
#include "ginibre/pfaff.hpp"
#include "ginibre/sampler.hpp"
#include "ginibre/skewop.hpp"
#include "ginibre/specfun.hpp"

namespace ginibre::tools {
namespace {

using cplx = std::complex<double>;

const double kInf = std::numeric_limits<double>::infinity();

void add_gap(std::vector<CheckResult>& out, const std::string& suite, const std::string& check,
             double actual, double tolerance) {
    out.push_back({suite, check, 0.0, actual, tolerance, std::abs(actual) <= tolerance});
}

void add_flag(std::vector<CheckResult>& out, const std::string& suite, const std::string& check,
              bool pass) {
    out.push_back({suite, check, 1.0, pass ? 1.0 : 0.0, 0.0, pass});
}

void check_pfaff(std::vector<CheckResult>& out) {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    double worst = 0.0;
    for (int c = 0; c < 100; ++c) {
        const int dim = 2 * (c % 6 + 1);
        Eigen::MatrixXd m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) m(i, j) = uniform(rng);
        Eigen::MatrixXd a = 0.5 * (m - m.transpose());
        const double pf = pfaffian(SkewMatrix(a)).to_double();
        const double det = a.determinant();
        worst = std::max(worst, std::abs(pf * pf - det) / std::max(1.0, std::abs(det)));
    }
    add_gap(out, "pfaff", "pf-squared-equals-det", worst, 1e-9);

    // det(zeta A + B) for 3x3 inputs against the multilinear cofactor
    // expansion (c0 = det B, c3 = det A, c1/c2 sums over single-column swaps).
    const double a3[3][3] = {{2, -1, 0}, {1, 3, -2}, {0, 1, 1}};
    const double b3[3][3] = {{1, 2, -1}, {0, 1, 3}, {2, -1, 1}};
    auto det3 = [](const double m3[3][3]) {
        return m3[0][0] * (m3[1][1] * m3[2][2] - m3[1][2] * m3[2][1]) -
               m3[0][1] * (m3[1][0] * m3[2][2] - m3[1][2] * m3[2][0]) +
               m3[0][2] * (m3[1][0] * m3[2][1] - m3[1][1] * m3[2][0]);
    };
    double expect[4] = {det3(b3), 0.0, 0.0, det3(a3)};
    for (int col = 0; col < 3; ++col) {
        double swap_in_a[3][3], swap_in_b[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                swap_in_b[i][j] = (j == col) ? a3[i][j] : b3[i][j];
                swap_in_a[i][j] = (j == col) ? b3[i][j] : a3[i][j];
            }
        expect[1] += det3(swap_in_b);
        expect[2] += det3(swap_in_a);
    }
    Eigen::MatrixXd ea(3, 3), eb(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ea(i, j) = a3[i][j];
            eb(i, j) = b3[i][j];
        }
    const std::vector<ScaledValue> coef = det_poly_in_zeta(ea, eb);
    double worst_zeta = 0.0;
    for (int i = 0; i < 4; ++i)
        worst_zeta = std::max(worst_zeta, std::abs(coef[i].to_double() - expect[i]) /
                                              std::max(1.0, std::abs(expect[i])));
    add_gap(out, "pfaff", "zeta-coefficients-vs-cofactor-oracle", worst_zeta, 1e-9);
}

void check_skewop(std::vector<CheckResult>& out) {
    double worst_off = 0.0, worst_diag = 0.0;
    for (double tau : {0.0, 0.25, 0.5, 0.9}) {
        SkewOPFamily family(tau, 12);
        const double r_max = r_norm(family, 5).to_double();
        std::vector<Polynomial> r(12);
        for (int k = 0; k < 12; ++k) r[k] = family.r_polynomial(k);
        for (int a = 0; a < 12; ++a)
            for (int b = a + 1; b < 12; ++b) {
                const double v = inner_skew(r[a], r[b], tau);
                if (a % 2 == 0 && b == a + 1) {
                    const double rn = r_norm(family, a / 2).to_double();
                    worst_diag = std::max(worst_diag, std::abs(v - rn) / rn);
                } else {
                    worst_off = std::max(worst_off, std::abs(v) / r_max);
                }
            }
    }
    add_gap(out, "skewop", "skew-orthogonality-off-pairs", worst_off, 1e-8);
    add_gap(out, "skewop", "skew-norms-vs-factorial-form", worst_diag, 1e-8);

    double worst_m1 = 0.0;
    for (double tau : {0.0, 0.5})
        for (int j = 0; j <= 4; ++j)
            for (int k = 0; k <= 4; ++k)
                worst_m1 = std::max(worst_m1, verify_m1(j, k, tau).residual);
    add_gap(out, "skewop", "odd-even-inner-product-table", worst_m1, 1e-7);
}

void check_exactprob(std::vector<CheckResult>& out) {
    out.push_back({"exactprob", "p22-at-tau0", 1.0 / std::sqrt(2.0),
                   pkn_table(2, 0.0).probability(2), 1e-12, false});
    out.back().pass = std::abs(out.back().actual - out.back().expected) <= out.back().tolerance;

    double worst_pnn = 0.0, worst_sum = 0.0;
    for (int n : {2, 4, 6, 8})
        for (double tau : {0.0, 0.3, 0.7}) {
            const double expect = p_all_real(n, tau);
            worst_pnn = std::max(worst_pnn,
                                 std::abs(pkn_table(n, tau).probability(n) - expect) / expect);
        }
    for (int n = 2; n <= 12; n += 2)
        for (double tau : {0.0, 0.3, 0.7})
            worst_sum = std::max(worst_sum, std::abs(pkn_table(n, tau).sum_residual));
    add_gap(out, "exactprob", "all-real-probability-closed-form", worst_pnn, 1e-10);
    add_gap(out, "exactprob", "probability-normalization", worst_sum, 1e-10);
}

void check_sampler(std::vector<CheckResult>& out) {
    double worst_z = 0.0;
    for (int n : {2, 4, 6})
        for (double tau : {0.0, 0.5}) {
            const PknTable exact = pkn_table(n, tau);
            EnsembleParams params;
            params.n = n;
            params.tau = tau;
            params.seed = 20260823;
            params.draws = 100000;
            const EmpiricalStats stats = empirical_pkn(params);
            const double draws = static_cast<double>(params.draws);
            double mean = 0.0, second = 0.0;
            for (size_t i = 0; i < exact.p.size(); ++i) {
                const int k = 2 * static_cast<int>(i);
                const double p = exact.p[i];
                mean += k * p;
                second += static_cast<double>(k) * k * p;
                const double se = std::sqrt(p * (1.0 - p) / draws);
                worst_z = std::max(worst_z, std::abs(stats.real_counts[i].p_hat - p) / se);
            }
            const double se_mean = std::sqrt((second - mean * mean) / draws);
            worst_z = std::max(worst_z, std::abs(stats.mean_real_count - mean) / se_mean);
        }
    add_gap(out, "sampler", "count-distribution-vs-exact-3se", worst_z, 3.0);

    const int n = 64;
    const SupportEllipse support = support_ellipse(n, 0.5);
    EnsembleParams params;
    params.n = n;
    params.tau = 0.5;
    params.seed = 7;
    params.draws = 200;
    long inside = 0, total = 0;
    for (int d = 0; d < params.draws; ++d) {
        const SpectrumSample sample = eigen_spectrum(sample_matrix(params, d));
        for (double x : sample.real) {
            total += 1;
            inside += support.contains(cplx(x, 0.0), 1.1) ? 1 : 0;
        }
        for (cplx z : sample.complex_upper) {
            total += 2;
            inside += support.contains(z, 1.1) ? 2 : 0;
        }
    }
    const double fraction = static_cast<double>(inside) / static_cast<double>(total);
    out.push_back({"sampler", "support-ellipse-containment", 1.0, fraction, 0.01,
                   fraction >= 0.99});
}

void check_kernels(std::vector<CheckResult>& out) {
    QuadratureSpec spec;
    double worst_mass = 0.0;
    for (int n : {2, 4, 6})
        for (double tau : {0.0, 0.5}) {
            KernelContext ctx(n, tau);
            const double lim = std::sqrt(static_cast<double>(n)) * (1.0 + tau) + 9.0;
            const double real_mass =
                integrate([&](double x) { return s_r(ctx, x, x); }, -lim, lim, spec);
            QuadratureSpec loose;
            loose.rel_tol = 1e-8;
            const double ymax = std::sqrt(static_cast<double>(n)) * (1.0 - tau) + 9.0;
            auto inner = [&](double y) {
                return integrate([&](double x) { return rho_c(ctx, {cplx(x, y)}); }, -lim, lim,
                                 loose);
            };
            const double pair_mass = integrate(inner, 2e-8, ymax, loose);
            worst_mass = std::max(worst_mass, std::abs(real_mass + 2.0 * pair_mass - n) / n);
        }
    add_gap(out, "kernels", "eigenvalue-count-sum-rule", worst_mass, 1e-6);

    double worst_bulk = 0.0;
    bool monotone = true;
    for (double tau : {0.0, 0.5}) {
        const double limit = bulk_real_density(tau);
        const double floor_gap = 64.0 * std::numeric_limits<double>::epsilon() * limit;
        double previous = kInf;
        for (int n : {50, 100, 200}) {
            KernelContext ctx(n, tau);
            const double gap = std::abs(s_r(ctx, 0.0, 0.0) - limit);
            monotone = monotone && (gap <= previous || gap <= floor_gap);
            previous = gap;
            if (n == 200) worst_bulk = std::max(worst_bulk, gap / limit);
        }
    }
    add_gap(out, "kernels", "bulk-density-at-origin-N200", worst_bulk, 0.005);
    add_flag(out, "kernels", "bulk-density-gap-non-increasing", monotone);
}

void check_asymptotics(std::vector<CheckResult>& out) {
    for (double tau : {0.0, 0.5}) {
        KernelContext ctx(200, tau);
        EdgeFrame frame{200, tau};
        double sup_diff = 0.0, sup_lim = 0.0;
        for (int i = 0; i <= 120; ++i) {
            const double offset = -3.0 + 0.05 * i;
            const double g = frame.global_coordinate(offset);
            const double lim = edge_real_density(offset, tau);
            sup_diff = std::max(sup_diff, std::abs(s_r(ctx, g, g) - lim));
            sup_lim = std::max(sup_lim, lim);
        }
        add_gap(out, "asymptotics",
                tau == 0.0 ? "edge-profile-sup-gap-tau0-N200" : "edge-profile-sup-gap-tau0.5-N200",
                sup_diff / sup_lim, 0.03);
    }

    double worst_reduction = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double offset = -3.0 + 6.0 * i / 99.0;
        const double direct =
            (0.5 * std::erfc(std::sqrt(2.0) * offset) +
             std::exp(-offset * offset) / (2.0 * std::sqrt(2.0)) * (1.0 + std::erf(offset))) /
            std::sqrt(2.0 * M_PI);
        worst_reduction =
            std::max(worst_reduction, std::abs(edge_real_density(offset, 0.0) - direct));
    }
    add_gap(out, "asymptotics", "edge-tau0-closed-form-reduction", worst_reduction, 1e-14);

    double worst_identity = 0.0;
    for (double tau : {0.3, 0.8}) {
        const double s = std::sqrt(1.0 - tau * tau);
        for (int i = 0; i < 50; ++i) {
            const double x = -3.0 + 6.0 * i / 49.0;
            worst_identity =
                std::max(worst_identity,
                         std::abs(edge_real_density(x, tau) - edge_real_density(x / s, 0.0) / s));
            worst_identity = std::max(worst_identity, std::abs(bulk_sr_limit(x, 0.4, tau) -
                                                               bulk_sr_limit(x / s, 0.4 / s, 0.0) / s));
            const cplx w(0.5 * x, 0.6), z(-x / 3.0, 0.2);
            worst_identity = std::max(
                worst_identity, std::abs(bulk_sc_limit(w, z, tau) -
                                         bulk_sc_limit(w / s, z / s, 0.0) / (s * s)));
        }
    }
    add_gap(out, "asymptotics", "rescaling-universality-identities", worst_identity, 1e-12);

    auto sup_gap = [](int n, double alpha, bool complex_kernel, double& sup_lim) {
        double sup_diff = 0.0;
        sup_lim = 0.0;
        for (int i = 0; i <= 24; ++i) {
            const double d = -3.0 + 0.25 * i;
            const double x = 0.5 * d, y = -0.5 * d;
            const double lim = complex_kernel ? weak_sc(cplx(x, 0.0), cplx(y, 0.0), alpha).real()
                                              : weak_sr(x, y, alpha);
            const double fin =
                complex_kernel ? weak_sc_finite(n, alpha, x, y) : weak_sr_finite(n, alpha, x, y);
            sup_diff = std::max(sup_diff, std::abs(fin - lim));
            sup_lim = std::max(sup_lim, std::abs(lim));
        }
        return sup_diff;
    };
    double worst_weak = 0.0;
    bool weak_ok = true;
    for (double alpha : {0.5, 1.0, 2.0})
        for (bool complex_kernel : {false, true}) {
            double sup_lim = 0.0;
            const double ratio = sup_gap(400, alpha, complex_kernel, sup_lim) / sup_lim;
            worst_weak = std::max(worst_weak, ratio);
            if (ratio > 0.02) {
                // Fallback: the sup gap must decrease monotonically in N.
                const double g100 = sup_gap(100, alpha, complex_kernel, sup_lim);
                const double g200 = sup_gap(200, alpha, complex_kernel, sup_lim);
                const double g400 = sup_gap(400, alpha, complex_kernel, sup_lim);
                weak_ok = weak_ok && g400 < g200 && g200 < g100;
            }
        }
    out.push_back({"asymptotics", "weak-limit-scaled-kernels-N400", 0.0, worst_weak, 0.02,
                   weak_ok});
}

}  // namespace

std::vector<CheckResult> run_validation(const std::string& suite) {
    const bool all = suite.empty() || suite == "all";
    bool known = all;
    std::vector<CheckResult> out;
    if (all || suite == "pfaff") check_pfaff(out), known = true;
    if (all || suite == "skewop") check_skewop(out), known = true;
    if (all || suite == "exactprob") check_exactprob(out), known = true;
    if (all || suite == "sampler") check_sampler(out), known = true;
    if (all || suite == "kernels") check_kernels(out), known = true;
    if (all || suite == "asymptotics") check_asymptotics(out), known = true;
    if (!known)
        throw DomainError("validate: unknown suite '" + suite +
                          "' (expected one of: all, pfaff, skewop, exactprob, sampler, kernels, "
                          "asymptotics)");
    return out;
}

}  // namespace ginibre::tools
