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

#include "ginibre/exactprob.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ginibre/specfun.hpp"

namespace ginibre {
namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

void check_tau(double tau, const char* where) {
    if (!(tau >= 0.0 && tau < 1.0)) {
        if (tau == 1.0)
            throw DomainError(std::string(where) +
                              ": tau = 1 is the symmetric limit where the spectrum is entirely "
                              "real (p_{N,N} = 1, mean count = N); only tau in [0,1) is supported");
        throw DomainError(std::string(where) + ": tau must lie in [0,1)");
    }
}

void check_even_n(int n, const char* where) {
    if (n < 2 || n % 2 != 0)
        throw DomainError(std::string(where) + ": matrix dimension must be even and >= 2");
}

template <class T>
T binom_t(int n, int r) {
    T b(1);
    for (int i = 1; i <= r; ++i) b = b * T(n - r + i) / T(i);
    return b;
}

// alpha_{2j-1,2k}[1] = 2^k (k-1)! sum_{p=1}^k Gamma(j+p-3/2) / (2^{p-1} (p-1)!).
template <class T>
T alpha_t(int j, int k) {
    T sum(0);
    for (int p = 1; p <= k; ++p) {
        T term = gamma_half_integer<T>(2 * (j + p) - 3);
        for (int i = 1; i < p; ++i) term /= T(2 * i);
        sum += term;
    }
    T factor(1);
    for (int i = 1; i < k; ++i) factor *= T(i);
    for (int i = 0; i < k; ++i) factor *= T(2);
    return factor * sum;
}

// I_j for odd j: ((-1)^m m!/2) (sqrt(2/(1+tau)) S_m - 1) with m = (j-1)/2 and
// S_m = sum_{p=0}^m (-rho)^p (1/2)_p / p!, rho = (1-tau)/(1+tau).
template <class T>
T i_odd_t(int j, const T& tau) {
    using std::sqrt;
    const int m = (j - 1) / 2;
    const T rho = (T(1) - tau) / (T(1) + tau);
    T s(0);
    T term(1);
    for (int p = 0; p <= m; ++p) {
        s += term;
        term *= -rho * (T(2 * p + 1) / T(2)) / T(p + 1);
    }
    T m_fact(1);
    for (int i = 1; i <= m; ++i) m_fact *= T(i);
    T result = m_fact / T(2) * (sqrt(T(2) / (T(1) + tau)) * s - T(1));
    return (m % 2 == 0) ? result : -result;
}

// I_j for every odd j <= max_j, indexed by j (even slots unused).
template <class T>
std::vector<T> i_odd_values(int max_j, const T& tau) {
    std::vector<T> table(static_cast<size_t>(max_j) + 1, T(0));
    for (int j = 1; j <= max_j; j += 2) table[static_cast<size_t>(j)] = i_odd_t<T>(j, tau);
    return table;
}

// beta_{2j-1,2k}[1] = -4 sum_{l+p odd} C(2j-2,l) C(2k-1,p) (-1)^p (-1)^{(l+p-1)/2}
//                        Gamma(j+k-1-(l+p)/2) I_{l+p}.
// The sign pair is Im(i^l (-i)^p); the Gamma argument is minimized at 1/2 for
// l = 2j-2, p = 2k-1, so the guard below cannot fire for valid (j,k).
template <class T>
T beta_from_table(int j, int k, const std::vector<T>& i_table) {
    T total(0);
    for (int l = 0; l <= 2 * j - 2; ++l) {
        for (int p = 0; p <= 2 * k - 1; ++p) {
            const int lp = l + p;
            if (lp % 2 == 0) continue;
            const int gamma_twice = 2 * (j + k - 1) - lp;
            if (gamma_twice < 1)
                throw NumericError("beta_entry: Gamma argument fell below 1/2");
            int sign = (p % 2 == 0) ? 1 : -1;
            if (((lp - 1) / 2) % 2 != 0) sign = -sign;
            total += T(sign) * binom_t<T>(2 * j - 2, l) * binom_t<T>(2 * k - 1, p) *
                     gamma_half_integer<T>(gamma_twice) * i_table[static_cast<size_t>(lp)];
        }
    }
    return T(-4) * total;
}

template <class T>
T beta_t(int j, int k, const T& tau) {
    return beta_from_table<T>(j, k, i_odd_values<T>(2 * j + 2 * k - 3, tau));
}

ScaledValue to_scaled(const HighFloat& x) {
    if (x == 0) return ScaledValue();
    int e = 0;
    const HighFloat mant = boost::multiprecision::frexp(x, &e);
    return ScaledValue(static_cast<double>(mant), static_cast<std::int64_t>(e));
}

// Base-2 log of the combinatorial prefactor
// (1+tau)^{N(N-1)/4} / (2^{N(N+1)/4} prod_{l=1}^N Gamma(l/2)).
double prefactor_log2(int n, double tau) {
    double lp2 = 0.25 * n * (n - 1) * std::log2(1.0 + tau) - 0.25 * n * (n + 1);
    for (int l = 1; l <= n; ++l) lp2 -= log_gamma(0.5 * l) / M_LN2;
    return lp2;
}

// det(zeta*alpha + beta) coefficients with every entry and all linear algebra
// carried at ~50 significant digits; mirrors det_poly_in_zeta's node scheme.
std::vector<ScaledValue> zeta_coefficients_high(int m, double tau) {
    const HighFloat tau_h(tau);
    const std::vector<HighFloat> i_table = i_odd_values<HighFloat>(4 * m - 3, tau_h);
    detail::DenseMatrix<HighFloat> alpha(m, m), beta(m, m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            alpha(r, c) = alpha_t<HighFloat>(r + 1, c + 1);
            beta(r, c) = beta_from_table<HighFloat>(r + 1, c + 1, i_table);
        }
    auto det_at = [&](double zeta) {
        detail::DenseMatrix<HighFloat> w(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) w(r, c) = HighFloat(zeta) * alpha(r, c) + beta(r, c);
        return detail::lu_det_inplace(w);
    };
    const std::vector<double> nodes = detail::zeta_nodes(m + 1);
    std::vector<HighFloat> values(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) values[i] = det_at(nodes[i]);
    std::vector<HighFloat> coef = detail::newton_coefficients(nodes, values);

    // Held-out node guards the interpolation, as in the double-precision path.
    const double z_star = 1.0 + std::cos(1.0);
    const HighFloat d_star = det_at(z_star);
    const HighFloat resid = boost::multiprecision::abs(detail::eval_poly(coef, z_star) - d_star);
    const HighFloat scale = boost::multiprecision::abs(d_star);
    if (scale > 0 && resid > HighFloat(1e-7) * scale)
        throw AccuracyError("zeta-coefficient interpolation residual exceeds tolerance",
                            static_cast<double>(d_star), static_cast<double>(resid));

    std::vector<ScaledValue> out;
    out.reserve(coef.size());
    for (const HighFloat& c : coef) out.push_back(to_scaled(c));
    return out;
}

}  // namespace

double PknTable::probability(int k) const {
    if (k < 0 || k > n || k % 2 != 0)
        throw DomainError("PknTable::probability: k must be even with 0 <= k <= N");
    return p[static_cast<size_t>(k / 2)];
}

ScaledValue alpha_entry(int j, int k) {
    if (j < 1 || k < 1) throw DomainError("alpha_entry: indices must be >= 1");
    return ScaledValue(alpha_t<double>(j, k));
}

double i_odd(int j, double tau) {
    if (j < 1 || j % 2 == 0) throw DomainError("i_odd: j must be odd and >= 1");
    check_tau(tau, "i_odd");
    return i_odd_t<double>(j, tau);
}

ScaledValue beta_entry(int j, int k, double tau) {
    if (j < 1 || k < 1) throw DomainError("beta_entry: indices must be >= 1");
    check_tau(tau, "beta_entry");
    return ScaledValue(beta_t<double>(j, k, tau));
}

int pkn_max_n(Precision precision) {
    return precision == Precision::kDouble ? 24 : 64;
}

PknTable pkn_table(int n, double tau, Precision precision) {
    check_even_n(n, "pkn_table");
    check_tau(tau, "pkn_table");
    if (n > pkn_max_n(precision))
        throw DomainError("pkn_table: N = " + std::to_string(n) + " exceeds the supported " +
                          std::to_string(pkn_max_n(precision)) +
                          (precision == Precision::kDouble
                               ? " for Precision::kDouble; use Precision::kHigh"
                               : " for Precision::kHigh"));
    const int m = n / 2;

    std::vector<ScaledValue> coef;
    if (precision == Precision::kDouble) {
        const std::vector<double> i_table = i_odd_values<double>(4 * m - 3, tau);
        Eigen::MatrixXd alpha(m, m), beta(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) {
                alpha(r, c) = alpha_t<double>(r + 1, c + 1);
                beta(r, c) = beta_from_table<double>(r + 1, c + 1, i_table);
            }
        coef = det_poly_in_zeta(alpha, beta, Precision::kDouble);
    } else {
        coef = zeta_coefficients_high(m, tau);
    }

    const ScaledValue pref = ScaledValue::from_log2(prefactor_log2(n, tau));
    PknTable table;
    table.n = n;
    table.tau = tau;
    table.p.resize(static_cast<size_t>(m) + 1);
    double sum = 0.0;
    double most_negative = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double pk = (coef[static_cast<size_t>(i)] * pref).to_double();
        table.p[static_cast<size_t>(i)] = pk;
        sum += pk;
        if (pk < most_negative) most_negative = pk;
    }
    table.sum_residual = sum - 1.0;
    if (most_negative < -1e-8 || std::abs(table.sum_residual) > 1e-8)
        throw PrecisionError(
            "pkn_table: probabilities inconsistent at N = " + std::to_string(n) +
            " (min p = " + std::to_string(most_negative) +
            ", sum - 1 = " + std::to_string(table.sum_residual) +
            "); retry with Precision::kHigh");
    return table;
}

double p_all_real(int n, double tau) {
    check_even_n(n, "p_all_real");
    check_tau(tau, "p_all_real");
    return std::exp2(0.25 * n * (n - 1) * std::log2(0.5 * (1.0 + tau)));
}

double mean_real_count_exact(int n, double tau, Precision precision) {
    const PknTable table = pkn_table(n, tau, precision);
    double mean = 0.0;
    for (size_t i = 0; i < table.p.size(); ++i) mean += 2.0 * static_cast<double>(i) * table.p[i];
    return mean;
}

double mean_real_count_closed(int n, double tau) {
    check_even_n(n, "mean_real_count_closed");
    check_tau(tau, "mean_real_count_closed");
    const double z = -tau / (1.0 - tau);
    double sum = 0.0;
    double t = std::sqrt(M_PI);  // Gamma(2k+1/2)/(2k)! at k = 0
    for (int k = 0; k < n / 2; ++k) {
        sum += t * hyp2f1_regular(0.5, 0.5, 0.5 - 2.0 * k, z);
        t *= (2 * k + 0.5) * (2 * k + 1.5) / ((2 * k + 1.0) * (2 * k + 2.0));
    }
    return std::sqrt(2.0 / M_PI) * std::sqrt((1.0 + tau) / (1.0 - tau)) * sum;
}

double mean_real_count_asymptotic(int n, double tau) {
    if (n < 1) throw DomainError("mean_real_count_asymptotic: N must be >= 1");
    check_tau(tau, "mean_real_count_asymptotic");
    return std::sqrt(2.0 * n / M_PI) * std::sqrt((1.0 + tau) / (1.0 - tau));
}

}  // namespace ginibre
