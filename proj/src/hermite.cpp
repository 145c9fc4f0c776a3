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

#include "ginibre/hermite.hpp"

namespace ginibre {

double hermite_h(int n, double x) {
    if (n < 0) throw DomainError("hermite_h: degree must be >= 0");
    double hm = 0.0, hc = 1.0;
    for (int k = 0; k < n; ++k) {
        double hn = 2.0 * x * hc - 2.0 * k * hm;
        hm = hc;
        hc = hn;
    }
    return hc;
}

ScaledValue hermite_h_scaled(int n, double x) {
    if (n < 0) throw DomainError("hermite_h_scaled: degree must be >= 0");
    double hm = 0.0, hc = 1.0;
    std::int64_t e2 = 0;
    for (int k = 0; k < n; ++k) {
        double hn = 2.0 * x * hc - 2.0 * k * hm;
        hm = hc;
        hc = hn;
        double mx = std::max(std::fabs(hm), std::fabs(hc));
        if (mx > 0x1p400 || (mx > 0.0 && mx < 0x1p-400)) {
            int e = 0;
            std::frexp(mx, &e);
            hm = std::ldexp(hm, -e);
            hc = std::ldexp(hc, -e);
            e2 += e;
        }
    }
    return ScaledValue(hc, 0) * ScaledValue::pow2(e2);
}

std::complex<double> c_poly(const HermiteContext& ctx, int n, std::complex<double> z) {
    if (n < 0 || n > ctx.n_max) throw DomainError("c_poly: degree out of range");
    std::complex<double> cm = 0.0, cc = 1.0;
    for (int k = 0; k < n; ++k) {
        std::complex<double> cn = z * cc - (k * ctx.tau) * cm;
        cm = cc;
        cc = cn;
    }
    return cc;
}

double c_poly(const HermiteContext& ctx, int n, double x) {
    if (n < 0 || n > ctx.n_max) throw DomainError("c_poly: degree out of range");
    double cm = 0.0, cc = 1.0;
    for (int k = 0; k < n; ++k) {
        double cn = x * cc - (k * ctx.tau) * cm;
        cm = cc;
        cc = cn;
    }
    return cc;
}

double weighted_c(const HermiteContext& ctx, int n, double x, double sigma2) {
    if (n < 0 || n > ctx.n_max) throw DomainError("weighted_c: degree out of range");
    if (!(sigma2 > 0.0)) throw DomainError("weighted_c: sigma2 must be > 0");
    // Start from the weight in log2 space; the weight alone can underflow.
    double w_log2 = -x * x / (2.0 * sigma2) * M_LOG2E;
    std::int64_t e2 = static_cast<std::int64_t>(std::floor(w_log2));
    double qm1 = 0.0, q = std::exp2(w_log2 - static_cast<double>(e2));
    for (int k = 0; k < n; ++k) {
        double rk1 = std::sqrt(static_cast<double>(k + 1));
        double qn = (x / rk1) * q - ctx.tau * (std::sqrt(static_cast<double>(k)) / rk1) * qm1;
        qm1 = q;
        q = qn;
        double mx = std::max(std::fabs(qm1), std::fabs(q));
        if (mx > 0x1p400 || (mx > 0.0 && mx < 0x1p-400)) {
            int e = 0;
            std::frexp(mx, &e);
            qm1 = std::ldexp(qm1, -e);
            q = std::ldexp(q, -e);
            e2 += e;
        }
    }
    return (ScaledValue(q, 0) * ScaledValue::pow2(e2)).to_double();
}

double plancherel_rotach(int n, double x) { return plancherel_rotach_scaled(n, x).to_double(); }

ScaledValue plancherel_rotach_scaled(int n, double x) {
    if (n < 1) throw DomainError("plancherel_rotach: requires n >= 1");
    if (!(x > std::sqrt(2.0 * n)))
        throw DomainError("plancherel_rotach: formula requires x > sqrt(2n)");
    double s = std::sqrt(x * x - 2.0 * n);
    double ln_val = n * std::log(2.0 * n) + 0.5 * (x * x - x * s - n) - n * std::log(x - s);
    double factor = std::sqrt(0.5 * (1.0 + x / s));
    return ScaledValue::from_log2(ln_val * M_LOG2E) * ScaledValue(factor);
}

}  // namespace ginibre
