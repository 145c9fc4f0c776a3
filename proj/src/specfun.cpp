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

#include "ginibre/specfun.hpp"

#include <cmath>
#include <cstdlib>

namespace ginibre {

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double erfc(double x) { return std::erfc(x); }
double erf(double x) { return std::erf(x); }

namespace {

// Direct power series around z = 0; requires |z| < 1 (or termination).
double hyp2f1_series(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 10000; ++n) {
        double denom = (c + n) * (n + 1);
        if (denom == 0.0)
            throw DomainError("hyp2f1_regular: c is a nonpositive integer inside the series");
        term *= (a + n) * (b + n) / denom * z;
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum) + 1e-300) return sum;
    }
    throw DomainError("hyp2f1_regular: series did not converge");
}

bool is_nonpositive_int(double x, int& k) {
    double r = std::round(x);
    if (r > 0.5 || std::fabs(x - r) > 1e-9) return false;
    k = static_cast<int>(-r);
    return true;
}

}  // namespace

double hyp2f1_regular(double a, double b, double c, double z) {
    if (z == 0.0) return 1.0;
    int k = 0;
    // Terminating series directly in z.
    if (is_nonpositive_int(a, k) || is_nonpositive_int(b, k)) return hyp2f1_series(a, b, c, z);
    // Pfaff transformation 2F1(a,b;c;z) = (1-z)^{-b} 2F1(c-a, b; c; z/(z-1)):
    // when c-a is a nonpositive integer the transformed series terminates,
    // which covers the (1/2, 1/2; 1/2-2k; z<=0) family exactly.
    if (z < 0.0) {
        double zt = z / (z - 1.0);
        if (is_nonpositive_int(c - a, k))
            return std::pow(1.0 - z, -b) * hyp2f1_series(c - a, b, c, zt);
        if (is_nonpositive_int(c - b, k))
            return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, zt);
        if (zt < 1.0) return std::pow(1.0 - z, -b) * hyp2f1_series(c - a, b, c, zt);
    }
    if (std::fabs(z) < 1.0) return hyp2f1_series(a, b, c, z);
    throw DomainError("hyp2f1_regular: unsupported parameter/argument combination");
}

double truncation_radius(double sigma2, int degree, double eps) {
    if (!(sigma2 > 0.0) || !(eps > 0.0) || eps >= 1.0)
        throw DomainError("truncation_radius: requires sigma2 > 0 and 0 < eps < 1");
    double L = std::log(1.0 / eps);
    double r = std::sqrt(2.0 * sigma2 * L);
    // Fixed point of r = sqrt(2 sigma^2 (L + degree ln(1+r))); the log term
    // is slowly varying so a handful of rounds converges.
    for (int it = 0; it < 12 && degree > 0; ++it)
        r = std::sqrt(2.0 * sigma2 * (L + degree * std::log1p(r)));
    return r;
}

}  // namespace ginibre
