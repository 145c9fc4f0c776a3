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

#ifndef GINIBRE_HERMITE_HPP
#define GINIBRE_HERMITE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "ginibre/errors.hpp"
#include "ginibre/scaled_value.hpp"

namespace ginibre {

// Asymmetry parameter and degree range for the scaled monic family
// C_n(z) = (tau/2)^{n/2} H_n(z / sqrt(2 tau)), with C_n(z) = z^n at tau = 0.
struct HermiteContext {
    double tau;
    int n_max;

    HermiteContext(double tau, int n_max) : tau(tau), n_max(n_max) {
        if (!(tau >= 0.0) || !(tau < 1.0))
            throw DomainError("HermiteContext: tau must lie in [0, 1)");
        if (n_max < 0) throw DomainError("HermiteContext: n_max must be >= 0");
    }
};

// Physicists' Hermite polynomial by the three-term recurrence.  Overflows
// double range near n ~ 170 at moderate x; large-n callers use the scaled
// or weighted variants.
double hermite_h(int n, double x);
ScaledValue hermite_h_scaled(int n, double x);

// Monic C_n(z) by the recurrence C_{n+1} = z C_n - n tau C_{n-1}; exact
// monomials at tau = 0.
std::complex<double> c_poly(const HermiteContext& ctx, int n, std::complex<double> z);
double c_poly(const HermiteContext& ctx, int n, double x);

// e^{-x^2/(2 sigma2)} C_n(x) / sqrt(n!), evaluated with a power-of-2
// exponent accumulator so intermediates never leave floating range.
double weighted_c(const HermiteContext& ctx, int n, double x, double sigma2);

// Fills out[k] = e^{-x^2/(2 sigma2)} C_k(x) / sqrt(k!) for k = 0..n_max by
// the normalized recurrence
//   q_{k+1} = (x / sqrt(k+1)) q_k - tau sqrt(k/(k+1)) q_{k-1}.
// For the kernel weight sigma2 = 1 + tau all values are O(1), so no
// rescaling is needed; generic over the scalar for the high-precision path.
template <class Real>
void weighted_c_values(Real tau, Real x, Real sigma2, int n_max, std::vector<Real>& out) {
    using std::exp;
    using std::sqrt;
    out.assign(static_cast<size_t>(n_max) + 1, Real(0));
    Real qm1(0), q = exp(-x * x / (Real(2) * sigma2));
    out[0] = q;
    for (int k = 0; k < n_max; ++k) {
        Real rk1 = sqrt(Real(k + 1));
        Real qn = (x / rk1) * q - tau * (sqrt(Real(k)) / rk1) * qm1;
        qm1 = q;
        q = qn;
        out[k + 1] = q;
    }
}

// Right-hand side of the large-n approximation
//   H_n(x) ~ (2n)^n exp((x^2 - x s - n)/2 - n ln(x - s)) sqrt((1 + x/s)/2),
// s = sqrt(x^2 - 2n), valid for x > sqrt(2n).
double plancherel_rotach(int n, double x);
ScaledValue plancherel_rotach_scaled(int n, double x);

}  // namespace ginibre

#endif
