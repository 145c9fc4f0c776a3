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

#ifndef GINIBRE_SKEWOP_HPP
#define GINIBRE_SKEWOP_HPP

#include <complex>

#include "ginibre/hermite.hpp"
#include "ginibre/poly.hpp"
#include "ginibre/scaled_value.hpp"
#include "ginibre/specfun.hpp"

namespace ginibre {

// Monic family skew-orthogonal with respect to the weight
// e^{-(x^2+y^2)/2(1+tau)} sgn(y-x) on the real-real sector and the
// erfc-weighted complex sector.  R_{2n} = C_{2n},
// R_{2n+1} = C_{2n+1} - 2n C_{2n-1}; normalization r_n = (2n)! 2 sqrt(2 pi) (1+tau).
class SkewOPFamily {
public:
    SkewOPFamily(double tau, int n_max);

    double tau() const { return ctx_.tau; }
    int n_max() const { return ctx_.n_max; }

    // Coefficient vectors; exact for the moderate degrees they serve.
    Polynomial c_polynomial(int n) const;
    Polynomial r_polynomial(int n) const;

private:
    HermiteContext ctx_;
};

// R_n(z) through the C-recurrence (no coefficient vectors), usable at any n.
std::complex<double> r_poly(const SkewOPFamily& family, int n, std::complex<double> z);
double r_poly(const SkewOPFamily& family, int n, double x);

ScaledValue r_norm(const SkewOPFamily& family, int n);

// Skew inner product <f,g> = <f,g>_r + <f,g>_c by nested quadrature:
//   <f,g>_r = int int e^{-(x^2+y^2)/2(1+tau)} f(x) g(y) sgn(y-x) dx dy,
//   <f,g>_c = -4 int_R dx int_0^inf dy e^{(y^2-x^2)/(1+tau)} erfc(gamma y)
//             Im[f(x+iy) conj(g(x+iy))],  gamma = sqrt(2/(1-tau^2)).
double inner_skew(const Polynomial& f, const Polynomial& g, double tau,
                  const QuadratureSpec& spec = {});

struct M1Result {
    double numeric;
    double closed_form;
    double residual;  // |numeric - closed| / max(1, |closed|)
};

// Checks <C_{2j+1}, C_{2k}> against -2^{j+k+3/2} j! Gamma(k+1/2) (1+tau)
// for j >= k (zero for j < k).
M1Result verify_m1(int j, int k, double tau, const QuadratureSpec& spec = {});

}  // namespace ginibre

#endif
