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

#ifndef GINIBRE_SPECFUN_HPP
#define GINIBRE_SPECFUN_HPP

#include <cmath>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ginibre/errors.hpp"

namespace ginibre {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 4096;    // adaptive bisection budget (panel count)
    double trunc_epsilon = 1e-18;   // weight cutoff for infinite-domain truncation

    void check() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1 ||
            !(trunc_epsilon > 0.0))
            throw DomainError("QuadratureSpec: tolerances must be > 0 and max subdivisions >= 1");
    }
};

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Complementary error function.
double erfc(double x);
double erf(double x);

// Gauss hypergeometric 2F1(a,b;c;z).  Supports z = 0, |z| < 1 by direct
// series, and the terminating cases where c-a or c-b is a nonpositive
// integer (covers the (1/2, 1/2; 1/2-2k; -tau/(1-tau)) family via the Pfaff
// transformation for any z <= 0).  Other parameter regions are out of scope.
double hyp2f1_regular(double a, double b, double c, double z);

// Gamma(half_twice/2) for positive integer half_twice, computed exactly by
// the recurrence from Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.  Generic over
// the scalar type so the high-precision backend reuses it.
template <class T>
T gamma_half_integer(int half_twice) {
    if (half_twice <= 0) throw DomainError("gamma_half_integer: argument must be positive");
    T v = (half_twice % 2 == 0) ? T(1) : sqrt(boost::math::constants::pi<T>());
    for (int t = half_twice % 2 == 0 ? 2 : 1; t + 2 <= half_twice; t += 2)
        v *= T(t) / T(2);
    return v;
}

// Cut-off radius R such that e^{-R^2/2 sigma^2} (1+R)^degree <= eps; used to
// truncate Gaussian-weighted infinite-domain integrals.  degree = 0 gives
// the plain R = sqrt(2 sigma^2 ln(1/eps)) cutoff.
double truncation_radius(double sigma2, int degree, double eps);

// Decay envelope |f(y)| <= const * e^{-(y-center)^2/2 sigma2} (1+|y-center|)^degree,
// supplied by the caller so infinite endpoints can be cut at a finite radius.
struct GaussianBound {
    double sigma2 = 1.0;
    double center = 0.0;
    int degree = 0;
};

// Adaptive Gauss-Kronrod integral of f over (a, b); infinite endpoints
// allowed.  Throws AccuracyError (with best estimate and error bound) if the
// subdivision budget is exhausted before the tolerances are met.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.check();
    if (a == b) return 0.0;
    double error = 0.0, l1 = 0.0;
    // Budget of n panels is reached after ceil(log2 n) bisection levels.
    unsigned depth = 1;
    while ((1u << depth) < static_cast<unsigned>(spec.max_subdivisions) && depth < 30) ++depth;
    double result = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, depth, spec.rel_tol, &error, &l1);
    // The Kronrod-minus-Gauss bound overestimates the true error, so failure
    // is only flagged well beyond the requested tolerance.
    if (error > 10.0 * (spec.rel_tol * l1 + spec.abs_tol))
        throw AccuracyError("integrate: subdivision budget exhausted (estimate " +
                                std::to_string(result) + ", bound " + std::to_string(error) + ")",
                            result, error);
    return result;
}

// Same, but infinite endpoints are truncated where the supplied weight bound
// drops below spec.trunc_epsilon.  Use whenever the raw integrand is not
// evaluatable far outside its decay envelope (e.g. erfc * exp products).
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec,
                 const GaussianBound& bound) {
    double r = truncation_radius(bound.sigma2, bound.degree, spec.trunc_epsilon);
    if (std::isinf(a) && a < 0) a = bound.center - r;
    if (std::isinf(b) && b > 0) b = bound.center + r;
    return integrate(f, a, b, spec);
}

}  // namespace ginibre

#endif
