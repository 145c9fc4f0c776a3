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

#ifndef GINIBRE_KERNELS_HPP
#define GINIBRE_KERNELS_HPP

#include <complex>
#include <vector>

#include "ginibre/errors.hpp"
#include "ginibre/scaled_value.hpp"
#include "ginibre/skewop.hpp"
#include "ginibre/specfun.hpp"

namespace ginibre {

// Evaluation context for the finite-N correlation kernels.  All kernels use
// the weight exp(-x^2/2(1+tau)) and the skew-orthogonal normalizations r_k;
// every sum combines factorial-normalized, pre-weighted Hermite terms so that
// no intermediate overflows for the supported sizes.
class KernelContext {
public:
    KernelContext(int n, double tau, QuadratureSpec spec = {});

    int n() const { return n_; }
    double tau() const { return tau_; }
    const SkewOPFamily& family() const { return family_; }
    const QuadratureSpec& quadrature() const { return spec_; }
    ScaledValue r_norm(int k) const;

private:
    int n_;
    double tau_;
    QuadratureSpec spec_;
    SkewOPFamily family_;
    std::vector<ScaledValue> r_norms_;
};

// Points at which correlations are requested; real and complex sectors are
// evaluated by separate Pfaffians (mixed correlations are out of scope).
struct CorrelationRequest {
    std::vector<double> real_points;
    std::vector<std::complex<double>> complex_points;  // strictly upper half plane

    void check() const;
};

// Phi_k(x) = int sgn(x-y) R_k(y) exp(-y^2/2(1+tau)) dy for the skew-orthogonal
// polynomial R_k, evaluated by the exact erfc-seeded antiderivative recurrence.
// Requires 0 <= k <= N-1.
double phi(const KernelContext& ctx, int k, double x);

// Real-real kernel S^r(x,y): Hermite-sum form plus the single boundary term.
double s_r(const KernelContext& ctx, double x, double y);

// Same value computed with ~50-digit internals; for regimes (tau -> 1) where
// the double sweep loses accuracy.
double s_r_high(const KernelContext& ctx, double x, double y);

// D^r(x,y) = d/dx S^r(x,y), by analytic differentiation of the sweep.
double d_r(const KernelContext& ctx, double x, double y);

// I~^r(x,y) = (1/2) sgn(y-x) - int_x^y S^r(x,z) dz, via the antisymmetric
// Phi-pair closed form (the z-integral is exact, no quadrature).
double i_tilde_r(const KernelContext& ctx, double x, double y);

// n-point correlation of real eigenvalues: Pfaffian of the 2n x 2n block
// matrix [[-I~(x_j,x_k), S(x_j,x_k)], [-S(x_k,x_j), D(x_j,x_k)]].
double rho_r(const KernelContext& ctx, const std::vector<double>& points);

// One-point real density rho^r_(1)(x) = S^r(x,x) on a grid.
std::vector<double> rho_r1_profile(const KernelContext& ctx, const std::vector<double>& grid);

// Complex-complex kernel S^c_tau(w,z) (polynomial part, no weight); overflows
// for large |w|, |z| -- prefer s_c_hat which carries the Gaussian weight.
std::complex<double> s_c(const KernelContext& ctx, std::complex<double> w,
                         std::complex<double> z);

// Weighted kernel exp(-(w^2+z^2)/2(1+tau)) S^c_tau(w,z); exactly antisymmetric.
std::complex<double> s_c_hat(const KernelContext& ctx, std::complex<double> w,
                             std::complex<double> z);

// n-point correlation of complex eigenvalues (upper-half representatives):
// product of 2i erfc(sqrt(2/(1-tau^2)) y_l) weights times the Pfaffian of
// s_c_hat quartets.  Result is real and nonnegative; the imaginary residual
// must stay below 1e-9 relative.
double rho_c(const KernelContext& ctx, const std::vector<std::complex<double>>& points);

}  // namespace ginibre

#endif
