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

#ifndef GINIBRE_ASYMPTOTICS_HPP
#define GINIBRE_ASYMPTOTICS_HPP

#include <complex>

#include "ginibre/errors.hpp"

namespace ginibre {

// Coordinate frame anchored at the right spectral edge (1+tau) sqrt(N);
// converts between the global coordinate x and the edge offset X.
struct EdgeFrame {
    int n = 2;
    double tau = 0.0;

    void check() const;
    double edge() const;                          // (1+tau) sqrt(N)
    double offset(double x) const;                // X = x - edge
    double global_coordinate(double offset) const;
};

// Spectral support: ellipse with real semi-axis A = sqrt(N)(1+tau) and
// imaginary semi-axis B = sqrt(N)(1-tau).
struct SupportEllipse {
    double a = 0.0;
    double b = 0.0;

    bool contains(std::complex<double> z, double inflation = 1.0) const;
};

SupportEllipse support_ellipse(int n, double tau);

// Limiting density of real eigenvalues in the bulk: 1/sqrt(2 pi (1-tau^2)).
double bulk_real_density(double tau);

// Limiting real-eigenvalue density at offset X from the spectrum edge; tends
// to the bulk value as X -> -inf and to 0 as X -> +inf.
double edge_real_density(double offset, double tau);

// Limiting bulk real-real kernel exp(-(x-y)^2/2(1-tau^2))/sqrt(2 pi (1-tau^2));
// its diagonal is the bulk density.
double bulk_sr_limit(double x, double y, double tau);

// Limiting bulk complex-complex kernel, weighted form:
// (w-z)/(2 sqrt(2 pi)(1-tau^2)^{3/2}) exp(-(z-w)^2/2(1-tau^2)).  Antisymmetric;
// together with the pair weight it reproduces the elliptic-law density
// 1/(pi (1-tau^2)) away from the real axis.
std::complex<double> bulk_sc_limit(std::complex<double> w, std::complex<double> z, double tau);

// Same kernel without the Gaussian weight factor exp(-(w^2+z^2)/2(1+tau)).
std::complex<double> bulk_sc_limit_raw(std::complex<double> w, std::complex<double> z, double tau);

// Weakly non-symmetric limit of the scaled real-real kernel at
// tau = 1 - alpha^2/N: int_0^1 e^{-alpha^2 u^2} cos(pi u (x-y)) du.
// Depends on x - y only; unit density at coincidence as alpha -> 0.
double weak_sr(double x, double y, double alpha);

// Weak limit of the scaled complex-complex kernel:
// (pi/2) int_0^1 u e^{-alpha^2 u^2} sin(pi u (w-z)) du.
std::complex<double> weak_sc(std::complex<double> w, std::complex<double> z, double alpha);

// Weak limit of the complex-pair weight factor: erfc(pi y / alpha).
double weak_complex_weight(double y, double alpha);

// Finite-N comparators for the weak limit, evaluated at tau = 1 - alpha^2/N
// with high-precision internals (the sweeps lose accuracy as tau -> 1):
// (pi/sqrt N) S^r(pi x/sqrt N, pi y/sqrt N).
double weak_sr_finite(int n, double alpha, double x, double y);
// (pi/sqrt N)^2 S^c(pi x/sqrt N, pi y/sqrt N), on the real slice where the
// kernel is real-valued.
double weak_sc_finite(int n, double alpha, double x, double y);

}  // namespace ginibre

#endif
