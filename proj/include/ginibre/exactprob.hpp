// Copyright 2026 ginibre-interp developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "ginibre/pfaff.hpp"
#include "ginibre/scaled_value.hpp"

namespace ginibre {

// Exact probabilities p_{k,N} that an N x N partly symmetric real Ginibre
// matrix (asymmetry parameter tau in [0,1)) has exactly k real eigenvalues.
// Only even N is supported; k ranges over {0, 2, ..., N}.
struct PknTable {
  int n = 0;
  double tau = 0.0;
  // p[i] is the probability of exactly 2*i real eigenvalues, i = 0..n/2.
  std::vector<double> p;
  // Sum of all probabilities minus one (diagnostic; small but nonzero in
  // finite precision).
  double sum_residual = 0.0;

  // Probability of exactly k real eigenvalues.  k must be even, 0 <= k <= n.
  double probability(int k) const;
};

// Real-sector moment alpha_{2j-1,2k} entering the generating Pfaffian:
// the skew inner product of the monomials x^{2j-2} and x^{2k-1} against
// exp(-(x^2+y^2)/2) sgn(y-x) over the plane.  j, k >= 1.  tau-independent.
ScaledValue alpha_entry(int j, int k);

// I_j = int_0^inf y^j erfc(sqrt(2/(1-tau)) y) exp(y^2) dy for odd j >= 1,
// evaluated by its closed form (a terminating hypergeometric-type sum).
double i_odd(int j, double tau);

// Complex-sector moment beta_{2j-1,2k}: the upper-half-plane integral of
// Im[(x+iy)^{2j-2} (x-iy)^{2k-1}] against -4 exp(y^2-x^2) erfc(sqrt(2/(1-tau)) y),
// reduced to a finite double sum of Gamma factors times I_{l+p}.
ScaledValue beta_entry(int j, int k, double tau);

// Maximum matrix size accepted per precision mode.
int pkn_max_n(Precision precision);

// Full table {p_{k,N}}.  The half-size determinant det[zeta*alpha + beta] is
// expanded in zeta by Chebyshev-node interpolation; the prefactor is carried
// in the base-2 log domain.  Throws DomainError for invalid (n, tau),
// PrecisionError if the computed table is numerically inconsistent
// (probability below -1e-8 or |sum - 1| > 1e-8) -- retry with Precision::kHigh.
PknTable pkn_table(int n, double tau, Precision precision = Precision::kDouble);

// Closed form p_{N,N} = ((1+tau)/2)^{N(N-1)/4}: probability that the whole
// spectrum is real.
double p_all_real(int n, double tau);

// Mean number of real eigenvalues, as sum_k k * p_{k,N} over the exact table.
double mean_real_count_exact(int n, double tau,
                             Precision precision = Precision::kDouble);

// Mean number of real eigenvalues by the closed hypergeometric sum
// sqrt(2/pi) sqrt((1+tau)/(1-tau)) *
//   sum_{k=0}^{N/2-1} Gamma(2k+1/2)/(2k)! * 2F1(1/2,1/2;1/2-2k;-tau/(1-tau)).
double mean_real_count_closed(int n, double tau);

// Large-N asymptotic mean sqrt(2N/pi) * sqrt((1+tau)/(1-tau)).  n >= 1.
double mean_real_count_asymptotic(int n, double tau);

}  // namespace ginibre
