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

#ifndef GINIBRE_SAMPLER_HPP
#define GINIBRE_SAMPLER_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ginibre/errors.hpp"

namespace ginibre {

// Ensemble X = (S + sqrt(c) A)/sqrt(b), c = (1-tau)/(1+tau), with S symmetric
// (diagonal N[0,1], off-diagonal N[0,1/sqrt(2)]) and A antisymmetric
// (strict upper triangle N[0,1/sqrt(2)]).  tau = 0 gives i.i.d. standard
// Gaussian entries; tau -> 1 approaches the symmetric (all-real-spectrum)
// ensemble.  Eigenvalue statistics are independent of the scale b.
struct EnsembleParams {
    int n = 2;
    double tau = 0.0;
    double b = 1.0;
    std::uint64_t seed = 0;
    std::int64_t draws = 0;

    void check() const;
};

// One classified spectrum: real eigenvalues sorted ascending, complex ones
// stored as their upper-half-plane representatives (y > 0).
struct SpectrumSample {
    std::vector<double> real;
    std::vector<std::complex<double>> complex_upper;
};

struct CountStat {
    int k = 0;                  // number of real eigenvalues
    std::int64_t count = 0;
    double p_hat = 0.0;
    double std_error = 0.0;
};

struct Histogram1D {
    double lo = 0.0, hi = 0.0;
    std::vector<std::int64_t> counts;
    std::vector<double> density;  // counts / (draws * bin width)
    double bin_width() const { return counts.empty() ? 0.0 : (hi - lo) / static_cast<double>(counts.size()); }
};

struct Histogram2D {
    double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
    int nx = 0, ny = 0;
    std::vector<std::int64_t> counts;   // row-major, index = iy * nx + ix
    std::vector<double> density;        // pair counts / (draws * cell area)
};

// Bin layout for empirical_density.  The real histogram integrates to the
// mean number of real eigenvalues falling in [real_lo, real_hi]; the 2-D
// histogram of upper-half representatives integrates to the mean number of
// complex-conjugate pairs in its window.
struct Binning {
    double real_lo = -5.0, real_hi = 5.0;
    int real_bins = 50;
    double x_lo = -5.0, x_hi = 5.0;
    int x_bins = 50;
    double y_lo = 0.0, y_hi = 5.0;
    int y_bins = 25;

    void check() const;
};

struct EmpiricalStats {
    std::int64_t draws = 0;
    std::vector<CountStat> real_counts;     // k = 0, 2, ..., N
    double mean_real_count = 0.0;
    double mean_real_count_std_error = 0.0;
    Histogram1D real_hist;                  // populated by empirical_density
    Histogram2D complex_hist;               // populated by empirical_density
};

// Matrix draw, fully determined by (params.seed, draw_index): variates come
// from a splitmix64 stream keyed by both, so draws are reproducible under any
// parallel schedule.
Eigen::MatrixXd sample_matrix(const EnsembleParams& params, std::uint64_t draw_index);

// Spectrum via balancing + real Schur form.  Real/complex classification uses
// the sign of each 2x2 block discriminant, not an |Im| threshold.  Throws
// NumericError if the QR iteration fails to converge, DomainError on
// non-finite input.
SpectrumSample eigen_spectrum(const Eigen::MatrixXd& x);

// Empirical distribution of the number of real eigenvalues.  draws >= 1000.
// threads = 0 picks the hardware concurrency; the result is bit-for-bit
// independent of the thread count.
EmpiricalStats empirical_pkn(const EnsembleParams& params, int threads = 0);

// Real-axis and complex-plane eigenvalue histograms plus the count table.
EmpiricalStats empirical_density(const EnsembleParams& params, const Binning& binning,
                                 int threads = 0);

namespace detail {

// Deterministic N(0,1) stream for draw `index` of run `seed` (splitmix64 +
// Box-Muller).
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t index);
    double next();

private:
    std::uint64_t next_u64();
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Shared accumulation core without the draw-count floor (the CLI accepts
// smaller runs than the library-level empirical_pkn contract).
EmpiricalStats accumulate(const EnsembleParams& params, const Binning* binning, int threads);

}  // namespace detail

}  // namespace ginibre

#endif
