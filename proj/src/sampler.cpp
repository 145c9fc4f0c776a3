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

#include "ginibre/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <Eigen/Eigenvalues>

namespace ginibre {

void EnsembleParams::check() const {
    if (n < 2 || n % 2 != 0) throw DomainError("EnsembleParams: N must be even and >= 2");
    if (!(tau >= 0.0 && tau < 1.0)) throw DomainError("EnsembleParams: tau must lie in [0,1)");
    if (!(b > 0.0)) throw DomainError("EnsembleParams: b must be positive");
    if (draws < 0) throw DomainError("EnsembleParams: draws must be nonnegative");
}

void Binning::check() const {
    if (!(real_lo < real_hi) || real_bins < 1 || !(x_lo < x_hi) || x_bins < 1 ||
        !(y_lo < y_hi) || y_bins < 1)
        throw DomainError("Binning: ranges must be nonempty and bin counts positive");
    if (y_lo < 0.0) throw DomainError("Binning: complex-plane bins live in the upper half plane");
}

namespace detail {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t index)
    // Hash the (seed, index) pair so distinct draws land at unrelated points
    // of the splitmix64 orbit instead of shifted copies of one sequence.
    : state_(mix64(seed + kGolden * (index + 1))) {}

std::uint64_t GaussianStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double GaussianStream::next() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // 53-bit uniforms; 1-u1 keeps the logarithm argument in (0, 1].
    const double u1 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log1p(-u1));
    const double angle = 2.0 * M_PI * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

}  // namespace detail

Eigen::MatrixXd sample_matrix(const EnsembleParams& params, std::uint64_t draw_index) {
    params.check();
    const int n = params.n;
    detail::GaussianStream g(params.seed, draw_index);
    const double off_sigma = 1.0 / std::sqrt(2.0);
    const double root_c = std::sqrt((1.0 - params.tau) / (1.0 + params.tau));
    const double inv_root_b = 1.0 / std::sqrt(params.b);

    // Fixed draw order (diagonal of S, upper triangle of S, upper triangle of
    // A) pins the stream layout for reproducibility.
    Eigen::MatrixXd x(n, n);
    for (int i = 0; i < n; ++i) x(i, i) = g.next() * inv_root_b;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double s = g.next() * off_sigma;
            x(i, j) = s;
            x(j, i) = s;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double a = g.next() * off_sigma * root_c;
            x(i, j) = (x(i, j) + a) * inv_root_b;
            x(j, i) = (x(j, i) - a) * inv_root_b;
        }
    return x;
}

namespace {

// Radix-2 similarity balancing (norm equilibration); exact in floating point
// and leaves eigenvalues untouched.
void balance_in_place(Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double col = 0.0, row = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    col += std::abs(m(j, i));
                    row += std::abs(m(i, j));
                }
            if (col == 0.0 || row == 0.0) continue;
            const double before = col + row;
            double factor = 1.0;
            while (col < 0.5 * row) {
                col *= 2.0;
                row *= 0.5;
                factor *= 2.0;
            }
            while (col >= 2.0 * row) {
                col *= 0.5;
                row *= 2.0;
                factor *= 0.5;
            }
            if (col + row < 0.95 * before) {
                converged = false;
                m.row(i) /= factor;
                m.col(i) *= factor;
            }
        }
    }
}

}  // namespace

SpectrumSample eigen_spectrum(const Eigen::MatrixXd& x) {
    if (x.rows() != x.cols() || x.rows() < 1)
        throw DomainError("eigen_spectrum: matrix must be square and nonempty");
    if (!x.allFinite()) throw DomainError("eigen_spectrum: matrix has non-finite entries");
    const int n = static_cast<int>(x.rows());

    Eigen::MatrixXd work = x;
    balance_in_place(work);
    Eigen::RealSchur<Eigen::MatrixXd> schur;
    schur.setMaxIterations(30 * n);
    schur.compute(work, /*computeU=*/false);
    if (schur.info() != Eigen::Success)
        throw NumericError("eigen_spectrum: QR iteration did not converge");
    const Eigen::MatrixXd& t = schur.matrixT();

    SpectrumSample out;
    int i = 0;
    while (i < n) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            const double a = t(i, i), b = t(i, i + 1);
            const double c = t(i + 1, i), d = t(i + 1, i + 1);
            const double half_trace = 0.5 * (a + d);
            const double disc = 0.25 * (a - d) * (a - d) + b * c;
            if (disc >= 0.0) {
                const double root = std::sqrt(disc);
                out.real.push_back(half_trace - root);
                out.real.push_back(half_trace + root);
            } else {
                out.complex_upper.emplace_back(half_trace, std::sqrt(-disc));
            }
            i += 2;
        } else {
            out.real.push_back(t(i, i));
            ++i;
        }
    }
    std::sort(out.real.begin(), out.real.end());
    return out;
}

namespace detail {

namespace {

struct Partial {
    std::vector<std::int64_t> count_by_pairs;  // index = (#real)/2
    std::vector<std::int64_t> real_bins;
    std::vector<std::int64_t> complex_bins;
};

}  // namespace

EmpiricalStats accumulate(const EnsembleParams& params, const Binning* binning, int threads) {
    params.check();
    if (binning != nullptr) binning->check();
    if (params.draws < 1) throw DomainError("sampler: draws must be >= 1");
    const int half = params.n / 2;

    if (threads <= 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    const std::int64_t draws = params.draws;
    threads = static_cast<int>(std::min<std::int64_t>(threads, draws));

    auto run_range = [&](std::int64_t begin, std::int64_t end, Partial& partial) {
        partial.count_by_pairs.assign(static_cast<size_t>(half) + 1, 0);
        if (binning != nullptr) {
            partial.real_bins.assign(static_cast<size_t>(binning->real_bins), 0);
            partial.complex_bins.assign(
                static_cast<size_t>(binning->x_bins) * binning->y_bins, 0);
        }
        for (std::int64_t d = begin; d < end; ++d) {
            const SpectrumSample s =
                eigen_spectrum(sample_matrix(params, static_cast<std::uint64_t>(d)));
            partial.count_by_pairs[s.real.size() / 2] += 1;
            if (binning == nullptr) continue;
            const double rw = (binning->real_hi - binning->real_lo) / binning->real_bins;
            for (double lambda : s.real) {
                const int bin = static_cast<int>(std::floor((lambda - binning->real_lo) / rw));
                if (bin >= 0 && bin < binning->real_bins)
                    partial.real_bins[static_cast<size_t>(bin)] += 1;
            }
            const double xw = (binning->x_hi - binning->x_lo) / binning->x_bins;
            const double yw = (binning->y_hi - binning->y_lo) / binning->y_bins;
            for (const std::complex<double>& z : s.complex_upper) {
                const int bx = static_cast<int>(std::floor((z.real() - binning->x_lo) / xw));
                const int by = static_cast<int>(std::floor((z.imag() - binning->y_lo) / yw));
                if (bx >= 0 && bx < binning->x_bins && by >= 0 && by < binning->y_bins)
                    partial.complex_bins[static_cast<size_t>(by) * binning->x_bins + bx] += 1;
            }
        }
    };

    std::vector<Partial> partials(static_cast<size_t>(threads));
    if (threads == 1) {
        run_range(0, draws, partials[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(threads));
        const std::int64_t chunk = (draws + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const std::int64_t begin = w * chunk;
            const std::int64_t end = std::min(draws, begin + chunk);
            workers.emplace_back(run_range, begin, end, std::ref(partials[static_cast<size_t>(w)]));
        }
        for (auto& worker : workers) worker.join();
    }

    // Integer merges keep the result independent of the worker layout.
    std::vector<std::int64_t> counts(static_cast<size_t>(half) + 1, 0);
    for (const Partial& partial : partials)
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += partial.count_by_pairs[i];

    EmpiricalStats stats;
    stats.draws = draws;
    stats.real_counts.resize(counts.size());
    double mean = 0.0, second = 0.0;
    for (size_t i = 0; i < counts.size(); ++i) {
        CountStat& cs = stats.real_counts[i];
        cs.k = static_cast<int>(2 * i);
        cs.count = counts[i];
        cs.p_hat = static_cast<double>(counts[i]) / static_cast<double>(draws);
        cs.std_error = std::sqrt(cs.p_hat * (1.0 - cs.p_hat) / static_cast<double>(draws));
        mean += cs.k * cs.p_hat;
        second += static_cast<double>(cs.k) * cs.k * cs.p_hat;
    }
    stats.mean_real_count = mean;
    stats.mean_real_count_std_error =
        std::sqrt(std::max(0.0, second - mean * mean) / static_cast<double>(draws));

    if (binning != nullptr) {
        stats.real_hist.lo = binning->real_lo;
        stats.real_hist.hi = binning->real_hi;
        stats.real_hist.counts.assign(static_cast<size_t>(binning->real_bins), 0);
        for (const Partial& partial : partials)
            for (size_t i = 0; i < stats.real_hist.counts.size(); ++i)
                stats.real_hist.counts[i] += partial.real_bins[i];
        const double rw = stats.real_hist.bin_width();
        stats.real_hist.density.resize(stats.real_hist.counts.size());
        for (size_t i = 0; i < stats.real_hist.counts.size(); ++i)
            stats.real_hist.density[i] =
                static_cast<double>(stats.real_hist.counts[i]) / (static_cast<double>(draws) * rw);

        stats.complex_hist.x_lo = binning->x_lo;
        stats.complex_hist.x_hi = binning->x_hi;
        stats.complex_hist.y_lo = binning->y_lo;
        stats.complex_hist.y_hi = binning->y_hi;
        stats.complex_hist.nx = binning->x_bins;
        stats.complex_hist.ny = binning->y_bins;
        stats.complex_hist.counts.assign(
            static_cast<size_t>(binning->x_bins) * binning->y_bins, 0);
        for (const Partial& partial : partials)
            for (size_t i = 0; i < stats.complex_hist.counts.size(); ++i)
                stats.complex_hist.counts[i] += partial.complex_bins[i];
        const double cell = ((binning->x_hi - binning->x_lo) / binning->x_bins) *
                            ((binning->y_hi - binning->y_lo) / binning->y_bins);
        stats.complex_hist.density.resize(stats.complex_hist.counts.size());
        for (size_t i = 0; i < stats.complex_hist.counts.size(); ++i)
            stats.complex_hist.density[i] = static_cast<double>(stats.complex_hist.counts[i]) /
                                            (static_cast<double>(draws) * cell);
    }
    return stats;
}

}  // namespace detail

EmpiricalStats empirical_pkn(const EnsembleParams& params, int threads) {
    if (params.draws < 1000)
        throw DomainError("empirical_pkn: at least 1000 draws are required");
    return detail::accumulate(params, nullptr, threads);
}

EmpiricalStats empirical_density(const EnsembleParams& params, const Binning& binning,
                                 int threads) {
    return detail::accumulate(params, &binning, threads);
}

}  // namespace ginibre
