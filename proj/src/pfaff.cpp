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

#include "ginibre/pfaff.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace ginibre {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

ScaledValue to_scaled(const HighFloat& v) {
    if (v == 0) return ScaledValue();
    int e = 0;
    HighFloat m = frexp(v, &e);
    return ScaledValue(static_cast<double>(m), e);
}

ScaledValue to_scaled(const ScaledValue& v) { return v; }

double to_plain_double(const HighFloat& v) { return static_cast<double>(v); }
double to_plain_double(const ScaledValue& v) { return v.to_double(); }

}  // namespace

SkewMatrix::SkewMatrix(const Eigen::MatrixXd& a) : a_(a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw DomainError("SkewMatrix: matrix must be square");
    if (n % 2 != 0) throw DomainError("SkewMatrix: dimension must be even");
    double scale = a.cwiseAbs().maxCoeff();
    double tol = 1e-12 * std::max(scale, 1e-300);
    for (int i = 0; i < n; ++i) {
        if (std::fabs(a_(i, i)) > tol)
            throw DomainError("SkewMatrix: diagonal must vanish");
        a_(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            if (std::fabs(a_(i, j) + a_(j, i)) > tol)
                throw DomainError("SkewMatrix: antisymmetry violated beyond tolerance");
            a_(j, i) = -a_(i, j);
        }
    }
}

ScaledValue pfaffian(const SkewMatrix& a) {
    const int n = a.dim();
    detail::DenseMatrix<ScaledValue> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = ScaledValue(a.entries()(i, j));
    return detail::pfaffian_inplace(m);
}

std::complex<double> pfaffian_complex(const Eigen::MatrixXcd& a) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n) throw DomainError("pfaffian_complex: matrix must be square");
    if (n % 2 != 0) throw DomainError("pfaffian_complex: dimension must be even");
    double scale = a.cwiseAbs().maxCoeff();
    double tol = 1e-12 * std::max(scale, 1e-300);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (std::abs(a(i, j) + a(j, i)) > tol)
                throw DomainError("pfaffian_complex: antisymmetry violated beyond tolerance");
    detail::DenseMatrix<std::complex<double>> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    return detail::pfaffian_inplace(m);
}

ScaledValue det_scaled(const Eigen::MatrixXd& mat) {
    const int n = static_cast<int>(mat.rows());
    if (mat.cols() != n) throw DomainError("det_scaled: matrix must be square");
    detail::DenseMatrix<ScaledValue> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = ScaledValue(mat(i, j));
    return detail::lu_det_inplace(m);
}

namespace detail {

std::vector<double> zeta_nodes(int count) {
    std::vector<double> nodes(count);
    for (int i = 0; i < count; ++i)
        nodes[i] = 1.0 + std::cos((2.0 * i + 1.0) * M_PI / (2.0 * count));
    return nodes;
}

}  // namespace detail

namespace {

// Power-of-2 row/column equilibration applied jointly to (A, B); returns the
// total log2 scaling pulled out of det(zeta A + B).
std::int64_t balance_pair(Eigen::MatrixXd& a, Eigen::MatrixXd& b) {
    const int n = static_cast<int>(a.rows());
    std::int64_t total = 0;
    auto scale_line = [&](bool row, int idx) {
        double mx = 0.0;
        for (int k = 0; k < n; ++k) {
            double va = row ? std::fabs(a(idx, k)) : std::fabs(a(k, idx));
            double vb = row ? std::fabs(b(idx, k)) : std::fabs(b(k, idx));
            mx = std::max({mx, va, vb});
        }
        if (mx <= 0.0 || !std::isfinite(mx)) return;
        int e = static_cast<int>(std::lround(std::log2(mx)));
        if (e == 0) return;
        double s = std::ldexp(1.0, -e);
        if (row) {
            a.row(idx) *= s;
            b.row(idx) *= s;
        } else {
            a.col(idx) *= s;
            b.col(idx) *= s;
        }
        total += e;
    };
    for (int i = 0; i < n; ++i) scale_line(true, i);
    for (int j = 0; j < n; ++j) scale_line(false, j);
    return total;
}

template <class T>
std::vector<ScaledValue> det_poly_impl(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                       std::int64_t log2_scale) {
    using std::abs;
    const int m = static_cast<int>(a.rows());
    std::vector<double> nodes = detail::zeta_nodes(m + 1);
    auto det_at = [&](double zeta) {
        detail::DenseMatrix<T> mm(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) mm(i, j) = T(zeta) * T(a(i, j)) + T(b(i, j));
        return detail::lu_det_inplace(mm);
    };
    std::vector<T> values(m + 1);
    T value_scale(0);
    for (int i = 0; i <= m; ++i) {
        values[i] = det_at(nodes[i]);
        value_scale = std::max(value_scale, T(abs(values[i])));
    }
    std::vector<T> coef = detail::newton_coefficients(nodes, values);
    // Residual at a held-out node flags ill-conditioned extraction.
    const double fresh = 1.0 + std::cos(1.0);
    T expect = det_at(fresh);
    T resid = abs(detail::eval_poly(coef, fresh) - expect);
    value_scale = std::max(value_scale, T(abs(expect)));
    if (!(value_scale > T(0))) value_scale = T(1);
    double rel = to_plain_double(T(resid / value_scale));
    if (rel > 1e-7)
        throw AccuracyError(
            "det_poly_in_zeta: interpolation residual too large; retry with Precision::kHigh",
            0.0, rel);
    std::vector<ScaledValue> out(m + 1);
    ScaledValue unscale = ScaledValue::pow2(log2_scale);
    for (int k = 0; k <= m; ++k) out[k] = to_scaled(coef[k]) * unscale;
    return out;
}

}  // namespace

std::vector<ScaledValue> det_poly_in_zeta(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                          Precision precision) {
    const int m = static_cast<int>(a.rows());
    if (a.cols() != m || b.rows() != m || b.cols() != m)
        throw DomainError("det_poly_in_zeta: A and B must be square with equal shape");
    if (m == 0) return {ScaledValue(1.0)};
    Eigen::MatrixXd ab = a, bb = b;
    std::int64_t log2_scale = balance_pair(ab, bb);
    if (precision == Precision::kHigh) return det_poly_impl<HighFloat>(ab, bb, log2_scale);
    return det_poly_impl<ScaledValue>(ab, bb, log2_scale);
}

}  // namespace ginibre
