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

#ifndef GINIBRE_PFAFF_HPP
#define GINIBRE_PFAFF_HPP

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ginibre/errors.hpp"
#include "ginibre/scaled_value.hpp"

namespace ginibre {

enum class Precision { kDouble, kHigh };

// Validated antisymmetric matrix; diagonal forced to exactly zero.
class SkewMatrix {
public:
    explicit SkewMatrix(const Eigen::MatrixXd& a);
    int dim() const { return static_cast<int>(a_.rows()); }
    const Eigen::MatrixXd& entries() const { return a_; }

private:
    Eigen::MatrixXd a_;
};

namespace detail {

// Minimal dense matrix over an arbitrary scalar (ScaledValue, multiprecision,
// complex); Eigen is used only at the double/complex<double> boundary.
template <class T>
class DenseMatrix {
public:
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols, T(0)) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

// Determinant by LU with partial pivoting; destroys the argument.
template <class T>
T lu_det_inplace(DenseMatrix<T>& m) {
    using std::abs;
    const int n = m.rows();
    T det(1);
    for (int k = 0; k < n; ++k) {
        int piv = k;
        auto best = abs(m(k, k));
        for (int i = k + 1; i < n; ++i) {
            auto a = abs(m(i, k));
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (!(best > decltype(best)(0))) return T(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (int i = k + 1; i < n; ++i) {
            T f = m(i, k) / m(k, k);
            for (int j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

// Pfaffian by pairwise elimination with pivoting (Parlett-Reid style);
// destroys the argument.  Pf([[0,a],[-a,0]]) = a.
template <class T>
T pfaffian_inplace(DenseMatrix<T>& m) {
    using std::abs;
    const int n = m.rows();
    if (n == 0) return T(1);
    T pf(1);
    for (int k = 0; k + 1 < n; k += 2) {
        int piv = k + 1;
        auto best = abs(m(k, k + 1));
        for (int i = k + 2; i < n; ++i) {
            auto a = abs(m(k, i));
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (!(best > decltype(best)(0))) return T(0);
        if (piv != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(m(k + 1, j), m(piv, j));
            for (int i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, piv));
            pf = -pf;
        }
        const T a = m(k, k + 1);
        pf *= a;
        // Schur complement of the leading 2x2 skew block.
        for (int i = k + 2; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                T upd = m(i, j) - (m(k, i) * m(k + 1, j) - m(k, j) * m(k + 1, i)) / a;
                m(i, j) = upd;
                m(j, i) = -upd;
            }
    }
    return pf;
}

// Chebyshev-Gauss nodes mapped to [0, 2]; keeps the interpolation problem
// for strongly graded coefficients well-conditioned.
std::vector<double> zeta_nodes(int count);

// Newton divided-difference interpolation through (nodes[i], values[i]),
// expanded to monomial coefficients c_0..c_m.
template <class T>
std::vector<T> newton_coefficients(const std::vector<double>& nodes, std::vector<T> values) {
    const int n = static_cast<int>(nodes.size());
    // Divided differences, in place.
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            values[i] = (values[i] - values[i - 1]) / T(nodes[i] - nodes[i - level]);
    // Expand the Newton form by Horner on the node polynomial.
    std::vector<T> coef(n, T(0));
    for (int i = n - 1; i >= 0; --i) {
        for (int j = n - 1; j >= 1; --j) coef[j] = coef[j - 1] - T(nodes[i]) * coef[j];
        coef[0] = values[i] - T(nodes[i]) * coef[0];
        // coef accumulates sum_k dd_k prod_{l<k}(z - nodes[l]) from the top.
    }
    return coef;
}

template <class T>
T eval_poly(const std::vector<T>& coef, double z) {
    T acc(0);
    for (int i = static_cast<int>(coef.size()) - 1; i >= 0; --i) acc = acc * T(z) + coef[i];
    return acc;
}

}  // namespace detail

// Pfaffian of a validated skew matrix, scale-accumulated.
ScaledValue pfaffian(const SkewMatrix& a);

// Pfaffian of a complex antisymmetric matrix (used by the complex-plane
// correlation kernels); antisymmetry checked to 1e-12 relative.
std::complex<double> pfaffian_complex(const Eigen::MatrixXcd& a);

// Determinant with partial pivoting, scale-accumulated.
ScaledValue det_scaled(const Eigen::MatrixXd& m);

// Coefficients c_0..c_m of p(zeta) = det(zeta A + B) for m x m inputs,
// recovered from determinant values at m+1 Chebyshev nodes on [0, 2].
// A held-out node guards against ill-conditioned interpolation; Precision::kHigh
// switches the node determinants and the Newton solve to ~50 significant digits.
std::vector<ScaledValue> det_poly_in_zeta(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                                          Precision precision = Precision::kDouble);

}  // namespace ginibre

#endif
