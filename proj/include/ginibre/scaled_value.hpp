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

#ifndef GINIBRE_SCALED_VALUE_HPP
#define GINIBRE_SCALED_VALUE_HPP

#include <cmath>
#include <cstdint>
#include <limits>

namespace ginibre {

// Floating-point value m * 2^e with the exponent kept in a 64-bit integer,
// so products of hundreds of factors of wildly different magnitude never
// overflow or underflow.  Invariant: |m| in [1,2) or m == 0 (then e == 0).
class ScaledValue {
public:
    ScaledValue() : m_(0.0), e_(0) {}
    ScaledValue(double v) : m_(v), e_(0) { normalize(); }  // NOLINT: implicit by design
    ScaledValue(double mantissa, std::int64_t exponent) : m_(mantissa), e_(exponent) { normalize(); }

    double mantissa() const { return m_; }
    std::int64_t exponent() const { return e_; }
    bool is_zero() const { return m_ == 0.0; }
    int sign() const { return m_ > 0.0 ? 1 : (m_ < 0.0 ? -1 : 0); }

    // Saturates: far out-of-range exponents give +-inf or (signed) zero.
    double to_double() const {
        if (m_ == 0.0) return 0.0;
        if (e_ > 1099) return m_ > 0 ? std::numeric_limits<double>::infinity()
                                     : -std::numeric_limits<double>::infinity();
        if (e_ < -1149) return m_ > 0 ? 0.0 : -0.0;
        return std::ldexp(m_, static_cast<int>(e_));
    }

    // log2|value|; requires a nonzero value.
    double log2_abs() const { return std::log2(std::fabs(m_)) + static_cast<double>(e_); }
    double log10_abs() const { return log2_abs() * 0.30102999566398119521; }

    ScaledValue operator-() const {
        ScaledValue r;
        r.m_ = -m_;
        r.e_ = e_;
        return r;
    }

    ScaledValue& operator*=(const ScaledValue& o) {
        m_ *= o.m_;
        e_ += o.e_;
        normalize();
        return *this;
    }
    ScaledValue& operator/=(const ScaledValue& o) {
        m_ /= o.m_;
        e_ -= o.e_;
        normalize();
        return *this;
    }
    ScaledValue& operator+=(const ScaledValue& o) {
        if (o.m_ == 0.0) return *this;
        if (m_ == 0.0) { *this = o; return *this; }
        std::int64_t d = o.e_ - e_;
        if (d > 64) { *this = o; return *this; }
        if (d < -64) return *this;
        m_ += std::ldexp(o.m_, static_cast<int>(d));
        normalize();
        return *this;
    }
    ScaledValue& operator-=(const ScaledValue& o) { return *this += -o; }

    friend ScaledValue operator*(ScaledValue a, const ScaledValue& b) { return a *= b; }
    friend ScaledValue operator/(ScaledValue a, const ScaledValue& b) { return a /= b; }
    friend ScaledValue operator+(ScaledValue a, const ScaledValue& b) { return a += b; }
    friend ScaledValue operator-(ScaledValue a, const ScaledValue& b) { return a -= b; }

    friend bool operator==(const ScaledValue& a, const ScaledValue& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }
    friend bool operator!=(const ScaledValue& a, const ScaledValue& b) { return !(a == b); }
    friend bool operator<(const ScaledValue& a, const ScaledValue& b) {
        return (b - a).sign() > 0;
    }
    friend bool operator>(const ScaledValue& a, const ScaledValue& b) { return b < a; }
    friend bool operator<=(const ScaledValue& a, const ScaledValue& b) { return !(b < a); }
    friend bool operator>=(const ScaledValue& a, const ScaledValue& b) { return !(a < b); }

    friend ScaledValue abs(const ScaledValue& a) {
        ScaledValue r = a;
        r.m_ = std::fabs(r.m_);
        return r;
    }
    friend ScaledValue sqrt(const ScaledValue& a) {
        ScaledValue r = a;
        if (r.m_ == 0.0) return r;
        if (r.e_ % 2 != 0) {
            r.m_ *= 2.0;
            r.e_ -= 1;
        }
        r.m_ = std::sqrt(r.m_);
        r.e_ /= 2;
        r.normalize();
        return r;
    }

    // 2^k as an exact ScaledValue.
    static ScaledValue pow2(std::int64_t k) {
        ScaledValue r;
        r.m_ = 1.0;
        r.e_ = k;
        return r;
    }

    // 2^l2 for real l2; entry point for values assembled in log space.
    static ScaledValue from_log2(double l2) {
        double fl = std::floor(l2);
        return ScaledValue(std::exp2(l2 - fl), static_cast<std::int64_t>(fl));
    }

private:
    void normalize() {
        if (m_ == 0.0 || !std::isfinite(m_)) {
            e_ = 0;
            return;
        }
        int de = 0;
        m_ = std::frexp(m_, &de);  // |m_| in [0.5, 1)
        m_ *= 2.0;                 // |m_| in [1, 2)
        e_ += de - 1;
    }

    double m_;
    std::int64_t e_;
};

}  // namespace ginibre

#endif
