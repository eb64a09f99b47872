/**
 * Copyright 2026 The qosc authors
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
#pragma once

#include <cmath>
#include <cstdlib>

namespace qosc::specfun {

/// Compensated (double-double) value: an unevaluated sum hi + lo with
/// |lo| <= ulp(hi)/2, carrying roughly 31 decimal digits.  The terminating
/// Jacobi sums evaluated in this module cancel by up to ~16 decimal digits
/// at total quantum number 60, so plain doubles are not enough there.
/// Requires round-to-nearest and no value-changing FP optimizations
/// (the build must not enable -ffast-math).
struct DDouble {
    double hi = 0.0;
    double lo = 0.0;

    DDouble() = default;
    constexpr DDouble(double h, double l) : hi(h), lo(l) {}
    explicit constexpr DDouble(double x) : hi(x), lo(0.0) {}

    double to_double() const { return hi + lo; }
    bool is_zero() const { return hi == 0.0 && lo == 0.0; }
    DDouble operator-() const { return {-hi, -lo}; }
};

namespace detail {

// Error-free transforms (Knuth / Dekker).
inline DDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// Requires |a| >= |b| or a == 0.
inline DDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline void split(double a, double& hi, double& lo) {
    double t = 134217729.0 * a;  // 2^27 + 1
    hi = t - (t - a);
    lo = a - hi;
}

inline DDouble two_prod(double a, double b) {
    double p = a * b;
    double ah, al, bh, bl;
    split(a, ah, al);
    split(b, bh, bl);
    double err = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    return {p, err};
}

}  // namespace detail

inline DDouble operator+(const DDouble& a, const DDouble& b) {
    DDouble s = detail::two_sum(a.hi, b.hi);
    DDouble t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline DDouble operator-(const DDouble& a, const DDouble& b) { return a + (-b); }

inline DDouble operator*(const DDouble& a, const DDouble& b) {
    DDouble p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DDouble operator/(const DDouble& a, const DDouble& b) {
    double q1 = a.hi / b.hi;
    DDouble r = a - DDouble(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - DDouble(q2) * b;
    double q3 = r.hi / b.hi;
    DDouble q = detail::quick_two_sum(q1, q2);
    return q + DDouble(q3);
}

inline DDouble dd_sqrt(const DDouble& a) {
    if (a.is_zero()) return DDouble(0.0);
    double s = std::sqrt(a.hi);
    DDouble e = a - DDouble(s) * DDouble(s);
    return detail::quick_two_sum(s, e.to_double() / (2.0 * s));
}

/// DDouble mantissa in [1,2) paired with a binary exponent.  Keeps factorial
/// ratios, mu powers and Jacobi terms representable far outside double range
/// (degrees up to ~100 with |x| up to 1e4) without losing the compensated
/// precision.
struct Scaled {
    DDouble m{0.0, 0.0};
    long e = 0;

    Scaled() = default;
    Scaled(DDouble mantissa, long exponent) : m(mantissa), e(exponent) { normalize(); }
    explicit Scaled(double x) : m(x), e(0) { normalize(); }

    bool is_zero() const { return m.hi == 0.0; }

    void normalize() {
        if (m.hi == 0.0) {
            m.lo = 0.0;
            e = 0;
            return;
        }
        int k = 0;
        std::frexp(m.hi, &k);  // m.hi = f * 2^k, |f| in [0.5, 1)
        int shift = 1 - k;     // bring |hi| into [1, 2)
        if (shift != 0) {
            m.hi = std::ldexp(m.hi, shift);
            m.lo = std::ldexp(m.lo, shift);
            e -= shift;
        }
    }

    double to_double() const {
        if (is_zero()) return 0.0;
        if (e > 1070) return m.hi > 0 ? HUGE_VAL : -HUGE_VAL;
        if (e < -1070) return 0.0;
        return std::ldexp(m.hi, static_cast<int>(e)) + std::ldexp(m.lo, static_cast<int>(e));
    }

    /// Natural log of |value|; caller must ensure non-zero.
    double log_abs() const {
        return static_cast<double>(e) * 0.69314718055994530942 + std::log(std::fabs(m.hi)) +
               std::log1p(m.lo / m.hi);
    }

    int sign() const { return m.hi > 0.0 ? 1 : (m.hi < 0.0 ? -1 : 0); }
};

inline Scaled operator*(const Scaled& a, const Scaled& b) {
    if (a.is_zero() || b.is_zero()) return Scaled{};
    return Scaled(a.m * b.m, a.e + b.e);
}

inline Scaled operator/(const Scaled& a, const Scaled& b) {
    if (a.is_zero()) return Scaled{};
    return Scaled(a.m / b.m, a.e - b.e);
}

inline Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long de = a.e - b.e;
    if (de > 110) return a;
    if (de < -110) return b;
    if (de >= 0) {
        DDouble shifted{std::ldexp(b.m.hi, static_cast<int>(-de)),
                        std::ldexp(b.m.lo, static_cast<int>(-de))};
        return Scaled(a.m + shifted, a.e);
    }
    DDouble shifted{std::ldexp(a.m.hi, static_cast<int>(de)),
                    std::ldexp(a.m.lo, static_cast<int>(de))};
    return Scaled(shifted + b.m, b.e);
}

inline Scaled operator-(const Scaled& a, const Scaled& b) {
    Scaled nb = b;
    nb.m = -nb.m;
    return a + nb;
}

inline Scaled scaled_sqrt(const Scaled& a) {
    if (a.is_zero()) return Scaled{};
    DDouble m = a.m;
    long e = a.e;
    if (e % 2 != 0) {  // make the exponent even; mantissa moves to [1,4)
        m.hi *= 2.0;
        m.lo *= 2.0;
        e -= 1;
    }
    return Scaled(dd_sqrt(m), e / 2);
}

inline Scaled scaled_pow(Scaled base, long n) {
    Scaled result(1.0);
    if (n < 0) {
        base = Scaled(1.0) / base;
        n = -n;
    }
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

}  // namespace qosc::specfun
