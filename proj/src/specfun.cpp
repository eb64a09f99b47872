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
#include <qosc/specfun.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qosc::specfun {

namespace {

constexpr int kLogFactorialTable = 16384;
constexpr int kFactorialTable = 2001;
constexpr int kPascalRows = 132;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog4 = 1.3862943611198906188;

const std::vector<double>& log_factorial_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kLogFactorialTable);
        t[0] = 0.0;
        // 20! still fits an exact 64-bit integer; log of the exact product.
        unsigned long long f = 1;
        for (int n = 1; n <= 20; ++n) {
            f *= static_cast<unsigned long long>(n);
            t[n] = std::log(static_cast<double>(f));
        }
        DDouble acc(t[20]);
        for (int n = 21; n < kLogFactorialTable; ++n) {
            acc = acc + DDouble(std::log(static_cast<double>(n)));
            t[n] = acc.to_double();
        }
        return t;
    }();
    return table;
}

const std::vector<Scaled>& factorial_table() {
    static const std::vector<Scaled> table = [] {
        std::vector<Scaled> t(kFactorialTable);
        t[0] = Scaled(1.0);
        for (int n = 1; n < kFactorialTable; ++n)
            t[n] = t[n - 1] * Scaled(static_cast<double>(n));
        return t;
    }();
    return table;
}

// Pascal triangle in compensated arithmetic; exact up to the 106-bit
// mantissa, which covers every row stored here.
const std::vector<std::vector<DDouble>>& pascal_rows() {
    static const std::vector<std::vector<DDouble>> rows = [] {
        std::vector<std::vector<DDouble>> r(kPascalRows);
        for (int n = 0; n < kPascalRows; ++n) {
            r[n].resize(static_cast<size_t>(n) + 1);
            r[n][0] = DDouble(1.0);
            r[n][static_cast<size_t>(n)] = DDouble(1.0);
            for (int j = 1; j < n; ++j)
                r[n][static_cast<size_t>(j)] =
                    r[n - 1][static_cast<size_t>(j) - 1] + r[n - 1][static_cast<size_t>(j)];
        }
        return r;
    }();
    return rows;
}

// Shared terminating-sum core.  u = (x-1)/2 and v = (x+1)/2 arrive already in
// compensated form so the only rounding left is in the binomials themselves.
Scaled jacobi_core(int k, double a, long b, const DDouble& u, const DDouble& v) {
    std::vector<Scaled> upow(static_cast<size_t>(k) + 1), vpow(static_cast<size_t>(k) + 1);
    upow[0] = Scaled(1.0);
    vpow[0] = Scaled(1.0);
    Scaled us(u, 0), vs(v, 0);
    for (int i = 1; i <= k; ++i) {
        upow[static_cast<size_t>(i)] = upow[static_cast<size_t>(i) - 1] * us;
        vpow[static_cast<size_t>(i)] = vpow[static_cast<size_t>(i) - 1] * vs;
    }
    Scaled sum;
    for (int j = 0; j <= k; ++j) {
        Scaled c1 = generalized_binomial(a + static_cast<double>(k), j);
        if (c1.is_zero()) continue;
        long upper = static_cast<long>(k) + b;
        Scaled c2;
        if (upper >= 0) {
            c2 = binomial_scaled(upper, static_cast<long>(k - j));
        } else {
            c2 = generalized_binomial(static_cast<double>(upper), k - j);
        }
        if (c2.is_zero()) continue;
        sum = sum + c1 * c2 * upow[static_cast<size_t>(k - j)] * vpow[static_cast<size_t>(j)];
    }
    return sum;
}

}  // namespace

double SignedLogValue::value() const {
    if (sign == 0) return 0.0;
    return static_cast<double>(sign) * std::exp(log_magnitude);
}

SignedLogValue SignedLogValue::from_scaled(const Scaled& s) {
    SignedLogValue v;
    v.sign = s.sign();
    v.log_magnitude = v.sign == 0 ? 0.0 : s.log_abs();
    return v;
}

double log_factorial(int n) {
    if (n < 0) throw std::domain_error("log_factorial: n must be nonnegative");
    if (n < kLogFactorialTable) return log_factorial_table()[static_cast<size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_gamma_half(int n2) {
    if (n2 <= 0) throw std::domain_error("log_gamma_half: argument must be positive");
    if (n2 % 2 == 0) return log_factorial(n2 / 2 - 1);
    // Gamma(k + 1/2) = (2k)! sqrt(pi) / (4^k k!)
    int k = (n2 - 1) / 2;
    return log_factorial(2 * k) - log_factorial(k) - k * kLog4 + 0.5 * kLogPi;
}

Scaled factorial_scaled(int n) {
    if (n < 0) throw std::domain_error("factorial_scaled: n must be nonnegative");
    if (n >= kFactorialTable) throw std::domain_error("factorial_scaled: n out of range");
    return factorial_table()[static_cast<size_t>(n)];
}

Scaled binomial_scaled(long n, long r) {
    if (n < 0) throw std::domain_error("binomial_scaled: n must be nonnegative");
    if (r < 0 || r > n) return Scaled{};
    if (n < kPascalRows)
        return Scaled(pascal_rows()[static_cast<size_t>(n)][static_cast<size_t>(r)], 0);
    r = std::min(r, n - r);
    Scaled acc(1.0);
    for (long i = 0; i < r; ++i)
        acc = acc * Scaled(static_cast<double>(n - i)) / Scaled(static_cast<double>(i + 1));
    return acc;
}

Scaled generalized_binomial(double u, int j) {
    if (j < 0) return Scaled{};
    if (j == 0) return Scaled(1.0);
    double rounded = std::nearbyint(u);
    if (u == rounded && std::fabs(u) < 1e15) {
        long iu = static_cast<long>(rounded);
        if (iu >= 0) return binomial_scaled(iu, j);
        // C(-q, j) = (-1)^j C(q + j - 1, j), an exact integer.
        long q = -iu;
        Scaled c = binomial_scaled(q + j - 1, j);
        if (j % 2 != 0) c.m = -c.m;
        return c;
    }
    Scaled acc(1.0);
    for (int i = 0; i < j; ++i) acc = acc * Scaled(u - static_cast<double>(i));
    return acc / factorial_scaled(j);
}

SignedLogValue jacobi(int k, double a, long b, double x) {
    if (k < 0) throw std::domain_error("jacobi: degree must be nonnegative");
    if (k == 0) return SignedLogValue{0.0, 1};
    DDouble u = detail::two_sum(x, -1.0);
    DDouble v = detail::two_sum(x, 1.0);
    u.hi *= 0.5;
    u.lo *= 0.5;
    v.hi *= 0.5;
    v.lo *= 0.5;
    return SignedLogValue::from_scaled(jacobi_core(k, a, b, u, v));
}

double jacobi_value(int k, double a, long b, double x) { return jacobi(k, a, b, x).value(); }

Scaled jacobi_mixing(int k, int total, long b, double mu) {
    if (k < 0) throw std::domain_error("jacobi_mixing: degree must be nonnegative");
    if (mu <= 0.0) throw std::domain_error("jacobi_mixing: mu must be positive");
    if (k == 0) return Scaled(1.0);
    DDouble mu2 = DDouble(mu) * DDouble(mu);
    DDouble u = -((DDouble(1.0) + mu2) / mu2);  // (x-1)/2 at x = -(2+mu^2)/mu^2
    DDouble v = -(DDouble(1.0) / mu2);          // (x+1)/2
    return jacobi_core(k, -static_cast<double>(1 + total), b, u, v);
}

double gauss_2f1_terminating(int s, double z) {
    if (s < 0) throw std::domain_error("gauss_2f1_terminating: s must be nonnegative");
    double sum = 0.0, comp = 0.0;
    double binom = 1.0;  // C(s, n)
    double zp = 1.0;
    for (int n = 0; n <= s; ++n) {
        double term = binom * binom * zp;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        // multiply before dividing: keeps C(s,n) an exact integer while it
        // fits the 53-bit mantissa
        binom = binom * static_cast<double>(s - n) / static_cast<double>(n + 1);
        zp *= z;
    }
    return sum;
}

double genhyp_4f3_hb(int s) {
    if (s < 0) throw std::domain_error("genhyp_4f3_hb: s must be nonnegative");
    double sum = 1.0, comp = 0.0;
    double term = 1.0;
    for (int n = 0; n < s; ++n) {
        // ratio of consecutive terms from the Pochhammer quotients
        double num = (0.5 + n) * (0.5 + n) * static_cast<double>(s - n) * static_cast<double>(s - n);
        double h = 0.5 - static_cast<double>(s) + static_cast<double>(n);
        double den = (1.0 + n) * h * h * (1.0 + n);
        if (den == 0.0)
            throw std::logic_error("genhyp_4f3_hb: Pochhammer hit zero inside terminating range");
        term *= num / den;
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace qosc::specfun
