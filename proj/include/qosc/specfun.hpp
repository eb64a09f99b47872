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

#include <qosc/ddouble.hpp>

namespace qosc::specfun {

/// Magnitude/sign split of a real value: sign * exp(log_magnitude).
/// sign == 0 means the value is exactly zero (log_magnitude is then
/// meaningless).
struct SignedLogValue {
    double log_magnitude = 0.0;
    int sign = 0;

    double value() const;
    static SignedLogValue from_scaled(const Scaled& s);
};

/// ln(n!).  Exact integer product for n <= 20, compensated cumulative
/// sum of logs beyond.
double log_factorial(int n);

/// ln Gamma(n2/2) for positive n2 (half-integer arguments of the gamma
/// function; even n2 reduces to a factorial, odd n2 uses Gamma(1/2) = sqrt(pi)
/// and the ascending recurrence).
double log_gamma_half(int n2);

/// n! as a scaled compensated value, n <= 2000.
Scaled factorial_scaled(int n);

/// Binomial coefficient C(n, r) for n >= 0 as a scaled compensated value
/// (exact for all n reachable here).  r outside [0, n] gives zero.
Scaled binomial_scaled(long n, long r);

/// Generalized binomial C(u, j) = u(u-1)...(u-j+1)/j! as a falling-factorial
/// product.  Finite and pole-free for every real u, including the
/// negative-integer upper arguments needed by the coupling coefficients.
Scaled generalized_binomial(double u, int j);

/// Jacobi polynomial P_k^{(a,b)}(x) through the terminating sum
///   sum_j C(k+a, j) C(k+b, k-j) ((x-1)/2)^{k-j} ((x+1)/2)^j,
/// valid for any real a (negative integers included) and integer b.
SignedLogValue jacobi(int k, double a, long b, double x);
double jacobi_value(int k, double a, long b, double x);

/// P_k^{(-(1+total), b)}(-(2+mu^2)/mu^2), the parameter family entering the
/// sector coupling coefficients.  The argument is formed from mu entirely in
/// compensated arithmetic; rounding x to a double first would lose the
/// cancellation-limited accuracy this family needs at large degrees.
Scaled jacobi_mixing(int k, int total, long b, double mu);

/// Terminating Gauss sum 2F1(-s, -s; 1; z) = sum_n C(s,n)^2 z^n.
double gauss_2f1_terminating(int s, double z);

/// 4F3(1/2, 1/2, -s, -s; 1, 1/2-s, 1/2-s; 1) via its s+1 terminating terms.
double genhyp_4f3_hb(int s);

}  // namespace qosc::specfun
