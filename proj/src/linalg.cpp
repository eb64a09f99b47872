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
#include <qosc/linalg.hpp>

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qosc::linalg {

namespace {

double sign_like(double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); }

// Implicit-shift QL iteration on (d, e) with eigenvector accumulation in z
// (row-major n x n).  Classic EISPACK tql2 scheme.
void tql2(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z, int n) {
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i) - 1] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n) - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[static_cast<size_t>(m)]) +
                            std::fabs(d[static_cast<size_t>(m) + 1]);
                if (std::fabs(e[static_cast<size_t>(m)]) <= 2.3e-16 * dd + 1e-300) break;
            }
            if (m != l) {
                if (++iter == 60) throw std::runtime_error("tql2: too many iterations");
                double g = (d[static_cast<size_t>(l) + 1] - d[static_cast<size_t>(l)]) /
                           (2.0 * e[static_cast<size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
                    e[static_cast<size_t>(l)] / (g + sign_like(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[static_cast<size_t>(i)];
                    double b = c * e[static_cast<size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<size_t>(i) + 1] = r;
                    if (r == 0.0) {
                        d[static_cast<size_t>(i) + 1] -= p;
                        e[static_cast<size_t>(m)] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<size_t>(i) + 1] - p;
                    r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<size_t>(i) + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        size_t ki = static_cast<size_t>(k) * static_cast<size_t>(n);
                        double fk = z[ki + static_cast<size_t>(i) + 1];
                        z[ki + static_cast<size_t>(i) + 1] = s * z[ki + static_cast<size_t>(i)] + c * fk;
                        z[ki + static_cast<size_t>(i)] = c * z[ki + static_cast<size_t>(i)] - s * fk;
                    }
                }
                if (underflow) continue;
                d[static_cast<size_t>(l)] -= p;
                e[static_cast<size_t>(l)] = g;
                e[static_cast<size_t>(m)] = 0.0;
            }
        } while (m != l);
    }

    // sort ascending, permuting eigenvector columns along
    for (int i = 0; i < n - 1; ++i) {
        int k = i;
        double p = d[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            if (d[static_cast<size_t>(j)] < p) {
                k = j;
                p = d[static_cast<size_t>(j)];
            }
        if (k != i) {
            std::swap(d[static_cast<size_t>(k)], d[static_cast<size_t>(i)]);
            for (int row = 0; row < n; ++row) {
                size_t base = static_cast<size_t>(row) * static_cast<size_t>(n);
                std::swap(z[base + static_cast<size_t>(i)], z[base + static_cast<size_t>(k)]);
            }
        }
    }
}

// Householder reduction of a row-major symmetric matrix stored in z to
// tridiagonal (d, e), accumulating the orthogonal transform in z
// (EISPACK tred2 scheme).
void tred2(std::vector<double>& z, std::vector<double>& d, std::vector<double>& e, int n) {
    auto at = [&](int r, int c) -> double& {
        return z[static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)];
    };
    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
            if (scale == 0.0) {
                e[static_cast<size_t>(i)] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<size_t>(i)] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    at(j, i) = at(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[static_cast<size_t>(j)] = g / h;
                    f += e[static_cast<size_t>(j)] * at(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    e[static_cast<size_t>(j)] = g = e[static_cast<size_t>(j)] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        at(j, k) -= f * e[static_cast<size_t>(k)] + g * at(i, k);
                }
            }
        } else {
            e[static_cast<size_t>(i)] = at(i, l);
        }
        d[static_cast<size_t>(i)] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        int l = i - 1;
        if (d[static_cast<size_t>(i)] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
                for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
            }
        }
        d[static_cast<size_t>(i)] = at(i, i);
        at(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) {
            at(j, i) = 0.0;
            at(i, j) = 0.0;
        }
    }
}

}  // namespace

EigenSystem tridiagonal_eigensystem(std::vector<double> diag, std::vector<double> off) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) throw std::invalid_argument("tridiagonal_eigensystem: empty matrix");
    if (off.size() + 1 != diag.size())
        throw std::invalid_argument("tridiagonal_eigensystem: off-diagonal size mismatch");
    EigenSystem sys;
    sys.n = n;
    sys.vectors.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        sys.vectors[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(i)] = 1.0;
    if (n == 1) {
        sys.values = std::move(diag);
        return sys;
    }
    // tql2 expects the off-diagonal shifted by one
    std::vector<double> e(static_cast<size_t>(n), 0.0);
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i)] = off[static_cast<size_t>(i) - 1];
    tql2(diag, e, sys.vectors, n);
    sys.values = std::move(diag);
    return sys;
}

EigenSystem symmetric_eigensystem(const std::vector<double>& dense, int n) {
    if (n <= 0 || dense.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("symmetric_eigensystem: bad dimensions");
    EigenSystem sys;
    sys.n = n;
    sys.vectors = dense;
    sys.values.assign(static_cast<size_t>(n), 0.0);
    if (n == 1) {
        sys.values[0] = dense[0];
        sys.vectors[0] = 1.0;
        return sys;
    }
    std::vector<double> e(static_cast<size_t>(n), 0.0);
    tred2(sys.vectors, sys.values, e, n);
    tql2(sys.values, e, sys.vectors, n);
    return sys;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h, int n) {
    if (n <= 0 || h.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("hermitian_eigenvalues: bad dimensions");
    const int m = 2 * n;
    std::vector<double> embed(static_cast<size_t>(m) * static_cast<size_t>(m), 0.0);
    auto put = [&](int r, int c, double v) {
        embed[static_cast<size_t>(r) * static_cast<size_t>(m) + static_cast<size_t>(c)] = v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const std::complex<double>& v = h[static_cast<size_t>(i) * static_cast<size_t>(n) +
                                              static_cast<size_t>(j)];
            put(i, j, v.real());
            put(i + n, j + n, v.real());
            put(i, j + n, -v.imag());
            put(i + n, j, v.imag());
        }
    EigenSystem sys = symmetric_eigensystem(embed, m);
    // each eigenvalue of the Hermitian matrix appears twice in the embedding
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = sys.values[2 * static_cast<size_t>(i)];
    return out;
}

}  // namespace qosc::linalg
