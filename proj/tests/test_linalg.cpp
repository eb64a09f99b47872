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
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <qosc/linalg.hpp>

using namespace qosc;

namespace {

// max |A v_k - lambda_k v_k| over all k, for row-major symmetric A
double residual(const std::vector<double>& a, const linalg::EigenSystem& sys) {
    const int n = sys.n;
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += a[static_cast<size_t>(i) * n + static_cast<size_t>(j)] *
                       sys.vectors[static_cast<size_t>(j) * n + static_cast<size_t>(k)];
            acc -= sys.values[static_cast<size_t>(k)] *
                   sys.vectors[static_cast<size_t>(i) * n + static_cast<size_t>(k)];
            worst = std::max(worst, std::fabs(acc));
        }
    }
    return worst;
}

double orthogonality_defect(const linalg::EigenSystem& sys) {
    const int n = sys.n;
    double worst = 0.0;
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i)
                dot += sys.vectors[static_cast<size_t>(i) * n + static_cast<size_t>(k)] *
                       sys.vectors[static_cast<size_t>(i) * n + static_cast<size_t>(l)];
            worst = std::max(worst, std::fabs(dot - (k == l ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace

TEST_CASE("tridiagonal 2x2 analytic check") {
    linalg::EigenSystem sys = linalg::tridiagonal_eigensystem({1.0, 1.0}, {2.0});
    CHECK(sys.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sys.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::fabs(sys.vectors[0 * 2 + 1]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
}

TEST_CASE("random tridiagonal eigensystem reconstructs") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    const int n = 61;
    std::vector<double> d(n), e(n - 1);
    for (double& x : d) x = dist(rng);
    for (double& x : e) x = dist(rng);
    linalg::EigenSystem sys = linalg::tridiagonal_eigensystem(d, e);
    std::vector<double> dense(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) dense[static_cast<size_t>(i) * n + i] = d[static_cast<size_t>(i)];
    for (int i = 0; i + 1 < n; ++i) {
        dense[static_cast<size_t>(i) * n + i + 1] = e[static_cast<size_t>(i)];
        dense[static_cast<size_t>(i + 1) * n + i] = e[static_cast<size_t>(i)];
    }
    CHECK(residual(dense, sys) < 1e-12);
    CHECK(orthogonality_defect(sys) < 1e-12);
    for (int i = 0; i + 1 < n; ++i)
        CHECK(sys.values[static_cast<size_t>(i)] <= sys.values[static_cast<size_t>(i) + 1]);
}

TEST_CASE("random dense symmetric eigensystem reconstructs") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int n = 40;
    std::vector<double> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = dist(rng);
            a[static_cast<size_t>(i) * n + j] = v;
            a[static_cast<size_t>(j) * n + i] = v;
        }
    linalg::EigenSystem sys = linalg::symmetric_eigensystem(a, n);
    CHECK(residual(a, sys) < 1e-12);
    CHECK(orthogonality_defect(sys) < 1e-12);
}

TEST_CASE("hermitian eigenvalues through the real embedding") {
    using cd = std::complex<double>;
    std::vector<cd> h = {cd(2.0, 0.0), cd(0.0, 1.0), cd(0.0, -1.0), cd(2.0, 0.0)};
    std::vector<double> ev = linalg::hermitian_eigenvalues(h, 2);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(ev[1] == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("hermitian eigenvalues of a random positive matrix") {
    using cd = std::complex<double>;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    const int n = 12;
    // build G = C C^dagger, positive semidefinite with known trace
    std::vector<cd> c(static_cast<size_t>(n) * n);
    for (cd& v : c) v = cd(dist(rng), dist(rng));
    std::vector<cd> g(static_cast<size_t>(n) * n);
    double trace = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cd acc(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                acc += c[static_cast<size_t>(i) * n + k] * std::conj(c[static_cast<size_t>(j) * n + k]);
            g[static_cast<size_t>(i) * n + j] = acc;
            if (i == j) trace += acc.real();
        }
    std::vector<double> ev = linalg::hermitian_eigenvalues(g, n);
    double sum = 0.0;
    for (double v : ev) {
        CHECK(v > -1e-12);
        sum += v;
    }
    CHECK(sum == doctest::Approx(trace).epsilon(1e-12));
}
