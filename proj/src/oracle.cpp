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
#include <qosc/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <qosc/specfun.hpp>

namespace qosc::oracle {

SectorHamiltonian SectorHamiltonian::build(int total, double delta_omega, double omega_rabi) {
    if (total < 0) throw std::invalid_argument("SectorHamiltonian: total must be nonnegative");
    SectorHamiltonian h;
    h.total = total;
    h.delta_omega = delta_omega;
    h.omega_rabi = omega_rabi;
    h.diag.resize(static_cast<size_t>(total) + 1);
    h.off.resize(static_cast<size_t>(total));
    for (int n = 0; n <= total; ++n)
        h.diag[static_cast<size_t>(n)] = delta_omega * static_cast<double>(total - n);
    for (int n = 0; n < total; ++n)
        h.off[static_cast<size_t>(n)] =
            0.5 * omega_rabi * std::sqrt(static_cast<double>(n + 1) * static_cast<double>(total - n));
    return h;
}

SectorEvolver::SectorEvolver(const SectorHamiltonian& h)
    : eig_(linalg::tridiagonal_eigensystem(h.diag, h.off)), total_(h.total) {}

SectorState SectorEvolver::evolve(int s1, double t) const {
    const int dim = total_ + 1;
    if (s1 < 0 || s1 >= dim) throw std::invalid_argument("SectorEvolver: s1 outside the sector");
    SectorState out;
    out.amplitudes.assign(static_cast<size_t>(dim), {0.0, 0.0});
    for (int k = 0; k < dim; ++k) {
        const double overlap =
            eig_.vectors[static_cast<size_t>(s1) * static_cast<size_t>(dim) + static_cast<size_t>(k)];
        const double angle = -eig_.values[static_cast<size_t>(k)] * t;
        const std::complex<double> w = overlap * std::complex<double>(std::cos(angle), std::sin(angle));
        for (int n = 0; n < dim; ++n)
            out.amplitudes[static_cast<size_t>(n)] +=
                w * eig_.vectors[static_cast<size_t>(n) * static_cast<size_t>(dim) +
                                 static_cast<size_t>(k)];
    }
    return out;
}

SectorState evolve_sector(const SectorHamiltonian& h, int s1, int s2, double t) {
    if (s1 + s2 != h.total)
        throw std::invalid_argument("evolve_sector: s1 + s2 must equal the sector total");
    return SectorEvolver(h).evolve(s1, t);
}

dynamics::SchmidtSpectrum oracle_schmidt(const SectorState& state) {
    dynamics::SchmidtSpectrum s;
    s.lambda.resize(state.amplitudes.size());
    for (size_t i = 0; i < state.amplitudes.size(); ++i) s.lambda[i] = std::norm(state.amplitudes[i]);
    return s;
}

dynamics::AmplitudeTable beam_splitter_amplitudes(int s1, int s2, double theta, double phi) {
    if (s1 < 0 || s2 < 0)
        throw std::invalid_argument("beam_splitter_amplitudes: quantum numbers must be >= 0");
    const int total = s1 + s2;
    const double ct = std::cos(theta), st = std::sin(theta);
    dynamics::AmplitudeTable table;
    table.s1 = s1;
    table.s2 = s2;
    table.r = st * st;
    table.c.assign(static_cast<size_t>(total) + 1, {0.0, 0.0});
    for (int n = 0; n <= total; ++n) {
        const int m = total - n;
        // u1^j u2^{s1-j} from the first factor, u1^{n-j} u2^{m-s1+j} from the
        // second; the e^{i phi} factors collapse to one overall e^{i phi (s1-n)}
        double coeff = 0.0;
        for (int j = std::max(0, n - s2); j <= std::min(s1, n); ++j) {
            const double b1 = std::exp(specfun::log_factorial(s1) - specfun::log_factorial(j) -
                                       specfun::log_factorial(s1 - j));
            const double b2 = std::exp(specfun::log_factorial(s2) - specfun::log_factorial(n - j) -
                                       specfun::log_factorial(s2 - n + j));
            const double sign = (n - j) % 2 == 0 ? 1.0 : -1.0;
            coeff += sign * b1 * b2 * std::pow(ct, j + s2 - n + j) * std::pow(st, s1 - j + n - j);
        }
        const double weight = std::exp(0.5 * (specfun::log_factorial(n) + specfun::log_factorial(m) -
                                              specfun::log_factorial(s1) - specfun::log_factorial(s2)));
        table.c[static_cast<size_t>(n)] =
            coeff * weight * std::polar(1.0, phi * static_cast<double>(s1 - n));
    }
    return table;
}

TruncatedTwoModeHamiltonian::TruncatedTwoModeHamiltonian(double omega1_, double omega2_,
                                                         double alpha_, double beta_, double gamma_,
                                                         double delta_, int n_max_)
    : n_max(n_max_), omega1(omega1_), omega2(omega2_), alpha(alpha_), beta(beta_) {
    if (n_max < 1) throw std::invalid_argument("TruncatedTwoModeHamiltonian: n_max must be >= 1");
    const double scale =
        std::max({std::fabs(alpha_), std::fabs(beta_), std::fabs(gamma_), std::fabs(delta_), 1e-300});
    if (std::fabs(gamma_ - beta_) > 1e-12 * scale || std::fabs(delta_ - alpha_) > 1e-12 * scale)
        throw std::invalid_argument(
            "TruncatedTwoModeHamiltonian: couplings outside the Hermitian subfamily "
            "(need gamma = beta and delta = alpha)");
}

std::vector<double> TruncatedTwoModeHamiltonian::dense() const {
    const int per = n_max + 1;
    const int d = dim();
    std::vector<double> h(static_cast<size_t>(d) * static_cast<size_t>(d), 0.0);
    auto idx = [per](int n1, int n2) { return n1 * per + n2; };
    auto add_sym = [&](int a, int b, double v) {
        h[static_cast<size_t>(a) * static_cast<size_t>(d) + static_cast<size_t>(b)] += v;
        if (a != b) h[static_cast<size_t>(b) * static_cast<size_t>(d) + static_cast<size_t>(a)] += v;
    };
    for (int n1 = 0; n1 < per; ++n1)
        for (int n2 = 0; n2 < per; ++n2) {
            const int here = idx(n1, n2);
            h[static_cast<size_t>(here) * static_cast<size_t>(d) + static_cast<size_t>(here)] =
                omega1 * n1 + omega2 * n2;
            if (n1 > 0 && n2 < n_max)  // beta (a1 a2' + a1' a2)
                add_sym(idx(n1 - 1, n2 + 1), here, beta * std::sqrt(static_cast<double>(n1) *
                                                                    static_cast<double>(n2 + 1)));
            if (n1 > 0 && n2 > 0)  // alpha (a1 a2 + a1' a2')
                add_sym(idx(n1 - 1, n2 - 1), here,
                        alpha * std::sqrt(static_cast<double>(n1) * static_cast<double>(n2)));
        }
    return h;
}

TruncatedEvolver::TruncatedEvolver(const TruncatedTwoModeHamiltonian& h)
    : eig_(linalg::symmetric_eigensystem(h.dense(), h.dim())), n_max_(h.n_max) {}

TruncatedEvolutionResult TruncatedEvolver::evolve(int s1, int s2, double t) const {
    const int per = n_max_ + 1;
    const int d = per * per;
    if (s1 < 0 || s2 < 0 || s1 > n_max_ || s2 > n_max_)
        throw std::invalid_argument("TruncatedEvolver: initial state outside the cutoff");
    const int start = s1 * per + s2;
    std::vector<std::complex<double>> psi(static_cast<size_t>(d), {0.0, 0.0});
    for (int k = 0; k < d; ++k) {
        const double overlap =
            eig_.vectors[static_cast<size_t>(start) * static_cast<size_t>(d) + static_cast<size_t>(k)];
        if (overlap == 0.0) continue;
        const double angle = -eig_.values[static_cast<size_t>(k)] * t;
        const std::complex<double> w = overlap * std::complex<double>(std::cos(angle), std::sin(angle));
        for (int i = 0; i < d; ++i)
            psi[static_cast<size_t>(i)] +=
                w * eig_.vectors[static_cast<size_t>(i) * static_cast<size_t>(d) +
                                 static_cast<size_t>(k)];
    }

    TruncatedEvolutionResult res;
    double norm2 = 0.0, tail = 0.0;
    for (int n1 = 0; n1 < per; ++n1)
        for (int n2 = 0; n2 < per; ++n2) {
            const double p = std::norm(psi[static_cast<size_t>(n1 * per + n2)]);
            norm2 += p;
            if (n1 > n_max_ - 5 || n2 > n_max_ - 5) tail += p;
        }
    res.norm_drift = std::fabs(std::sqrt(norm2) - 1.0);
    res.tail_probability = tail;
    res.truncation_safe = tail < 1e-10;

    // rho_1[n][n'] = sum_m c_{n m} conj(c_{n' m})
    std::vector<std::complex<double>> rho(static_cast<size_t>(per) * static_cast<size_t>(per),
                                          {0.0, 0.0});
    for (int n = 0; n < per; ++n)
        for (int np = 0; np <= n; ++np) {
            std::complex<double> acc(0.0, 0.0);
            for (int m = 0; m < per; ++m)
                acc += psi[static_cast<size_t>(n * per + m)] *
                       std::conj(psi[static_cast<size_t>(np * per + m)]);
            rho[static_cast<size_t>(n) * static_cast<size_t>(per) + static_cast<size_t>(np)] = acc;
            rho[static_cast<size_t>(np) * static_cast<size_t>(per) + static_cast<size_t>(n)] =
                std::conj(acc);
        }
    std::vector<double> lam = linalg::hermitian_eigenvalues(rho, per);
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    for (double& v : lam)
        if (v < 0.0 && v > -1e-10) v = 0.0;  // PSD up to roundoff
    res.spectrum.lambda = std::move(lam);
    return res;
}

TruncatedEvolutionResult evolve_truncated(const TruncatedTwoModeHamiltonian& h, int s1, int s2,
                                          double t) {
    return TruncatedEvolver(h).evolve(s1, s2, t);
}

}  // namespace qosc::oracle
