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
#include <qosc/dynamics.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <qosc/specfun.hpp>

namespace qosc::dynamics {

using specfun::Scaled;

InitialState::InitialState(int s1_, int s2_) : s1(s1_), s2(s2_) {
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("InitialState: quantum numbers must be >= 0");
    if (s1 + s2 > max_total_excitation)
        throw std::invalid_argument("InitialState: s1 + s2 exceeds the supported total of 60");
}

MixingParams mixing(const model::EvolutionPoint& e) {
    if (!(e.r > 0.0) || !(e.r < 1.0))
        throw std::domain_error("mixing: R must lie strictly in (0, 1); endpoints have closed"
                                " identity/swap tables");
    MixingParams m;
    const double q = (1.0 - e.r) / e.r;
    m.mu = std::sqrt(1.0 + q * e.cos_phi * e.cos_phi) - e.cos_phi * std::sqrt(q);
    m.phase_unit = std::acos(std::clamp(std::sqrt(1.0 - e.r) * e.sin_phi, -1.0, 1.0));
    return m;
}

double coupling_amplitude(int n, int m, int k, int p, double mu) {
    if (n < 0 || m < 0 || k < 0 || p < 0)
        throw std::domain_error("coupling_amplitude: indices must be nonnegative");
    if (n + m != k + p)
        throw std::domain_error("coupling_amplitude: index mismatch, n+m must equal k+p");
    if (mu <= 0.0) throw std::domain_error("coupling_amplitude: mu must be positive");
    const int total = n + m;
    if (mu < 1.0) {
        // exact relabeling A(1/mu)[k][n] = (-1)^{N-n} A(mu)[N-k][n]; the
        // terminating sum cancels like mu^{-2k} below mu = 1, so always
        // evaluate on the well-conditioned side
        const double flipped = coupling_amplitude(n, m, p, k, 1.0 / mu);
        return ((total - n) % 2 == 0) ? flipped : -flipped;
    }
    using specfun::DDouble;
    const DDouble one_plus_mu2 = DDouble(1.0) + DDouble(mu) * DDouble(mu);
    Scaled denom = specfun::scaled_pow(Scaled(one_plus_mu2, 0), total);
    Scaled pref = specfun::scaled_pow(Scaled(mu), k + n) *
                  scaled_sqrt(specfun::factorial_scaled(k) * specfun::factorial_scaled(p) /
                              (specfun::factorial_scaled(n) * specfun::factorial_scaled(m)) / denom);
    return (pref * specfun::jacobi_mixing(k, total, p - n, mu)).to_double();
}

std::vector<double> coupling_matrix(int total, double mu) {
    if (total < 0 || total > max_total_excitation)
        throw std::invalid_argument("coupling_matrix: total out of range");
    const int dim = total + 1;
    std::vector<double> out(static_cast<size_t>(dim) * static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k)
        for (int n = 0; n < dim; ++n)
            out[static_cast<size_t>(k) * static_cast<size_t>(dim) + static_cast<size_t>(n)] =
                coupling_amplitude(n, total - n, k, total - k, mu);
    return out;
}

namespace {

AmplitudeTable delta_table(const InitialState& st, int pos, double r) {
    AmplitudeTable t;
    t.s1 = st.s1;
    t.s2 = st.s2;
    t.r = r;
    t.c.assign(static_cast<size_t>(st.total()) + 1, {0.0, 0.0});
    t.c[static_cast<size_t>(pos)] = {1.0, 0.0};
    return t;
}

AmplitudeTable sum_table(const InitialState& st, const std::vector<double>& matrix,
                         double phase_unit, double r) {
    const int dim = st.total() + 1;
    AmplitudeTable t;
    t.s1 = st.s1;
    t.s2 = st.s2;
    t.r = r;
    t.c.assign(static_cast<size_t>(dim), {0.0, 0.0});
    for (int n = 0; n < dim; ++n) {
        double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
        for (int k = 0; k < dim; ++k) {
            const double w =
                matrix[static_cast<size_t>(k) * static_cast<size_t>(dim) + static_cast<size_t>(st.s1)] *
                matrix[static_cast<size_t>(k) * static_cast<size_t>(dim) + static_cast<size_t>(n)];
            const double angle = -2.0 * static_cast<double>(k) * phase_unit;
            double term_re = w * std::cos(angle);
            double term_im = w * std::sin(angle);
            double y = term_re - cre;
            double s = re + y;
            cre = (s - re) - y;
            re = s;
            y = term_im - cim;
            s = im + y;
            cim = (s - im) - y;
            im = s;
        }
        t.c[static_cast<size_t>(n)] = {re, im};
    }
    return t;
}

}  // namespace

AmplitudeTable amplitudes(const InitialState& st, const model::EvolutionPoint& e) {
    if (e.r <= 0.0) return delta_table(st, st.s1, 0.0);
    if (e.r >= 1.0) return delta_table(st, st.s2, 1.0);  // full swap, reachable on resonance only
    const MixingParams mix = mixing(e);
    return sum_table(st, coupling_matrix(st.total(), mix.mu), mix.phase_unit, e.r);
}

SchmidtSpectrum schmidt_modes(const AmplitudeTable& a) {
    SchmidtSpectrum s;
    s.lambda.resize(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) s.lambda[i] = std::norm(a.c[i]);
    return s;
}

std::vector<double> probabilities(const AmplitudeTable& a) { return schmidt_modes(a).lambda; }

SpectrumEvaluator::SpectrumEvaluator(InitialState st, double epsilon, model::Branch branch)
    : st_(st), epsilon_(epsilon), branch_(branch), r_max_(1.0 / (1.0 + epsilon * epsilon)) {
    // mu depends on epsilon only (the R dependence cancels in the constrained
    // phase), so the coefficient matrix can be cached for a whole sweep.
    const double mu = std::sqrt(1.0 + epsilon * epsilon) + epsilon;
    matrix_ = coupling_matrix(st_.total(), mu);
}

AmplitudeTable SpectrumEvaluator::amplitudes_at_r(double r) const {
    if (r <= 0.0) return delta_table(st_, st_.s1, 0.0);
    if (r >= 1.0) return delta_table(st_, st_.s2, 1.0);
    const model::EvolutionPoint e = model::point_from_r(r, epsilon_, branch_);
    const MixingParams mix = mixing(e);
    return sum_table(st_, matrix_, mix.phase_unit, r);
}

SchmidtSpectrum SpectrumEvaluator::spectrum_at_r(double r) const {
    return schmidt_modes(amplitudes_at_r(r));
}

}  // namespace qosc::dynamics
