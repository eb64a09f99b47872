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
#include <qosc/entanglement.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include <qosc/specfun.hpp>

namespace qosc::entanglement {

namespace {

constexpr double kLogPi = 1.1447298858494001741;
constexpr double kLog2 = 0.69314718055994530942;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double von_neumann(const dynamics::SchmidtSpectrum& spectrum) {
    double s = 0.0;
    for (double lam : spectrum.lambda) s -= xlogx(lam);
    return s;
}

double schmidt_number(const dynamics::SchmidtSpectrum& spectrum) {
    double p = 0.0;
    for (double lam : spectrum.lambda) p += lam * lam;
    return 1.0 / p;
}

EntanglementReport closed_form(int s1, int s2, double r) {
    if (r < 0.0 || r > 1.0) throw std::invalid_argument("closed_form: R must lie in [0, 1]");
    EntanglementReport rep;
    rep.s1 = s1;
    rep.s2 = s2;
    rep.r = r;
    const double u = r * (1.0 - r);
    if (s1 == 1 && s2 == 1) {
        const double d = (1.0 - 2.0 * r) * (1.0 - 2.0 * r);
        rep.entropy = -xlogx(d) - 2.0 * xlogx(2.0 * u);
        rep.schmidt_number = 1.0 / (1.0 - 8.0 * u * (1.0 - 3.0 * u));
    } else if ((s1 == 0 && s2 == 2) || (s1 == 2 && s2 == 0)) {
        rep.entropy = 2.0 * (r - 1.0) * r * kLog2 - 2.0 * xlogx(1.0 - r) - 2.0 * xlogx(r);
        rep.schmidt_number = 1.0 / (1.0 - 2.0 * u * (2.0 - 3.0 * u));
    } else if (s1 == 2 && s2 == 2) {
        const double d = (1.0 - 2.0 * r) * (1.0 - 2.0 * r);
        rep.entropy = -2.0 * xlogx(6.0 * u * d) - 2.0 * xlogx(6.0 * u * u) -
                      xlogx((1.0 - 6.0 * u) * (1.0 - 6.0 * u));
        rep.schmidt_number =
            1.0 / (1.0 - 24.0 * u * (1.0 - 3.0 * u * (4.0 - 5.0 * u * (4.0 - 7.0 * u))));
    } else {
        throw std::invalid_argument(
            "closed_form: only the pairs (1,1), (0,2), (2,0), (2,2) have printed closed forms");
    }
    return rep;
}

double k_s_zero(int s, double r) {
    if (s < 0) throw std::domain_error("k_s_zero: s must be nonnegative");
    if (r < 0.0 || r > 1.0) throw std::domain_error("k_s_zero: R must lie in [0, 1]");
    if (s == 0) return 1.0;
    if (r == 1.0 || r == 0.0) return 1.0;
    if (r > 0.5) r = 1.0 - r;  // K is symmetric about R = 1/2; keeps z <= 1
    const double z = (r / (1.0 - r)) * (r / (1.0 - r));
    if (s <= 60)
        return 1.0 / (std::pow(1.0 - r, 2 * s) * specfun::gauss_2f1_terminating(s, z));
    // large s: assemble the log of the sum term by term
    const double logz = 2.0 * (std::log(r) - std::log1p(-r));
    double max_log = -HUGE_VAL;
    std::vector<double> logs(static_cast<size_t>(s) + 1);
    for (int n = 0; n <= s; ++n) {
        double lc = specfun::log_factorial(s) - specfun::log_factorial(n) -
                    specfun::log_factorial(s - n);
        logs[static_cast<size_t>(n)] = 2.0 * lc + n * logz;
        max_log = std::max(max_log, logs[static_cast<size_t>(n)]);
    }
    double acc = 0.0;
    for (double lg : logs) acc += std::exp(lg - max_log);
    return std::exp(-(2.0 * s * std::log1p(-r) + max_log + std::log(acc)));
}

double k_s_zero_max(int s) {
    if (s < 0) throw std::domain_error("k_s_zero_max: s must be nonnegative");
    return std::exp(2.0 * s * kLog2 + 2.0 * specfun::log_factorial(s) -
                    specfun::log_factorial(2 * s));
}

double k_holland_burnett(int s) {
    if (s < 0) throw std::domain_error("k_holland_burnett: s must be nonnegative");
    const double log_gamma_sq = 2.0 * specfun::log_gamma_half(2 * s + 1);
    return std::exp(kLogPi + 2.0 * specfun::log_factorial(s) - log_gamma_sq -
                    std::log(specfun::genhyp_4f3_hb(s)));
}

double hb_power_fit(int s_min, int s_max) {
    if (s_min < 1 || s_max <= s_min) throw std::invalid_argument("hb_power_fit: bad range");
    // least squares for the model K = s^q (no prefactor, matching the printed
    // approximation): q = sum(ln s ln K) / sum(ln s)^2
    double sxx = 0.0, sxy = 0.0;
    for (int s = s_min; s <= s_max; ++s) {
        const double x = std::log(static_cast<double>(s));
        sxx += x * x;
        sxy += x * std::log(k_holland_burnett(s));
    }
    return sxy / sxx;
}

namespace {

// Golden-section ascent on [a, b]; returns the location once the bracket is
// shorter than tol.
double golden_max(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.61803398874989484820;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

std::vector<Extremum> scan_maxima(const std::function<double(double)>& f, double r_hi) {
    constexpr double step = 1e-4;
    const int count = static_cast<int>(std::floor(r_hi / step + 0.5)) + 1;
    std::vector<double> rs(static_cast<size_t>(count)), fs(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        rs[static_cast<size_t>(i)] = std::min(i * step, r_hi);
        fs[static_cast<size_t>(i)] = f(rs[static_cast<size_t>(i)]);
    }
    double best = *std::max_element(fs.begin(), fs.end());
    std::vector<Extremum> found;
    for (int i = 0; i < count; ++i) {
        const double fi = fs[static_cast<size_t>(i)];
        const bool left_ok = i == 0 || fs[static_cast<size_t>(i) - 1] <= fi;
        const bool right_ok = i == count - 1 || fs[static_cast<size_t>(i) + 1] <= fi;
        if (!left_ok || !right_ok) continue;
        if (best - fi > 1e-6 * std::max(1.0, std::fabs(best))) continue;
        const double a = std::max(0.0, rs[static_cast<size_t>(i)] - step);
        const double b = std::min(r_hi, rs[static_cast<size_t>(i)] + step);
        const double r_star = golden_max(f, a, b, 1e-7);
        found.push_back({r_star, f(r_star)});
    }
    // keep only refined maxima tied with the best, deduplicated in R
    double refined_best = 0.0;
    for (const Extremum& e : found) refined_best = std::max(refined_best, e.value);
    std::vector<Extremum> out;
    std::sort(found.begin(), found.end(), [](const Extremum& a, const Extremum& b) {
        return a.r < b.r;
    });
    for (const Extremum& e : found) {
        if (refined_best - e.value > 1e-9 * std::max(1.0, std::fabs(refined_best))) continue;
        if (!out.empty() && std::fabs(out.back().r - e.r) < 1e-6) continue;
        out.push_back(e);
    }
    return out;
}

}  // namespace

MaximizeResult maximize(int s1, int s2, std::span<const double> epsilons) {
    if (epsilons.empty()) throw std::invalid_argument("maximize: epsilon grid must be nonempty");
    MaximizeResult result;
    double best_s = -1.0, best_k = -1.0;
    for (double eps : epsilons) {
        dynamics::SpectrumEvaluator ev(dynamics::InitialState(s1, s2), eps);
        const double r_hi = std::min(1.0, ev.admissible_r_max());
        auto entropy_at = [&](double r) { return von_neumann(ev.spectrum_at_r(r)); };
        auto schmidt_at = [&](double r) { return schmidt_number(ev.spectrum_at_r(r)); };
        std::vector<Extremum> es = scan_maxima(entropy_at, r_hi);
        std::vector<Extremum> ks = scan_maxima(schmidt_at, r_hi);
        if (!es.empty() && es.front().value > best_s) {
            best_s = es.front().value;
            result.entropy = std::move(es);
        }
        if (!ks.empty() && ks.front().value > best_k) {
            best_k = ks.front().value;
            result.schmidt_number = std::move(ks);
        }
    }
    return result;
}

MaximizeResult maximize(int s1, int s2) {
    const double zero = 0.0;
    return maximize(s1, s2, std::span<const double>(&zero, 1));
}

}  // namespace qosc::entanglement
