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
#include <qosc/diagonalization.hpp>

#include <cmath>
#include <stdexcept>

#include <qosc/dynamics.hpp>

namespace qosc::diag {

TransformedCoefficients transform_coefficients(const model::CouplingSet& c, double omega1,
                                               double omega2, double theta, double delta) {
    if (delta == -1.0) throw std::domain_error("transform_coefficients: delta must not equal -1");
    if (omega1 <= 0.0 || omega2 <= 0.0)
        throw std::domain_error("transform_coefficients: frequencies must be positive");
    const double d1 = 1.0 + delta;
    const double ct = std::cos(theta), st = std::sin(theta);
    const double c2 = ct * ct, s2 = st * st;
    const double s2t = std::sin(2.0 * theta), c2t = std::cos(2.0 * theta);
    const double sw = std::sqrt(omega1 * omega2);
    const double r12 = std::sqrt(omega1 / omega2), r21 = std::sqrt(omega2 / omega1);
    const double f = c.a12 / d1 * r12;  // velocity coupling carried by x
    const double g = c.a21 * d1 * r21;  // velocity coupling carried by y

    TransformedCoefficients t;
    t.omega1x_sq = omega1 * omega1 * c2 + omega2 * omega2 * d1 * d1 * s2 - c.b * sw * s2t * d1;
    t.omega2y_sq = omega2 * omega2 * c2 * d1 * d1 + omega1 * omega1 * s2 + c.b * sw * s2t * d1;
    t.ap11 = -0.5 * s2t * (f + g);
    t.ap22 = 0.5 * s2t * (f + g);
    t.ap12 = f * c2 - g * s2;
    t.ap21 = -f * s2 + g * c2;
    t.bp = 0.5 * s2t * (omega1 * omega1 - omega2 * omega2 * d1 * d1) +
           c.b * sw * (c2 * d1 - s2 * d1);
    t.cp = -0.5 * s2t + 0.5 * s2t / (d1 * d1) + (c.c / sw) * c2t / d1;
    t.a = c2 + s2 / (d1 * d1) + (s2t / d1) * (c.c / sw);
    t.b = s2 + c2 / (d1 * d1) - (s2t / d1) * (c.c / sw);
    return t;
}

UnitaryParams unitary_params(const model::CouplingSet& c, double omega1, double omega2) {
    UnitaryParams u;
    u.delta_omega = omega2 - omega1;
    u.a_diff = c.a12 - c.a21;
    u.bc_diff = c.b - c.c;

    const double abs_bc = std::fabs(u.bc_diff);
    u.theta1 = 0.5 * std::atan2(abs_bc, u.delta_omega);
    const double s2t = std::sin(2.0 * u.theta1);
    const double c2t = std::cos(2.0 * u.theta1);
    const double cot2t = s2t != 0.0 ? c2t / s2t : HUGE_VAL * (c2t >= 0.0 ? 1.0 : -1.0);
    u.delta_shear = c.c == 0.0 ? 0.0 : (c.c / omega1) * cot2t;

    if (u.a_diff == 0.0) {
        u.eps1_infinite = true;
        u.eps1 = HUGE_VAL;
        u.alpha_s = 0.0;  // eps1 -> inf limit of eps1 - sqrt(1+eps1^2)
        u.gamma_s = 0.0;
        u.degenerate_resonant = (u.delta_omega == 0.0 && abs_bc == 0.0);
        return u;
    }
    // equals delta_omega / (cos(2 theta1) |A12 - A21|), finite at delta_omega = 0
    u.eps1 = std::hypot(u.delta_omega, u.bc_diff) / std::fabs(u.a_diff);
    if (u.eps1 == 0.0) {
        u.degenerate_resonant = true;
        u.alpha_s = -1.0;  // eps1 -> 0+ limit
        u.gamma_s = 0.5;
        return u;
    }
    const double root = std::sqrt(1.0 + u.eps1 * u.eps1);
    u.alpha_s = u.eps1 - root;
    u.gamma_s = 0.5 / root;
    return u;
}

AngleRelation angle_relation(const UnitaryParams& u, const model::RabiParams& r) {
    if (r.degenerate)
        throw std::invalid_argument("angle_relation: requires a nondegenerate effective coupling");
    AngleRelation rel;
    rel.eps1 = u.eps1;
    rel.eps2 = u.bc_diff != 0.0 ? u.delta_omega / std::fabs(u.bc_diff)
                                : HUGE_VAL * (u.delta_omega >= 0.0 ? 1.0 : -1.0);
    rel.theta1 = 0.5 * std::atan2(1.0, rel.eps1);
    rel.theta2 = 0.5 * std::atan2(1.0, rel.eps2);
    if (std::isfinite(rel.eps1) && std::isfinite(rel.eps2)) {
        rel.eps = rel.eps1 * rel.eps2 /
                  std::sqrt(1.0 + rel.eps1 * rel.eps1 + rel.eps2 * rel.eps2);
        rel.eps_residual = std::fabs(rel.eps - r.epsilon);
    } else {
        rel.eps = r.epsilon;
        rel.eps_residual = 0.0;  // degenerate subfamily, relation trivial
    }

    rel.big_theta = 0.5 * std::atan2(1.0, r.epsilon);
    const double t = std::tan(rel.big_theta);
    rel.tan2theta_residual = std::fabs((1.0 - t * t) / (2.0 * t) - r.epsilon);

    const double r_mid = 0.5 / (1.0 + r.epsilon * r.epsilon);
    const dynamics::MixingParams mix = dynamics::mixing(model::point_from_r(r_mid, r.epsilon));
    rel.mu_dynamics = mix.mu;
    rel.mu_branch_gap = std::min(std::fabs(mix.mu - t), std::fabs(mix.mu - 1.0 / t));
    return rel;
}

double energy_splitting(const model::CouplingSet& c, double omega1, double omega2) {
    const double omega = std::hypot(c.b - c.c, c.a12 - c.a21) / c.hbar;
    return std::hypot(omega, omega2 - omega1);
}

NormalModeDiagnostic normal_mode_diagnostic(const model::CouplingSet& c, double omega1,
                                            double omega2) {
    const UnitaryParams u = unitary_params(c, omega1, omega2);
    const TransformedCoefficients t =
        transform_coefficients(c, omega1, omega2, u.theta1, u.delta_shear);

    NormalModeDiagnostic d;
    const double root = std::isfinite(u.eps1) ? std::sqrt(1.0 + u.eps1 * u.eps1) : HUGE_VAL;
    d.sigma = std::complex<double>(0.0, 1.0) * omega1 * root * (t.ap12 - t.ap21);
    const double denom = t.a * t.ap12 - t.b * t.ap21;
    if (denom != 0.0) {
        const std::complex<double> ratio((t.ap21 * t.omega1x_sq - t.ap12 * t.omega2y_sq) / denom,
                                         0.0);
        d.omega0 = std::complex<double>(0.0, 1.0) * std::sqrt(ratio);
    }
    d.sigma_mag_over_omega1 = std::abs(d.sigma) / omega1;
    d.target = energy_splitting(c, omega1, omega2);
    d.rel_gap = d.target > 0.0 ? std::fabs(d.sigma_mag_over_omega1 - d.target) / d.target : 0.0;
    return d;
}

}  // namespace qosc::diag
