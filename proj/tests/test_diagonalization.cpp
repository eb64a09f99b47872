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
#include <random>
#include <stdexcept>

#include <qosc/diagonalization.hpp>
#include <qosc/dynamics.hpp>

using namespace qosc;

namespace {

model::CouplingSet couplings(double a12, double a21, double b, double c) {
    model::CouplingSet s;
    s.a12 = a12;
    s.a21 = a21;
    s.b = b;
    s.c = c;
    return s;
}

}  // namespace

TEST_CASE("transform reduces to the untransformed values at zero angle") {
    model::CouplingSet c = couplings(0.3, -0.2, 0.5, 0.1);
    diag::TransformedCoefficients t = diag::transform_coefficients(c, 1.2, 0.9, 0.0, 0.0);
    CHECK(t.omega1x_sq == doctest::Approx(1.44).epsilon(1e-14));
    CHECK(t.omega2y_sq == doctest::Approx(0.81).epsilon(1e-14));
    CHECK(t.ap12 == doctest::Approx(0.3 * std::sqrt(1.2 / 0.9)).epsilon(1e-14));
    CHECK(t.ap21 == doctest::Approx(-0.2 * std::sqrt(0.9 / 1.2)).epsilon(1e-14));
    CHECK(t.bp == doctest::Approx(0.5 * std::sqrt(1.2 * 0.9)).epsilon(1e-14));
    CHECK(t.cp == doctest::Approx(0.1 / std::sqrt(1.2 * 0.9)).epsilon(1e-14));
    CHECK(t.a == doctest::Approx(1.0));
    CHECK(t.b == doctest::Approx(1.0));
    CHECK(t.ap11 == doctest::Approx(0.0));
}

TEST_CASE("transform at the symmetric angle with equal frequencies") {
    model::CouplingSet c = couplings(0.4, 0.7, 0.2, 0.0);
    diag::TransformedCoefficients t = diag::transform_coefficients(c, 1.0, 1.0, M_PI / 4, 0.0);
    CHECK(t.a == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t.b == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t.cp == doctest::Approx(0.0));
    CHECK(t.ap11 == doctest::Approx(-t.ap22).epsilon(1e-14));
    CHECK_THROWS_AS(diag::transform_coefficients(c, 1.0, 1.0, 0.1, -1.0), std::domain_error);
}

TEST_CASE("transformed frequencies satisfy the trace identity") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> w(0.5, 2.0), k(-2.0, 2.0), th(0.0, M_PI),
        dl(-0.5, 0.5);
    for (int i = 0; i < 10000; ++i) {
        model::CouplingSet c = couplings(k(rng), k(rng), k(rng), k(rng));
        double w1 = w(rng), w2 = w(rng), theta = th(rng), delta = dl(rng);
        diag::TransformedCoefficients t = diag::transform_coefficients(c, w1, w2, theta, delta);
        double lhs = t.omega1x_sq + t.omega2y_sq;
        double rhs = w1 * w1 + w2 * w2 * (1 + delta) * (1 + delta);
        CHECK(std::fabs(lhs - rhs) / (std::fabs(rhs) + 1.0) < 1e-12);
    }
}

TEST_CASE("unitary parameters on the printed examples") {
    // delta_omega -> 0 gives the symmetric angle
    diag::UnitaryParams u = diag::unitary_params(couplings(0.2, 0.1, 0.4, 0.1), 1.0, 1.0);
    CHECK(u.theta1 == doctest::Approx(M_PI / 4).epsilon(1e-14));
    // C = 0 gives no shear
    u = diag::unitary_params(couplings(0.2, 0.1, 0.4, 0.0), 1.0, 1.3);
    CHECK(u.delta_shear == 0.0);
    // tan(2 theta1) = 3/4
    u = diag::unitary_params(couplings(0.5, 0.1, 3.0, 0.0), 1.0, 5.0);
    CHECK(u.theta1 == doctest::Approx(0.5 * std::atan(0.75)).epsilon(1e-13));
    CHECK(u.theta1 == doctest::Approx(0.32175055439664219340).epsilon(1e-10));
}

TEST_CASE("literal and robust eps1 agree away from zero detuning") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> k(-1.0, 1.0), w(0.5, 2.0);
    for (int i = 0; i < 200; ++i) {
        model::CouplingSet c = couplings(k(rng), k(rng), k(rng), k(rng));
        if (std::fabs(c.a12 - c.a21) < 1e-3) continue;
        double w1 = w(rng), w2 = w(rng);
        if (std::fabs(w2 - w1) < 1e-3) continue;
        diag::UnitaryParams u = diag::unitary_params(c, w1, w2);
        const double two_theta = 2.0 * u.theta1;
        const double literal = (w2 - w1) / (std::cos(two_theta) * std::fabs(c.a12 - c.a21));
        CHECK(u.eps1 == doctest::Approx(literal).epsilon(1e-10));
    }
}

TEST_CASE("pure bilinear coupling flags an infinite eps1") {
    diag::UnitaryParams u = diag::unitary_params(couplings(0.3, 0.3, 0.8, 0.1), 1.0, 1.2);
    CHECK(u.eps1_infinite);
    CHECK(!u.degenerate_resonant);
}

TEST_CASE("angle relation composes the detuning exactly") {
    std::mt19937 rng(79);
    std::uniform_real_distribution<double> k(-1.0, 1.0), w(0.8, 1.2);
    int used = 0;
    for (int i = 0; i < 400 && used < 120; ++i) {
        model::CouplingSet c = couplings(k(rng), k(rng), k(rng), k(rng));
        if (std::fabs(c.a12 - c.a21) < 0.05 || std::fabs(c.b - c.c) < 0.05) continue;
        double w1 = w(rng), w2 = w(rng);
        model::RabiParams r = model::rabi_params(c, w1, w2);
        if (r.degenerate) continue;
        ++used;
        diag::UnitaryParams u = diag::unitary_params(c, w1, w2);
        diag::AngleRelation rel = diag::angle_relation(u, r);
        CHECK(rel.eps_residual < 1e-12 * (1.0 + std::fabs(r.epsilon)));
        CHECK(rel.tan2theta_residual < 1e-12 * (1.0 + std::fabs(r.epsilon)));
        CHECK(rel.mu_branch_gap < 1e-10);
    }
    CHECK(used >= 100);
}

TEST_CASE("resonant relation gives the balanced mixing parameter") {
    model::CouplingSet c = couplings(0.4, 0.1, 0.3, 0.1);
    model::RabiParams r = model::rabi_params(c, 1.0, 1.0);  // eps = 0
    diag::UnitaryParams u = diag::unitary_params(c, 1.0, 1.0);
    diag::AngleRelation rel = diag::angle_relation(u, r);
    CHECK(rel.big_theta == doctest::Approx(M_PI / 4).epsilon(1e-14));
    CHECK(rel.mu_dynamics == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("detuned relation pins the mixing branch pair") {
    // eps = 0.75: tan(2 Theta) = 4/3, tan(Theta) = 1/2, mu in {1/2, 2}
    model::CouplingSet c = couplings(0.4, 0.0, 0.3, 0.0);
    const double omega2 = 1.0 + 0.75 * std::hypot(0.3, 0.4);
    model::RabiParams r = model::rabi_params(c, 1.0, omega2);
    CHECK(r.epsilon == doctest::Approx(0.75).epsilon(1e-12));
    diag::UnitaryParams u = diag::unitary_params(c, 1.0, omega2);
    diag::AngleRelation rel = diag::angle_relation(u, r);
    CHECK(std::tan(rel.big_theta) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rel.mu_dynamics == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rel.mu_branch_gap < 1e-12);
}

TEST_CASE("leading-order energy splitting") {
    CHECK(diag::energy_splitting(couplings(4.0, 0.0, 3.0, 0.0), 1.0, 1.0) ==
          doctest::Approx(5.0).epsilon(1e-14));
    CHECK(diag::energy_splitting(couplings(4.0, 0.0, 3.0, 0.0), 1.0, 6.0) ==
          doctest::Approx(5.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(diag::energy_splitting(couplings(0.2, 0.2, 0.5, 0.5), 1.0, 1.0) == 0.0);
}

TEST_CASE("normal-mode splitting magnitude matches the leading order at weak coupling") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> pos(0.5, 1.0);
    for (double scale : {1e-3, 1e-4}) {
        for (int i = 0; i < 50; ++i) {
            // keep |A12 - A21| and |B - C| away from zero at the coupling scale
            model::CouplingSet c = couplings(pos(rng) * scale, -pos(rng) * scale,
                                             pos(rng) * scale, -pos(rng) * scale);
            const double w1 = 1.0;
            const double w2 = 1.0 + (pos(rng) - 0.75) * scale;
            diag::NormalModeDiagnostic d = diag::normal_mode_diagnostic(c, w1, w2);
            CHECK(d.rel_gap < 10.0 * scale);
        }
    }
}

TEST_CASE("off-diagonal residual vanishes to first order at the transform point") {
    // with weak couplings the (theta1, delta) choice kills B' and C'
    std::mt19937 rng(89);
    std::uniform_real_distribution<double> pos(0.5, 1.0);
    const double scale = 1e-3;
    for (int i = 0; i < 100; ++i) {
        model::CouplingSet c = couplings(pos(rng) * scale, -pos(rng) * scale, pos(rng) * scale,
                                         -pos(rng) * scale);
        const double w1 = 1.0;
        const double w2 = 1.0 + (pos(rng) - 0.75) * scale;
        diag::UnitaryParams u = diag::unitary_params(c, w1, w2);
        diag::TransformedCoefficients t =
            diag::transform_coefficients(c, w1, w2, u.theta1, u.delta_shear);
        const double bc = std::fabs(c.b - c.c);
        const double sw = std::sqrt(w1 * w2);
        CHECK(std::fabs(t.bp) / (bc * sw) < 1e-2);
        CHECK(std::fabs(t.cp) * sw / bc < 1e-2);
    }
}
