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
#include <qosc/model.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qosc::model {

namespace {

void fill_ladder(CouplingSet& c) {
    c.alpha = 0.5 * (c.a12 + c.a21 + c.b + c.c);
    c.beta = 0.5 * (-c.a12 + c.a21 + c.b - c.c);
    c.gamma = 0.5 * (c.a12 - c.a21 + c.b - c.c);
    c.delta = 0.5 * (-c.a12 - c.a21 + c.b + c.c);
}

}  // namespace

CouplingSet reduce_physical(const PhysicalParams& p) {
    if (p.m1 <= 0.0 || p.m2 <= 0.0)
        throw std::domain_error("reduce_physical: masses must be positive");
    if (p.omega1 <= 0.0 || p.omega2 <= 0.0)
        throw std::domain_error("reduce_physical: frequencies must be positive");
    if (p.hbar <= 0.0) throw std::domain_error("reduce_physical: hbar must be positive");

    CouplingSet c;
    const double mw1 = p.m1 * p.omega1;
    const double mw2 = p.m2 * p.omega2;
    c.a12 = p.hbar * p.k1 * std::sqrt(mw2 / mw1);
    c.a21 = p.hbar * p.k2 * std::sqrt(mw1 / mw2);
    c.b = p.hbar * p.k3 / std::sqrt(mw1 * mw2);
    c.c = p.hbar * p.k4 * std::sqrt(mw1 * mw2);
    c.hbar = p.hbar;
    fill_ladder(c);

    const double scale =
        std::max({std::fabs(c.a12), std::fabs(c.a21), std::fabs(c.b), std::fabs(c.c)});
    c.coupling_ratio = scale / (p.hbar * std::min(p.omega1, p.omega2));
    c.weak_coupling_ok = c.coupling_ratio < weak_coupling_ratio;
    return c;
}

CouplingSet couplings_from_ladder(double alpha, double beta, double gamma, double delta,
                                  double hbar) {
    CouplingSet c;
    c.a12 = 0.5 * (alpha - beta + gamma - delta);
    c.a21 = 0.5 * (alpha + beta - gamma - delta);
    c.b = 0.5 * ((alpha + delta) + (beta + gamma));
    c.c = 0.5 * ((alpha + delta) - (beta + gamma));
    c.hbar = hbar;
    fill_ladder(c);
    return c;
}

RabiParams rabi_params(const CouplingSet& c, double omega1, double omega2) {
    RabiParams r;
    const double db = c.b - c.c;
    const double da = c.a12 - c.a21;
    r.omega = std::hypot(db, da) / c.hbar;
    const double scale =
        std::max({std::fabs(c.a12), std::fabs(c.a21), std::fabs(c.b), std::fabs(c.c)});
    if (r.omega <= 1e-14 * (scale / c.hbar) || r.omega == 0.0) {
        r.omega = 0.0;
        r.epsilon = 0.0;
        r.degenerate = true;
        return r;
    }
    r.epsilon = (omega2 - omega1) / r.omega;
    return r;
}

namespace {

EvolutionPoint point_from_r_unchecked(double r, double t, double epsilon, Branch branch) {
    EvolutionPoint e;
    e.t = t;
    e.r = r;
    e.branch = branch;
    if (epsilon == 0.0 || r == 0.0) {
        e.cos_phi = 0.0;
    } else {
        // roundoff at R = R_max can push |cos phi| a hair above 1
        e.cos_phi = std::clamp(-epsilon * std::sqrt(r / (1.0 - r)), -1.0, 1.0);
    }
    double s2 = std::max(0.0, 1.0 - e.cos_phi * e.cos_phi);
    e.sin_phi = static_cast<double>(static_cast<int>(branch)) * std::sqrt(s2);
    return e;
}

}  // namespace

EvolutionPoint evolution_point(const RabiParams& rp, double t, Branch branch) {
    if (rp.degenerate) {
        EvolutionPoint e;
        e.t = t;
        e.branch = branch;
        return e;  // identity point, R = 0
    }
    const double root = std::sqrt(1.0 + rp.epsilon * rp.epsilon);
    const double s = std::sin(0.5 * rp.omega * t * root);
    double r = s * s / (1.0 + rp.epsilon * rp.epsilon);
    r = std::clamp(r, 0.0, 1.0);
    return point_from_r_unchecked(r, t, rp.epsilon, branch);
}

EvolutionPoint point_from_r(double r, double epsilon, Branch branch) {
    const double rmax = 1.0 / (1.0 + epsilon * epsilon);
    if (!(r >= 0.0) || r > rmax + 1e-12) {
        std::ostringstream msg;
        msg << "point_from_r: R = " << r << " outside admissible range [0, 1/(1+epsilon^2)] = [0, "
            << rmax << "]";
        throw std::domain_error(msg.str());
    }
    return point_from_r_unchecked(std::min(r, rmax), 0.0, epsilon, branch);
}

}  // namespace qosc::model
