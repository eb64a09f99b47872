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

namespace qosc::model {

/// Sign choice for sin(phi); only the cosine of the phase is fixed by the
/// dynamics, the sine branch is a gauge choice that never affects spectra.
enum class Branch : int { plus = 1, minus = -1 };

/// Two harmonic oscillators with the four bilinear coupling channels
/// (coordinate-momentum cross terms k1, k2, coordinate-coordinate k3 and
/// momentum-momentum k4).
struct PhysicalParams {
    double m1 = 1.0, m2 = 1.0;
    double omega1 = 1.0, omega2 = 1.0;
    double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0;
    double hbar = 1.0;
};

/// Dimensionless-reduced couplings (energy units) plus their ladder-operator
/// form.  `hbar` is carried along from the reduction so downstream frequency
/// conversions do not need the physical parameters again.
struct CouplingSet {
    double a12 = 0.0, a21 = 0.0, b = 0.0, c = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
    double hbar = 1.0;
    bool weak_coupling_ok = true;  // every |coupling| < ratio * hbar * omega_i
    double coupling_ratio = 0.0;   // max |coupling| / (hbar * min omega)
};

/// Effective coupling frequency and dimensionless detuning.  Omega = 0 is a
/// valid flagged state: the four channels can compensate each other exactly
/// while the individual couplings stay nonzero.
struct RabiParams {
    double omega = 0.0;    // effective coupling frequency, >= 0
    double epsilon = 0.0;  // (omega2 - omega1) / omega; 0 when degenerate
    bool degenerate = false;
};

/// The two-parameter reduction of the dynamics: a transfer probability
/// R in [0, 1/(1+epsilon^2)] and a phase constrained by
/// cos(phi) = -epsilon sqrt(R/(1-R)).
struct EvolutionPoint {
    double t = 0.0;
    double r = 0.0;
    double cos_phi = 0.0;
    double sin_phi = 1.0;
    Branch branch = Branch::plus;
};

/// Warn-only threshold for the weak-coupling assumption behind the closed
/// form; the brute-force oracle quantifies the actual error.
inline constexpr double weak_coupling_ratio = 0.1;

/// Dimensionless reduction and ladder map of the physical parameters.
/// Throws std::domain_error for non-positive masses/frequencies/hbar.
CouplingSet reduce_physical(const PhysicalParams& p);

/// Inverse of the ladder map; reconstructs (A12, A21, B, C).
CouplingSet couplings_from_ladder(double alpha, double beta, double gamma, double delta,
                                  double hbar = 1.0);

RabiParams rabi_params(const CouplingSet& c, double omega1, double omega2);

/// Evolution point at time t.  Degenerate Rabi parameters give the identity
/// point R = 0.  t may be negative (the formula is even in t).
EvolutionPoint evolution_point(const RabiParams& r, double t, Branch branch = Branch::plus);

/// Evolution point from R directly (R sweeps); t is left at zero.
/// Throws std::domain_error when R is outside [0, 1/(1+epsilon^2)].
EvolutionPoint point_from_r(double r, double epsilon, Branch branch = Branch::plus);

}  // namespace qosc::model
