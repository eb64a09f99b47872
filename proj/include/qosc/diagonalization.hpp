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

#include <complex>

#include <qosc/model.hpp>

namespace qosc::diag {

/// Coefficients of the Hamiltonian after the coordinate rotation/shear
/// (x1, x2) -> (x, y) with angle theta and scale correction delta.
struct TransformedCoefficients {
    double omega1x_sq = 0.0, omega2y_sq = 0.0;  // transformed squared frequencies
    double ap11 = 0.0, ap22 = 0.0, ap12 = 0.0, ap21 = 0.0;  // velocity couplings A'_{ij}
    double bp = 0.0, cp = 0.0;                  // bilinear couplings B', C'
    double a = 1.0, b = 1.0;                    // kinetic scale factors
};

/// All ten transformed-coefficient formulas, evaluated verbatim.
/// Throws std::domain_error at delta = -1.
TransformedCoefficients transform_coefficients(const model::CouplingSet& c, double omega1,
                                               double omega2, double theta, double delta);

/// Parameters of the diagonalizing transform: rotation angle theta1, shear
/// delta, and the generator coefficients of the second (operator) stage.
struct UnitaryParams {
    double theta1 = 0.0;
    double delta_shear = 0.0;
    double alpha_s = 0.0;   // coefficient of the x*y generator
    double gamma_s = 0.0;   // coefficient of the d_x d_y generator
    double eps1 = 0.0;
    bool eps1_infinite = false;       // A12 = A21: pure B-C coupling
    bool degenerate_resonant = false;  // additionally delta_omega and B-C vanish
    // inputs carried along for downstream relations
    double delta_omega = 0.0;
    double a_diff = 0.0;  // A12 - A21
    double bc_diff = 0.0;  // B - C
};

UnitaryParams unitary_params(const model::CouplingSet& c, double omega1, double omega2);

/// The relation tying the two transform angles to the detuning, plus the
/// mixing-parameter branch check against the dynamics pipeline.
struct AngleRelation {
    double eps1 = 0.0, eps2 = 0.0, eps = 0.0;
    double theta1 = 0.0, theta2 = 0.0, big_theta = 0.0;
    double eps_residual = 0.0;       // |eps(composed) - eps(direct)|
    double tan2theta_residual = 0.0; // |tan(2 Theta) eps - 1|
    double mu_dynamics = 1.0;
    double mu_branch_gap = 0.0;      // min(|mu - tan Theta|, |mu - cot Theta|)
};

AngleRelation angle_relation(const UnitaryParams& u, const model::RabiParams& r);

/// Leading-order energy splitting |sigma|/omega1 = Omega sqrt(1+eps^2); this
/// is the target value the normal-mode diagnostic is compared against.
double energy_splitting(const model::CouplingSet& c, double omega1, double omega2);

/// Magnitude-level evaluation of the normal-mode splitting through the
/// transformed coefficients (the printed sigma carries an explicit factor of
/// i, so only magnitudes are meaningful for real inputs).
struct NormalModeDiagnostic {
    std::complex<double> sigma;
    std::complex<double> omega0;
    double sigma_mag_over_omega1 = 0.0;
    double target = 0.0;    // Omega sqrt(1+eps^2)
    double rel_gap = 0.0;   // |measured - target| / target
};

NormalModeDiagnostic normal_mode_diagnostic(const model::CouplingSet& c, double omega1,
                                            double omega2);

}  // namespace qosc::diag
