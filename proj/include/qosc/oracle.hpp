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
#include <vector>

#include <qosc/dynamics.hpp>
#include <qosc/linalg.hpp>

namespace qosc::oracle {

/// Number-conserving effective Hamiltonian restricted to the sector with
/// a1'a1 + a2'a2 = total: real symmetric tridiagonal, basis |n, total-n>.
struct SectorHamiltonian {
    int total = 0;
    double delta_omega = 0.0;
    double omega_rabi = 0.0;
    std::vector<double> diag;  // entry n: delta_omega * (total - n)
    std::vector<double> off;   // entry n: (omega_rabi/2) sqrt((n+1)(total-n))

    static SectorHamiltonian build(int total, double delta_omega, double omega_rabi);
};

/// State over the sector basis |n, total-n>, n = 0..total.
struct SectorState {
    std::vector<std::complex<double>> amplitudes;
};

/// Exact unitary evolution in one sector via eigendecomposition of the
/// tridiagonal matrix; reusable across initial states and times.
class SectorEvolver {
  public:
    explicit SectorEvolver(const SectorHamiltonian& h);
    SectorState evolve(int s1, double t) const;
    int total() const { return total_; }

  private:
    linalg::EigenSystem eig_;
    int total_;
};

/// One-shot convenience wrapper: psi(t) = exp(-iHt) |s1, s2>.
SectorState evolve_sector(const SectorHamiltonian& h, int s1, int s2, double t);

/// The sector basis is already the Schmidt basis, so the modes are the
/// amplitude moduli squared.
dynamics::SchmidtSpectrum oracle_schmidt(const SectorState& state);

/// Combinatorial beam-splitter oracle: expands
///   (cos(theta) u1 + e^{i phi} sin(theta) u2)^{s1}
///   (-e^{-i phi} sin(theta) u1 + cos(theta) u2)^{s2} / sqrt(s1! s2!)
/// over monomials with Fock weights.  sin^2(theta) plays the role of R.
dynamics::AmplitudeTable beam_splitter_amplitudes(int s1, int s2, double theta, double phi);

/// Full two-mode Hamiltonian truncated at n_max quanta per mode, restricted
/// to the Hermitian coupling subfamily (gamma = beta, delta = alpha, all
/// real); counter-rotating terms included.  Construction rejects inputs
/// outside the subfamily.
struct TruncatedTwoModeHamiltonian {
    int n_max = 0;
    double omega1 = 1.0, omega2 = 1.0;
    double alpha = 0.0, beta = 0.0;

    TruncatedTwoModeHamiltonian(double omega1, double omega2, double alpha, double beta,
                                double gamma, double delta, int n_max);
    /// Default cutoff for an initial pair: counter-rotating terms couple
    /// sectors N +/- 2, and ten extra rungs per side are enough at weak
    /// coupling (the tail monitor verifies rather than assumes this).
    static int default_cutoff(int s1, int s2) { return s1 + s2 + 20; }
    int dim() const { return (n_max + 1) * (n_max + 1); }
    std::vector<double> dense() const;
};

struct TruncatedEvolutionResult {
    dynamics::SchmidtSpectrum spectrum;  // eigenvalues of rho_1, descending
    double tail_probability = 0.0;       // weight within 5 rungs of the cutoff
    bool truncation_safe = true;         // tail below 1e-10
    double norm_drift = 0.0;             // | ||psi(t)|| - 1 |
};

/// Dense eigendecomposition of the truncated Hamiltonian, reusable across
/// initial states and times.
class TruncatedEvolver {
  public:
    explicit TruncatedEvolver(const TruncatedTwoModeHamiltonian& h);
    TruncatedEvolutionResult evolve(int s1, int s2, double t) const;

  private:
    linalg::EigenSystem eig_;
    int n_max_;
};

TruncatedEvolutionResult evolve_truncated(const TruncatedTwoModeHamiltonian& h, int s1, int s2,
                                          double t);

}  // namespace qosc::oracle
