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

#include <qosc/model.hpp>

namespace qosc::dynamics {

/// Largest supported total excitation number.  The compensated pipeline keeps
/// the coupling-coefficient matrix orthonormal to better than 1e-10 up to
/// here; beyond, the terminating Jacobi sums lose too many digits.
inline constexpr int max_total_excitation = 60;

struct InitialState {
    int s1 = 0;
    int s2 = 0;

    InitialState(int s1_, int s2_);
    int total() const { return s1 + s2; }
};

/// Mixing parameter mu and the per-k phase unit of the closed-form sum.
struct MixingParams {
    double mu = 1.0;
    double phase_unit = 0.0;  // arccos(sqrt(1-R) sin phi), in [0, pi]
};

/// Transition amplitudes c_{n, N-n} of the evolved state over the conserved
/// excitation sector.  Index n runs over the quanta left in oscillator 1.
struct AmplitudeTable {
    std::vector<std::complex<double>> c;
    int s1 = 0;
    int s2 = 0;
    double r = 0.0;
};

struct SchmidtSpectrum {
    std::vector<double> lambda;
};

/// Mixing parameters from an evolution point with 0 < R < 1.  The endpoints
/// have closed identity/swap tables and must be handled by the caller;
/// mixing() throws std::domain_error for them.
MixingParams mixing(const model::EvolutionPoint& e);

/// Sector coupling coefficient
///   A^{n,m}_{k,p} = mu^{k+n} sqrt(k! p!) / ((1+mu^2)^{N/2} sqrt(n! m!))
///                   * P_k^{(-(1+N), p-n)}(-(2+mu^2)/mu^2)
/// with n+m = k+p = N.  Real-valued; rows/columns over the sector form an
/// orthonormal matrix.
double coupling_amplitude(int n, int m, int k, int p, double mu);

/// Full (N+1) x (N+1) coefficient matrix, row-major with entry [k*(N+1) + n].
std::vector<double> coupling_matrix(int total, double mu);

/// Closed-form amplitude table at an evolution point.  R = 0 gives the
/// identity table, R = 1 (reachable only on resonance) the swap table.
AmplitudeTable amplitudes(const InitialState& st, const model::EvolutionPoint& e);

/// lambda_n = |c_{n, N-n}|^2, the Schmidt modes of the evolved state.
SchmidtSpectrum schmidt_modes(const AmplitudeTable& a);

/// Detection probabilities; numerically identical to the Schmidt modes,
/// exposed under the probability name for the CLI.
std::vector<double> probabilities(const AmplitudeTable& a);

/// Sweep helper: fixes (s1, s2, epsilon, branch) and caches the coupling
/// matrix, so lambda(R) evaluations along a grid cost O(N^2) each.
class SpectrumEvaluator {
  public:
    SpectrumEvaluator(InitialState st, double epsilon, model::Branch branch = model::Branch::plus);

    AmplitudeTable amplitudes_at_r(double r) const;
    SchmidtSpectrum spectrum_at_r(double r) const;
    double admissible_r_max() const { return r_max_; }

  private:
    InitialState st_;
    double epsilon_;
    model::Branch branch_;
    double r_max_;
    std::vector<double> matrix_;
};

}  // namespace qosc::dynamics
