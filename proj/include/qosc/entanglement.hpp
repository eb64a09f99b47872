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

#include <span>
#include <vector>

#include <qosc/dynamics.hpp>

namespace qosc::entanglement {

/// Entanglement measures of one Schmidt spectrum: von Neumann entropy in
/// nats and the Schmidt number K = 1/sum(lambda^2).
struct EntanglementReport {
    int s1 = 0;
    int s2 = 0;
    double r = 0.0;
    double entropy = 0.0;
    double schmidt_number = 1.0;
};

/// -sum lambda ln lambda with 0 ln 0 := 0 (natural log).
double von_neumann(const dynamics::SchmidtSpectrum& spectrum);

/// (sum lambda^2)^{-1}.
double schmidt_number(const dynamics::SchmidtSpectrum& spectrum);

/// Printed closed forms for the initial pairs (1,1), (0,2), (2,0) and (2,2).
/// Throws std::invalid_argument for any other pair; callers fall back to the
/// general pipeline.
EntanglementReport closed_form(int s1, int s2, double r);

/// K for the initial state |s>|0> at transfer probability R:
///   K = [ (1-R)^{2s} 2F1(-s, -s; 1; (R/(1-R))^2) ]^{-1},
/// with K(R=1) = 1 by the limit.
double k_s_zero(int s, double r);

/// Maximum of k_s_zero over R (attained at R = 1/2): 2^{2s} (s!)^2 / (2s)!.
double k_s_zero_max(int s);

/// K for |s>|s> at R = 1/2 (the 50:50 splitter output of twin Fock states):
///   K = pi (s!)^2 / [ Gamma(s+1/2)^2 4F3(1/2,1/2,-s,-s; 1,1/2-s,1/2-s; 1) ].
double k_holland_burnett(int s);

/// Least-squares exponent of ln K vs ln s for the twin-Fock K over
/// s in [s_min, s_max], fitting the model K = s^q (zero intercept).
double hb_power_fit(int s_min, int s_max);

struct Extremum {
    double r = 0.0;
    double value = 0.0;
};

struct MaximizeResult {
    std::vector<Extremum> entropy;         // maximizers of S_N, ascending in R
    std::vector<Extremum> schmidt_number;  // maximizers of K, ascending in R
};

/// Grid scan (step 1e-4) plus golden-section refinement (interval 1e-7) of
/// S_N(R) and K(R) for the given initial pair.  Both symmetric maximizers are
/// returned when distinct.  The spectrum depends on R only, so the epsilon
/// grid merely restricts the reachable range R <= 1/(1+epsilon^2) per entry.
MaximizeResult maximize(int s1, int s2, std::span<const double> epsilons);
MaximizeResult maximize(int s1, int s2);  // epsilon grid {0}

}  // namespace qosc::entanglement
