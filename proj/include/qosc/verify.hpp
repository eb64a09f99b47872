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

#include <map>
#include <string>
#include <vector>

namespace qosc::verify {

/// One verification check: a measured scalar compared against its bound.
struct CheckResult {
    std::string name;
    int criterion = 0;       // grouping index used by the acceptance runner
    double measured = 0.0;
    double bound = 0.0;
    bool greater_is_better = false;  // pass when measured >= bound instead of <=
    bool pass = false;
    std::string detail;
};

struct Options {
    bool appendix = true;      // include the diagonalization diagnostics
    bool determinism = true;   // include the figure-data byte-identity check
    std::string scratch_dir;   // where determinism artifacts go; empty = temp
    std::map<std::string, double> tolerance_overrides;  // by check name
};

/// Runs the full verification battery (closed-form regressions, cross-route
/// identities, oracle equivalences, invariants, appendix diagnostics,
/// determinism).  Deterministic: same options, same results.
std::vector<CheckResult> run_checks(const Options& opts);

/// Machine-readable report of a finished run.
std::string to_json(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

/// Largest deviation from orthonormality over the rows of the coupling
/// coefficient matrix; `inject` perturbs one coefficient and exists so the
/// test suite can prove the check actually bites.
double orthonormality_residual(int total, double mu, double inject = 0.0);

}  // namespace qosc::verify
