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

namespace qosc::linalg {

/// Eigendecomposition of a real symmetric matrix.  Eigenvalues ascending;
/// vectors stored row-major with vectors[i * n + k] = component i of the
/// k-th eigenvector.
struct EigenSystem {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;
};

/// Implicit-shift QL for a symmetric tridiagonal matrix (diag size n,
/// off size n-1).
EigenSystem tridiagonal_eigensystem(std::vector<double> diag, std::vector<double> off);

/// Householder reduction to tridiagonal form followed by QL; `dense` is
/// row-major n x n and only the lower triangle is referenced.
EigenSystem symmetric_eigensystem(const std::vector<double>& dense, int n);

/// Eigenvalues of a complex Hermitian matrix (row-major n x n), ascending,
/// via the real symmetric embedding [[X, -Y], [Y, X]].
std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h, int n);

}  // namespace qosc::linalg
