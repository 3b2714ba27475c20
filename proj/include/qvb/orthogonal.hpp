// Copyright 2026 the qvbench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "qvb/rng.hpp"

namespace qvb {

/// Nearest-neighbor planar rotation on mode indices (k, k+1), 1-based k.
struct GivensRotation {
    size_t k;      // 1 <= k <= dim-1
    double angle;  // radians, normalized to (-pi, pi]
};

/// Decomposition O = S * G_1 * G_2 * ... * G_m where S = diag(signs) with
/// product +1. In circuit execution order G_m acts first and the sign layer
/// last.
struct GivensProgram {
    size_t dim = 0;
    std::vector<GivensRotation> rotations;
    std::vector<int> signs;  // +-1 entries, product +1

    Eigen::MatrixXd reconstruct() const;
};

/// Haar-distributed sample from SO(dim): QR of an i.i.d. Gaussian matrix with
/// the R diagonal signs absorbed, last column negated if det = -1.
Eigen::MatrixXd sample_haar_so(size_t dim, Rng& rng);

/// True iff O^T O = I and det O = +1, both to `tol` (Frobenius / absolute).
bool is_special_orthogonal(const Eigen::MatrixXd& o, double tol = 1e-10);

/// Nearest-neighbor Givens decomposition, column-major left-to-right and
/// bottom-up within each column; rotation count <= n(2n-1) for dim = 2n.
GivensProgram givens_decompose(const Eigen::MatrixXd& o, double tol = 1e-10);

/// Quantile of the standard normal: |Phi(x) - p| <= 1e-9.
double inv_norm_cdf(double p);
/// Standard normal density.
double norm_pdf(double x);
/// Standard normal CDF (via erf).
double norm_cdf(double x);

/// Truncated-Gaussian statistics for keeping the top fraction r of a
/// unit-norm row with entry variance 1/dim:
///   threshold    T = sigma * Phi^-1(1 - r/2),
///   lambda       conditional second moment of kept entries,
///   expected_sum expected total square mass of the kept entries
///                (dimension independent).
struct TruncatedMass {
    double threshold;
    double lambda;
    double expected_sum;
};
TruncatedMass truncated_mass(double r, size_t dim);

/// Row indices of column `col` (0-based) holding the `count` largest entries
/// by absolute value; ties broken toward the lower index.
std::vector<size_t> select_top_indices(const Eigen::MatrixXd& o, size_t col, size_t count);

}  // namespace qvb
