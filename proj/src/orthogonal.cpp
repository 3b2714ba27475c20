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

#include "qvb/orthogonal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qvb {

Eigen::MatrixXd GivensProgram::reconstruct() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
    for (auto it = rotations.rbegin(); it != rotations.rend(); ++it) {
        // Left-multiply by G(k, angle): mixes rows k-1 and k (0-based).
        double c = std::cos(it->angle), s = std::sin(it->angle);
        size_t r0 = it->k - 1, r1 = it->k;
        Eigen::RowVectorXd top = m.row(r0);
        m.row(r0) = c * top - s * m.row(r1);
        m.row(r1) = s * top + c * m.row(r1);
    }
    for (size_t i = 0; i < dim; i++) {
        if (signs[i] < 0) {
            m.row(i) = -m.row(i);
        }
    }
    return m;
}

Eigen::MatrixXd sample_haar_so(size_t dim, Rng& rng) {
    if (dim < 2 || dim % 2 != 0) {
        throw std::invalid_argument("sample_haar_so: dim must be even and >= 2");
    }
    Eigen::MatrixXd g(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            g(i, j) = standard_normal(rng);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Absorb R's diagonal signs so Q is Haar on O(dim).
    for (size_t j = 0; j < dim; j++) {
        if (r(j, j) < 0) {
            q.col(j) = -q.col(j);
        }
    }
    if (q.determinant() < 0) {
        q.col(dim - 1) = -q.col(dim - 1);
    }
    return q;
}

bool is_special_orthogonal(const Eigen::MatrixXd& o, double tol) {
    if (o.rows() != o.cols()) {
        return false;
    }
    Eigen::MatrixXd gram = o.transpose() * o;
    gram.diagonal().array() -= 1.0;
    if (gram.norm() > tol) {
        return false;
    }
    return std::abs(o.determinant() - 1.0) <= tol;
}

GivensProgram givens_decompose(const Eigen::MatrixXd& o, double tol) {
    if (!is_special_orthogonal(o, std::max(tol, 1e-9))) {
        throw std::invalid_argument("givens_decompose: input is not special orthogonal");
    }
    size_t dim = static_cast<size_t>(o.rows());
    Eigen::MatrixXd a = o;
    // Eliminate below the diagonal with nearest-neighbor row rotations,
    // bottom-up within each column. R_t * ... * R_1 * O = S, so
    // O = S * (S R_1^T S) * ... * (S R_t^T S); conjugating a rotation by the
    // diagonal sign matrix only flips its angle.
    std::vector<GivensRotation> raw;
    for (size_t col = 0; col + 1 < dim; col++) {
        for (size_t row = dim - 1; row > col; row--) {
            double lower = a(row, col);
            if (std::abs(lower) <= 1e-15) {
                continue;  // already eliminated; below reconstruction noise
            }
            double upper = a(row - 1, col);
            double theta = std::atan2(lower, upper);  // rotate (upper, lower) -> (r, 0)
            double c = std::cos(theta), s = std::sin(theta);
            Eigen::RowVectorXd top = a.row(row - 1);
            a.row(row - 1) = c * top + s * a.row(row);
            a.row(row) = -s * top + c * a.row(row);
            a(row, col) = 0.0;
            raw.push_back({row, theta});  // R = G(k, -theta) with k = row (1-based)
        }
    }
    GivensProgram prog;
    prog.dim = dim;
    prog.signs.resize(dim);
    for (size_t i = 0; i < dim; i++) {
        prog.signs[i] = a(i, i) < 0 ? -1 : 1;
    }
    prog.rotations.reserve(raw.size());
    for (const GivensRotation& r : raw) {
        // G' = S * R^T * S where R^T = G(k, theta).
        double angle = r.angle;
        if (prog.signs[r.k - 1] * prog.signs[r.k] < 0) {
            angle = -angle;
        }
        if (angle <= -std::numbers::pi) {
            angle += 2 * std::numbers::pi;
        }
        prog.rotations.push_back({r.k, angle});
    }
    return prog;
}

double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double norm_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double inv_norm_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("inv_norm_cdf: p must lie in (0, 1)");
    }
    // Acklam's rational approximation, then one Newton step on Phi to reach
    // 1e-9 absolute accuracy in the quantile.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                               1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                               6.680131188771972e+01,  -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                               -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                               3.754408661907416e+00};
    const double p_low = 0.02425;
    double x;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        double q = p - 0.5;
        double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // Newton refinement (Halley's step gives extra digits for the same cost).
    double err = norm_cdf(x) - p;
    double u = err * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    x = x - u / (1.0 + 0.5 * x * u);
    return x;
}

TruncatedMass truncated_mass(double r, size_t dim) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::domain_error("truncated_mass: r must lie in (0, 1)");
    }
    double sigma = 1.0 / std::sqrt(static_cast<double>(dim));
    double quantile = inv_norm_cdf(1.0 - r / 2.0);
    TruncatedMass out;
    out.threshold = sigma * quantile;
    out.lambda = sigma * sigma * (1.0 + 2.0 * quantile * norm_pdf(quantile) / r);
    out.expected_sum = r + 2.0 * quantile * norm_pdf(quantile);
    return out;
}

std::vector<size_t> select_top_indices(const Eigen::MatrixXd& o, size_t col, size_t count) {
    size_t dim = static_cast<size_t>(o.rows());
    if (count > dim) {
        throw std::invalid_argument("select_top_indices: count exceeds dimension");
    }
    std::vector<size_t> idx(dim);
    for (size_t i = 0; i < dim; i++) {
        idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        double fa = std::abs(o(a, col)), fb = std::abs(o(b, col));
        if (fa != fb) {
            return fa > fb;
        }
        return a < b;
    });
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace qvb
