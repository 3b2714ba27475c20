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

#include "qvb/majorana.hpp"

#include <cmath>
#include <stdexcept>

namespace qvb {

PauliString majorana_pauli(size_t k, size_t n) {
    if (k < 1 || k > 2 * n) {
        throw std::invalid_argument("majorana index out of range");
    }
    PauliString p(n);
    size_t q = (k + 1) / 2;  // 1-based qubit carrying the X or Y
    for (size_t j = 0; j + 1 < q; j++) {
        p.set_z(j, true);
    }
    p.set_x(q - 1, true);
    if (k % 2 == 0) {
        p.set_z(q - 1, true);  // X and Z bits together denote the letter Y
    }
    return p;
}

Eigen::VectorXd FermionInstance::ideal_expectations() const {
    if (init_index < 1 || init_index > static_cast<size_t>(evolution.rows())) {
        throw std::invalid_argument("initial Majorana index out of range");
    }
    return evolution.col(static_cast<Eigen::Index>(init_index - 1));
}

Eigen::VectorXd pauli_sign_action(const PauliString& fault_on_pair, size_t q, size_t n) {
    if (fault_on_pair.num_qubits() != 2 || fault_on_pair.is_identity()) {
        throw std::invalid_argument("fault must be a non-identity two-qubit Pauli");
    }
    if (q + 1 >= n) {
        throw std::invalid_argument("fault pair out of range");
    }
    PauliString embedded(n);
    for (size_t a = 0; a < 2; a++) {
        embedded.set_x(q + a, fault_on_pair.x_bit(a));
        embedded.set_z(q + a, fault_on_pair.z_bit(a));
    }
    Eigen::VectorXd signs(static_cast<Eigen::Index>(2 * n));
    for (size_t k = 1; k <= 2 * n; k++) {
        bool comm = PauliString::commutes(majorana_pauli(k, n), embedded);
        signs(static_cast<Eigen::Index>(k - 1)) = comm ? 1.0 : -1.0;
    }
    return signs;
}

namespace {

// Uniform contraction of modes touched by a depolarizing fault on the qubit
// pair under an even-k rotation: of the 15 non-identity two-qubit Paulis, 8
// anticommute with any fixed non-identity restriction.
double channel_scale(double p_2q) {
    return 1.0 - 16.0 * p_2q / 15.0;
}

}  // namespace

Eigen::MatrixXd effective_evolution(const GivensProgram& schedule, double p_2q) {
    const auto dim = static_cast<Eigen::Index>(schedule.dim);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::VectorXd scale = Eigen::VectorXd::Ones(dim);
    const double c = channel_scale(p_2q);
    for (auto it = schedule.rotations.rbegin(); it != schedule.rotations.rend(); ++it) {
        const auto a = static_cast<Eigen::Index>(it->k - 1);
        const auto b = a + 1;
        const double cs = std::cos(it->angle);
        const double sn = std::sin(it->angle);
        // Materialize the two rows the rotation mixes, then rotate.
        m.row(a) *= scale(a);
        m.row(b) *= scale(b);
        scale(a) = 1.0;
        scale(b) = 1.0;
        Eigen::RowVectorXd top = m.row(a);
        m.row(a) = cs * top - sn * m.row(b);
        m.row(b) = sn * top + cs * m.row(b);
        if (it->k % 2 == 0 && p_2q > 0.0) {
            // Modes below k-1 (1-based) restrict to identity on the gate's
            // qubit pair and pass through the fault average unscathed.
            for (Eigen::Index r = static_cast<Eigen::Index>(it->k) - 2; r < dim; r++) {
                scale(r) *= c;
            }
        }
    }
    for (Eigen::Index r = 0; r < dim; r++) {
        double s = scale(r) * static_cast<double>(schedule.signs[static_cast<size_t>(r)]);
        m.row(r) *= s;
    }
    return m;
}

Eigen::VectorXd effective_column(const GivensProgram& schedule, double p_2q, size_t init_index) {
    const auto dim = static_cast<Eigen::Index>(schedule.dim);
    if (init_index < 1 || init_index > schedule.dim) {
        throw std::invalid_argument("initial Majorana index out of range");
    }
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    v(static_cast<Eigen::Index>(init_index - 1)) = 1.0;
    const double c = channel_scale(p_2q);
    for (auto it = schedule.rotations.rbegin(); it != schedule.rotations.rend(); ++it) {
        const auto a = static_cast<Eigen::Index>(it->k - 1);
        const double cs = std::cos(it->angle);
        const double sn = std::sin(it->angle);
        const double top = v(a);
        v(a) = cs * top - sn * v(a + 1);
        v(a + 1) = sn * top + cs * v(a + 1);
        if (it->k % 2 == 0 && p_2q > 0.0) {
            for (Eigen::Index r = static_cast<Eigen::Index>(it->k) - 2; r < dim; r++) {
                v(r) *= c;
            }
        }
    }
    for (Eigen::Index r = 0; r < dim; r++) {
        if (schedule.signs[static_cast<size_t>(r)] < 0) {
            v(r) = -v(r);
        }
    }
    return v;
}

Eigen::VectorXd readout_damped(const Eigen::VectorXd& values, double p_m) {
    Eigen::VectorXd out = values;
    const double f = 1.0 - 2.0 * p_m;
    for (Eigen::Index j = 0; j < out.size(); j++) {
        size_t support = (static_cast<size_t>(j) + 2) / 2;  // ceil((j+1)/2)
        out(j) *= std::pow(f, static_cast<double>(support));
    }
    return out;
}

ExpectationEstimate sample_shots(double v, uint64_t shots, Rng& rng) {
    if (std::abs(v) > 1.0 + 1e-12) {
        throw std::invalid_argument("expectation outside [-1, 1]");
    }
    if (shots == 0) {
        throw std::invalid_argument("need at least one shot");
    }
    const double p_plus = 0.5 * (1.0 + v);
    uint64_t plus = 0;
    for (uint64_t s = 0; s < shots; s++) {
        if (bernoulli(rng, p_plus)) {
            plus++;
        }
    }
    ExpectationEstimate est;
    est.mean = (2.0 * static_cast<double>(plus) - static_cast<double>(shots)) /
               static_cast<double>(shots);
    est.shots = shots;
    return est;
}

Circuit lower_givens(const GivensProgram& schedule) {
    if (schedule.dim % 2 != 0 || schedule.dim == 0) {
        throw std::invalid_argument("schedule dimension must be a positive even number");
    }
    const size_t n = schedule.dim / 2;
    Circuit circuit(n);
    for (auto it = schedule.rotations.rbegin(); it != schedule.rotations.rend(); ++it) {
        const size_t k = it->k;
        const double angle = it->angle;
        if (k % 2 == 1) {
            // Modes 2l-1, 2l live on qubit l: exp(-i a/2 Z).
            size_t q = (k - 1) / 2;
            circuit.append(Gate::rz(q, angle));
        } else {
            // Modes 2l, 2l+1 give an XX rotation on qubits l, l+1.
            size_t q = k / 2 - 1;
            circuit.append(Gate::h(q));
            circuit.append(Gate::h(q + 1));
            circuit.append(Gate::cnot(q, q + 1));
            circuit.append(Gate::rz(q + 1, angle));
            circuit.append(Gate::cnot(q, q + 1));
            circuit.append(Gate::h(q));
            circuit.append(Gate::h(q + 1));
        }
    }
    // The sign layer flips an even set F of modes; the product of those
    // Majorana strings is a Pauli that anticommutes with exactly m_j, j in F.
    PauliString flip(n);
    size_t flipped = 0;
    for (size_t j = 0; j < schedule.dim; j++) {
        if (schedule.signs[j] < 0) {
            flip = PauliString::multiply(flip, majorana_pauli(j + 1, n));
            flipped++;
        }
    }
    if (flipped % 2 != 0) {
        throw std::invalid_argument("sign layer must flip an even number of modes");
    }
    for (size_t q = 0; q < n; q++) {
        bool x = flip.x_bit(q);
        bool z = flip.z_bit(q);
        if (x && z) {
            circuit.append(Gate::y(q));
        } else if (x) {
            circuit.append(Gate::x(q));
        } else if (z) {
            circuit.append(Gate::z(q));
        }
    }
    return circuit;
}

}  // namespace qvb
