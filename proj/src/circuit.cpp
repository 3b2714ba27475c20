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

#include "qvb/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace qvb {

void Circuit::append(const Gate& g) {
    if (g.q0 >= n_qubits || (g.kind == GateKind::CNOT && (g.q1 >= n_qubits || g.q0 == g.q1))) {
        throw std::out_of_range("Circuit::append: bad qubit index");
    }
    gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
    for (const Gate& g : other.gates) {
        append(g);
    }
}

bool Circuit::has_non_clifford() const {
    return std::any_of(gates.begin(), gates.end(), [](const Gate& g) { return !g.is_clifford(); });
}

CircuitMetrics Circuit::metrics() const {
    CircuitMetrics m;
    std::vector<size_t> busy_until(n_qubits, 0);     // next free layer, all gates
    std::vector<size_t> busy_until_2q(n_qubits, 0);  // next free layer, CNOTs only
    for (const Gate& g : gates) {
        m.total_count++;
        if (g.is_two_qubit()) {
            m.two_qubit_count++;
            size_t layer = std::max(busy_until[g.q0], busy_until[g.q1]) + 1;
            busy_until[g.q0] = busy_until[g.q1] = layer;
            size_t layer2q = std::max(busy_until_2q[g.q0], busy_until_2q[g.q1]) + 1;
            busy_until_2q[g.q0] = busy_until_2q[g.q1] = layer2q;
            m.total_depth = std::max(m.total_depth, layer);
            m.two_qubit_depth = std::max(m.two_qubit_depth, layer2q);
        } else {
            size_t layer = busy_until[g.q0] + 1;
            busy_until[g.q0] = layer;
            m.total_depth = std::max(m.total_depth, layer);
        }
    }
    return m;
}

std::string Circuit::to_qasm() const {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(n_qubits) + "];\n";
    char buf[128];
    for (const Gate& g : gates) {
        switch (g.kind) {
            case GateKind::H:
                snprintf(buf, sizeof buf, "h q[%zu];\n", g.q0);
                break;
            case GateKind::S:
                snprintf(buf, sizeof buf, "s q[%zu];\n", g.q0);
                break;
            case GateKind::Sdg:
                snprintf(buf, sizeof buf, "sdg q[%zu];\n", g.q0);
                break;
            case GateKind::X:
                snprintf(buf, sizeof buf, "x q[%zu];\n", g.q0);
                break;
            case GateKind::Y:
                snprintf(buf, sizeof buf, "y q[%zu];\n", g.q0);
                break;
            case GateKind::Z:
                snprintf(buf, sizeof buf, "z q[%zu];\n", g.q0);
                break;
            case GateKind::CNOT:
                snprintf(buf, sizeof buf, "cx q[%zu],q[%zu];\n", g.q0, g.q1);
                break;
            case GateKind::Rz:
                snprintf(buf, sizeof buf, "rz(%.17g) q[%zu];\n", g.angle, g.q0);
                break;
        }
        out += buf;
    }
    return out;
}

Circuit basis_change_layer(const PauliString& p) {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("basis_change_layer: non-Hermitian operator");
    }
    Circuit frag(p.num_qubits());
    for (size_t q = 0; q < p.num_qubits(); q++) {
        bool x = p.x_bit(q), z = p.z_bit(q);
        if (x && z) {
            frag.append(Gate::sdg(q));
            frag.append(Gate::h(q));
        } else if (x) {
            frag.append(Gate::h(q));
        }
    }
    return frag;
}

}  // namespace qvb
