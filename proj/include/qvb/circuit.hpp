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

#include <cstddef>
#include <string>
#include <vector>

#include "qvb/pauli.hpp"

namespace qvb {

enum class GateKind { H, S, Sdg, X, Y, Z, CNOT, Rz };

struct Gate {
    GateKind kind;
    size_t q0;
    size_t q1 = 0;      // CNOT target
    double angle = 0.0;  // Rz only

    static Gate h(size_t q) { return {GateKind::H, q}; }
    static Gate s(size_t q) { return {GateKind::S, q}; }
    static Gate sdg(size_t q) { return {GateKind::Sdg, q}; }
    static Gate x(size_t q) { return {GateKind::X, q}; }
    static Gate y(size_t q) { return {GateKind::Y, q}; }
    static Gate z(size_t q) { return {GateKind::Z, q}; }
    static Gate cnot(size_t c, size_t t) { return {GateKind::CNOT, c, t}; }
    static Gate rz(size_t q, double angle) { return {GateKind::Rz, q, 0, angle}; }

    bool is_two_qubit() const { return kind == GateKind::CNOT; }
    bool is_clifford() const { return kind != GateKind::Rz; }
};

struct CircuitMetrics {
    size_t two_qubit_depth = 0;
    size_t two_qubit_count = 0;
    size_t total_depth = 0;
    size_t total_count = 0;
};

/// Ordered gate list over {H, S, Sdg, X, Y, Z, CNOT, Rz}.
struct Circuit {
    size_t n_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(size_t n) : n_qubits(n) {}

    void append(const Gate& g);
    void append(const Circuit& other);

    bool has_non_clifford() const;

    /// Greedy layering: each gate enters the earliest layer where all its
    /// qubits are free.
    CircuitMetrics metrics() const;

    /// OpenQASM 2.0 text, one gate per line, angles with 17 significant digits.
    std::string to_qasm() const;
};

/// Single-qubit layer mapping p to a Z-only string on its support:
/// H for X sites, Sdg;H for Y sites, nothing for I/Z sites.
Circuit basis_change_layer(const PauliString& p);

}  // namespace qvb
