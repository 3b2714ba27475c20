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

#include "qvb/circuit.hpp"
#include "qvb/orthogonal.hpp"
#include "qvb/pauli.hpp"
#include "qvb/rng.hpp"
#include "qvb/shots.hpp"

namespace qvb {

/// Jordan-Wigner image of the k-th Majorana operator (1-based k in [1, 2n]):
/// Z...Z X_p for k = 2p-1, Z...Z Y_p for k = 2p.
PauliString majorana_pauli(size_t k, size_t n);

/// One free-fermion benchmark instance: evolution O in SO(2n), its gate
/// schedule, and the excited Majorana index of the initial state.
struct FermionInstance {
    size_t n = 0;                // qubits; 2n Majorana modes
    Eigen::MatrixXd evolution;   // O
    size_t init_index = 1;       // i in [1, 2n]
    GivensProgram schedule;

    /// <m_j> for j = 1..2n in the ideal (noiseless) evolution: column
    /// init_index of O.
    Eigen::VectorXd ideal_expectations() const;
};

/// Diagonal +-1 action on the Majorana modes induced by a two-qubit Pauli
/// fault on qubits (q, q+1), 0-based q. Entry k is +1 iff the JW image of
/// m_{k+1} commutes with the fault. The fault must not be the identity.
Eigen::VectorXd pauli_sign_action(const PauliString& fault_on_pair, size_t q, size_t n);

/// Noisy evolution matrix: the schedule composed gate by gate, with the
/// averaged depolarizing channel (diagonal in the Majorana basis) applied
/// after every even-k rotation, since only those lower to a CNOT pair. At
/// p_2q = 0 this is exactly the source O.
Eigen::MatrixXd effective_evolution(const GivensProgram& schedule, double p_2q);

/// Column `init_index` of effective_evolution(schedule, p_2q) in O(n) per
/// gate; the vector the FFV protocol actually consumes.
Eigen::VectorXd effective_column(const GivensProgram& schedule, double p_2q, size_t init_index);

/// Per-entry readout damping: value j scaled by (1 - 2 p_m)^ceil(j/2),
/// the support size of the JW measurement string for m_j.
Eigen::VectorXd readout_damped(const Eigen::VectorXd& values, double p_m);

/// L i.i.d. +-1 draws with mean v; |v| <= 1 required.
ExpectationEstimate sample_shots(double v, uint64_t shots, Rng& rng);

/// Lower a Givens schedule to a qubit circuit under the Jordan-Wigner
/// encoding. Odd-k rotations become a single Rz; even-k rotations become an
/// H/CNOT/Rz/CNOT/H block on the adjacent qubit pair; the trailing sign
/// layer collapses to one layer of Pauli gates.
Circuit lower_givens(const GivensProgram& schedule);

}  // namespace qvb
