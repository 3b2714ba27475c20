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

#include <vector>

#include "qvb/circuit.hpp"
#include "qvb/pauli.hpp"
#include "qvb/rng.hpp"

namespace qvb {

/// Clifford unitary C in tableau form: the images of the single-qubit
/// generators under conjugation. Row i (1-based i in [1,n]) is the
/// destabilizer image C X_i C^dagger, row n+i the stabilizer image
/// C Z_i C^dagger. All row phases are +-1.
class CliffordTableau {
  public:
    explicit CliffordTableau(size_t n);

    size_t num_qubits() const { return n_; }

    /// Destabilizer image C X_i C^dagger, i in [1, n].
    const PauliString& destabilizer(size_t i) const;
    /// Stabilizer image C Z_i C^dagger, i in [1, n].
    const PauliString& stabilizer(size_t i) const;
    PauliString& destabilizer(size_t i);
    PauliString& stabilizer(size_t i);

    bool operator==(const CliffordTableau& other) const = default;

    /// Conjugates every row by the given gate.
    void apply(const Gate& g);
    void apply(const Circuit& c);

    /// Checks the symplectic pairing of all rows (and +-1 phases).
    bool is_valid() const;

    /// Uniformly random element of the Clifford group: uniform symplectic
    /// part (built as a random hyperbolic basis) with uniform +-1 row signs.
    static CliffordTableau random(size_t n, Rng& rng);

    /// Gaussian-elimination synthesis over {H, S, Sdg, CNOT} plus a final
    /// X/Z layer fixing row signs. Replaying the result on the identity
    /// tableau reproduces *this exactly. O(n^2) gates.
    Circuit synthesize() const;

    /// <psi| p |psi> for |psi> = C|0...0>: +1 / -1 / 0 by stabilizer-group
    /// membership (mod-2 elimination over the stabilizer rows with phases).
    int noiseless_expectation(const PauliString& p) const;

  private:
    size_t n_;
    std::vector<PauliString> rows_;  // [0,n): destabilizers, [n,2n): stabilizers
};

}  // namespace qvb
