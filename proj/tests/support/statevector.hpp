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

// Brute-force dense statevector simulator. Deliberately independent of the
// tableau engine so the two can check each other: everything here is plain
// amplitude arithmetic.

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qvb/circuit.hpp"
#include "qvb/pauli.hpp"
#include "qvb/rng.hpp"

namespace qvb::testing {

using Amp = std::complex<double>;
using State = std::vector<Amp>;

inline State zero_state(size_t n) {
    State s(size_t{1} << n, Amp{0.0, 0.0});
    s[0] = Amp{1.0, 0.0};
    return s;
}

inline State random_state(size_t n, Rng& rng) {
    State s(size_t{1} << n);
    double norm2 = 0.0;
    for (Amp& a : s) {
        a = Amp{standard_normal(rng), standard_normal(rng)};
        norm2 += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (Amp& a : s) {
        a *= inv;
    }
    return s;
}

inline void apply_gate(State& s, const Gate& g, size_t n) {
    const size_t dim = size_t{1} << n;
    const size_t bit = size_t{1} << g.q0;
    const Amp i{0.0, 1.0};
    switch (g.kind) {
        case GateKind::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (size_t k = 0; k < dim; k++) {
                if (k & bit) continue;
                Amp a = s[k], b = s[k | bit];
                s[k] = r * (a + b);
                s[k | bit] = r * (a - b);
            }
            break;
        }
        case GateKind::S:
            for (size_t k = 0; k < dim; k++) {
                if (k & bit) s[k] *= i;
            }
            break;
        case GateKind::Sdg:
            for (size_t k = 0; k < dim; k++) {
                if (k & bit) s[k] *= -i;
            }
            break;
        case GateKind::X:
            for (size_t k = 0; k < dim; k++) {
                if (!(k & bit)) std::swap(s[k], s[k | bit]);
            }
            break;
        case GateKind::Y:
            for (size_t k = 0; k < dim; k++) {
                if (!(k & bit)) {
                    Amp a = s[k];
                    s[k] = -i * s[k | bit];
                    s[k | bit] = i * a;
                }
            }
            break;
        case GateKind::Z:
            for (size_t k = 0; k < dim; k++) {
                if (k & bit) s[k] = -s[k];
            }
            break;
        case GateKind::CNOT: {
            const size_t tbit = size_t{1} << g.q1;
            for (size_t k = 0; k < dim; k++) {
                if ((k & bit) && !(k & tbit)) std::swap(s[k], s[k | tbit]);
            }
            break;
        }
        case GateKind::Rz: {
            const Amp em = std::exp(Amp{0.0, -g.angle / 2.0});
            const Amp ep = std::exp(Amp{0.0, g.angle / 2.0});
            for (size_t k = 0; k < dim; k++) {
                s[k] *= (k & bit) ? ep : em;
            }
            break;
        }
    }
}

inline void apply_circuit(State& s, const Circuit& c) {
    for (const Gate& g : c.gates) {
        apply_gate(s, g, c.n_qubits);
    }
}

/// |out> = P |in>, including the global i^phase.
inline State apply_pauli(const State& s, const PauliString& p) {
    const size_t n = p.num_qubits();
    const size_t dim = size_t{1} << n;
    if (s.size() != dim) throw std::invalid_argument("size mismatch");
    static const Amp iphase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    State out(dim);
    for (size_t k = 0; k < dim; k++) {
        size_t k2 = k;
        int ph = p.phase_exponent();
        for (size_t q = 0; q < n; q++) {
            const bool x = p.x_bit(q), z = p.z_bit(q);
            const bool b = (k >> q) & 1;
            if (x && z) {  // Y|0> = i|1>, Y|1> = -i|0>
                ph = (ph + (b ? 3 : 1)) % 4;
                k2 ^= size_t{1} << q;
            } else if (x) {
                k2 ^= size_t{1} << q;
            } else if (z) {
                if (b) ph = (ph + 2) % 4;
            }
        }
        out[k2] += iphase[ph] * s[k];
    }
    return out;
}

inline Amp inner(const State& a, const State& b) {
    Amp acc{0.0, 0.0};
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

/// <s| P |s>, real part (P Hermitian in all uses here).
inline double expectation(const State& s, const PauliString& p) {
    return inner(s, apply_pauli(s, p)).real();
}

inline double dist(const State& a, const State& b) {
    double acc = 0.0;
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::norm(a[k] - b[k]);
    }
    return std::sqrt(acc);
}

}  // namespace qvb::testing
