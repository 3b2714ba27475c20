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

#include "qvb/shots.hpp"

#include <stdexcept>

namespace qvb {

namespace {

// Anticommutation of two single-pair Paulis given their (x,z) bit packs:
// bits are (x0, z0, x1, z1) in the low nibble.
bool pair_anticommutes(uint8_t a, uint8_t b) {
    int parity = 0;
    parity ^= ((a >> 0) & 1) & ((b >> 1) & 1);  // x0*z0'
    parity ^= ((a >> 1) & 1) & ((b >> 0) & 1);
    parity ^= ((a >> 2) & 1) & ((b >> 3) & 1);
    parity ^= ((a >> 3) & 1) & ((b >> 2) & 1);
    return parity != 0;
}

}  // namespace

ShotSampler::ShotSampler(const Circuit& circuit, const PauliString& observable, int noiseless_value, NoiseParams noise)
    : base_(noiseless_value), p_2q_(noise.p_2q) {
    if (!observable.is_hermitian()) {
        throw std::invalid_argument("ShotSampler: observable must be Hermitian");
    }
    if (noiseless_value < -1 || noiseless_value > 1) {
        throw std::invalid_argument("ShotSampler: noiseless value must be in {-1, 0, +1}");
    }
    double damp = std::pow(1.0 - 2.0 * noise.p_m, static_cast<double>(observable.weight()));
    parity_flip_readout_ = (1.0 - damp) / 2.0;

    // Pull the observable back through the circuit, recording its two-qubit
    // restriction at every CNOT (the fault insertion points). Walking the
    // gate list in reverse while undoing each gate yields the conjugation by
    // the inverse of the suffix.
    PauliString cur = observable;
    std::vector<uint8_t> rev;
    for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
        const Gate& g = *it;
        if (g.kind == GateKind::CNOT) {
            uint8_t mask = static_cast<uint8_t>(cur.x_bit(g.q0)) | (static_cast<uint8_t>(cur.z_bit(g.q0)) << 1) |
                           (static_cast<uint8_t>(cur.x_bit(g.q1)) << 2) | (static_cast<uint8_t>(cur.z_bit(g.q1)) << 3);
            rev.push_back(mask);
        }
        switch (g.kind) {
            case GateKind::H:
                cur.conj_h(g.q0);
                break;
            case GateKind::S:
                cur.conj_sdg(g.q0);
                break;
            case GateKind::Sdg:
                cur.conj_s(g.q0);
                break;
            case GateKind::X:
            case GateKind::Y:
            case GateKind::Z:
                break;  // self-inverse, no bit change
            case GateKind::CNOT:
                cur.conj_cnot(g.q0, g.q1);
                break;
            case GateKind::Rz:
                throw std::invalid_argument("ShotSampler: circuit contains a non-Clifford gate");
        }
    }
    cnot_masks_.assign(rev.rbegin(), rev.rend());
}

int ShotSampler::sample(Rng& rng) const {
    int value = base_ != 0 ? base_ : (rng() & 1 ? 1 : -1);
    if (p_2q_ > 0.0 && !cnot_masks_.empty()) {
        size_t pos = geometric_skip(rng, p_2q_);
        while (pos < cnot_masks_.size()) {
            // Uniform non-identity two-qubit Pauli on the CNOT's pair.
            uint8_t fault = static_cast<uint8_t>(1 + uniform_below(rng, 15));
            if (pair_anticommutes(fault, cnot_masks_[pos])) {
                value = -value;
            }
            pos += 1 + geometric_skip(rng, p_2q_);
        }
    }
    if (parity_flip_readout_ > 0.0 && bernoulli(rng, parity_flip_readout_)) {
        value = -value;
    }
    return value;
}

ExpectationEstimate ShotSampler::estimate(uint64_t shots, Rng& rng, ObservableKind kind) const {
    int64_t total = 0;
    for (uint64_t s = 0; s < shots; s++) {
        total += sample(rng);
    }
    ExpectationEstimate e;
    e.mean = static_cast<double>(total) / static_cast<double>(shots);
    e.shots = shots;
    e.kind = kind;
    return e;
}

ExpectationEstimate estimate_expectation(const Circuit& circuit,
                                         const CliffordTableau& tableau,
                                         const PauliString& observable,
                                         ObservableKind kind,
                                         NoiseParams noise,
                                         uint64_t shots,
                                         Rng& rng) {
    ShotSampler sampler(circuit, observable, tableau.noiseless_expectation(observable), noise);
    ExpectationEstimate e = sampler.estimate(shots, rng, kind);
    e.op = observable.str();
    return e;
}

}  // namespace qvb
