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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qvb/rng.hpp"
#include "qvb/shots.hpp"
#include "qvb/tableau.hpp"

using namespace qvb;

namespace {

// Reference trajectory sampler, written against the definition instead of
// the parity-mask optimization: draw an explicit fault after each CNOT,
// push it forward through the rest of the circuit, then apply per-qubit
// readout flips on the observable support.
int trajectory_sample(const Circuit& circuit, const PauliString& observable, int base,
                      NoiseParams noise, Rng& rng) {
    const size_t n = circuit.n_qubits;
    PauliString frame(n);  // accumulated fault, pushed to the end
    for (size_t g = 0; g < circuit.gates.size(); g++) {
        const Gate& gate = circuit.gates[g];
        // Propagate the existing frame through this gate first.
        switch (gate.kind) {
            case GateKind::H: frame.conj_h(gate.q0); break;
            case GateKind::S: frame.conj_s(gate.q0); break;
            case GateKind::Sdg: frame.conj_sdg(gate.q0); break;
            case GateKind::X: frame.conj_x(gate.q0); break;
            case GateKind::Y: frame.conj_y(gate.q0); break;
            case GateKind::Z: frame.conj_z(gate.q0); break;
            case GateKind::CNOT: frame.conj_cnot(gate.q0, gate.q1); break;
            case GateKind::Rz: throw std::invalid_argument("Clifford circuits only");
        }
        if (gate.kind == GateKind::CNOT && bernoulli(rng, noise.p_2q)) {
            uint64_t code = 1 + uniform_below(rng, 15);  // non-identity on the pair
            PauliString fault(n);
            fault.set_x(gate.q0, code & 1);
            fault.set_z(gate.q0, (code >> 1) & 1);
            fault.set_x(gate.q1, (code >> 2) & 1);
            fault.set_z(gate.q1, (code >> 3) & 1);
            frame = PauliString::multiply(fault, frame);
        }
    }
    int value = base != 0 ? base : (bernoulli(rng, 0.5) ? 1 : -1);
    if (!PauliString::commutes(frame, observable)) {
        value = -value;
    }
    for (size_t q = 0; q < n; q++) {
        if ((observable.x_bit(q) || observable.z_bit(q)) && bernoulli(rng, noise.p_m)) {
            value = -value;
        }
    }
    return value;
}

Circuit random_clifford_circuit(size_t n, size_t len, Rng& rng) {
    Circuit c(n);
    for (size_t k = 0; k < len; k++) {
        uint64_t pick = uniform_below(rng, n >= 2 ? 4 : 3);
        size_t q = uniform_below(rng, n);
        switch (pick) {
            case 0: c.append(Gate::h(q)); break;
            case 1: c.append(Gate::s(q)); break;
            case 2: c.append(Gate::sdg(q)); break;
            default: {
                size_t t = uniform_below(rng, n - 1);
                if (t >= q) t++;
                c.append(Gate::cnot(q, t));
            }
        }
    }
    return c;
}

}  // namespace

TEST_CASE("readout flip closed form: H circuit, X observable") {
    Circuit c(1);
    c.append(Gate::h(0));
    PauliString x = PauliString::parse("+X");
    NoiseParams noise{0.0, 0.02};
    ShotSampler sampler(c, x, 1, noise);
    Rng rng(111);
    const uint64_t shots = 400000;
    double total = 0.0;
    for (uint64_t k = 0; k < shots; k++) total += sampler.sample(rng);
    double mean = total / static_cast<double>(shots);
    double expect = 1.0 - 2.0 * noise.p_m;  // 0.96
    CHECK(std::abs(mean - expect) < 4.0 / std::sqrt(static_cast<double>(shots)));
}

TEST_CASE("zero-expectation observable stays at zero mean") {
    Circuit c(1);
    c.append(Gate::h(0));
    PauliString z = PauliString::parse("+Z");
    ShotSampler sampler(c, z, 0, NoiseParams{0.01, 0.01});
    Rng rng(222);
    const uint64_t shots = 200000;
    double total = 0.0;
    for (uint64_t k = 0; k < shots; k++) total += sampler.sample(rng);
    CHECK(std::abs(total / static_cast<double>(shots)) < 4.0 / std::sqrt(static_cast<double>(shots)));
}

TEST_CASE("depolarizing closed form: k CNOTs damp by (1 - 16p/15)^k") {
    // Z on the control commutes with CNOT, so the observable seen at every
    // insertion point is Z x I: 8 of the 15 fault Paulis anticommute.
    const double p = 0.05;
    for (int k_cnots : {1, 3, 7}) {
        Circuit c(2);
        for (int k = 0; k < k_cnots; k++) c.append(Gate::cnot(0, 1));
        PauliString z0 = PauliString::parse("+ZI");
        ShotSampler sampler(c, z0, 1, NoiseParams{p, 0.0});
        Rng rng(333 + k_cnots);
        const uint64_t shots = 400000;
        double total = 0.0;
        for (uint64_t s = 0; s < shots; s++) total += sampler.sample(rng);
        double mean = total / static_cast<double>(shots);
        double expect = std::pow(1.0 - 16.0 * p / 15.0, k_cnots);
        CHECK(std::abs(mean - expect) < 4.0 / std::sqrt(static_cast<double>(shots)));
    }
}

TEST_CASE("sampler agrees with explicit fault-frame trajectories") {
    Rng rng(444);
    NoiseParams noise{0.02, 0.01};
    for (size_t n = 2; n <= 4; n++) {
        for (int trial = 0; trial < 4; trial++) {
            Circuit c = random_clifford_circuit(n, 30, rng);
            CliffordTableau t(n);
            t.apply(c);
            // A stabilizer image always has a deterministic noiseless value.
            PauliString obs = t.stabilizer(1 + uniform_below(rng, n));
            int base = t.noiseless_expectation(obs);
            REQUIRE(base != 0);

            ShotSampler sampler(c, obs, base, noise);
            const uint64_t shots = 120000;
            double fast = 0.0, slow = 0.0;
            for (uint64_t s = 0; s < shots; s++) fast += sampler.sample(rng);
            for (uint64_t s = 0; s < shots; s++) {
                slow += trajectory_sample(c, obs, base, noise, rng);
            }
            double se = 2.0 / std::sqrt(static_cast<double>(shots));  // both sides fluctuate
            CHECK(std::abs(fast - slow) / static_cast<double>(shots) < 4.0 * se);
        }
    }
}

TEST_CASE("estimate carries kind, shots and the sigma formula") {
    Circuit c(1);
    PauliString z = PauliString::parse("+Z");
    ShotSampler sampler(c, z, 1, NoiseParams{});
    Rng rng(555);
    ExpectationEstimate e = sampler.estimate(512, rng, ObservableKind::Destabilizer);
    CHECK(e.shots == 512);
    CHECK(e.kind == ObservableKind::Destabilizer);
    CHECK(e.mean == 1.0);  // noiseless, deterministic
    CHECK(e.sigma() == 0.0);
    e.mean = 0.4180;
    CHECK(2.0 * e.sigma() == doctest::Approx(0.080).epsilon(0.02));
}
