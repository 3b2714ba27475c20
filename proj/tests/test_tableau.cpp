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
#include <map>
#include <string>

#include "qvb/circuit.hpp"
#include "qvb/rng.hpp"
#include "qvb/tableau.hpp"
#include "support/statevector.hpp"

using namespace qvb;
namespace tst = qvb::testing;

namespace {

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

PauliString random_hermitian_pauli(size_t n, Rng& rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t v = uniform_below(rng, 4);
        p.set_x(q, v & 1);
        p.set_z(q, (v >> 1) & 1);
    }
    p.set_sign(uniform_below(rng, 2) ? 1 : -1);
    return p;
}

// Canonical text key for a tableau, used to bucket sampled Cliffords.
std::string tableau_key(const CliffordTableau& t) {
    std::string key;
    for (size_t i = 1; i <= t.num_qubits(); i++) {
        key += t.destabilizer(i).str();
        key += '|';
        key += t.stabilizer(i).str();
        key += '|';
    }
    return key;
}

// Upper tail of the chi-square distribution via the Wilson-Hilferty normal
// approximation; plenty for the p > 0.001 accept bands used here.
double chi_square_upper_p(double stat, double dof) {
    double z = (std::cbrt(stat / dof) - (1.0 - 2.0 / (9.0 * dof))) / std::sqrt(2.0 / (9.0 * dof));
    return 1.0 - 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace

TEST_CASE("gate application matches the dense simulator") {
    Rng rng(404);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 30; trial++) {
            Circuit c = random_clifford_circuit(n, 25, rng);
            CliffordTableau t(n);
            t.apply(c);
            CHECK(t.is_valid());
            tst::State psi = tst::zero_state(n);
            tst::apply_circuit(psi, c);
            for (int probe = 0; probe < 20; probe++) {
                PauliString p = random_hermitian_pauli(n, rng);
                double dense = tst::expectation(psi, p);
                int engine = t.noiseless_expectation(p);
                CHECK(std::abs(dense - engine) < 1e-9);
            }
        }
    }
}

TEST_CASE("noiseless expectation of every signed Pauli at n <= 3") {
    Rng rng(505);
    for (size_t n = 1; n <= 3; n++) {
        CliffordTableau t = CliffordTableau::random(n, rng);
        tst::State psi = tst::zero_state(n);
        tst::apply_circuit(psi, t.synthesize());
        size_t strings = 1;
        for (size_t q = 0; q < n; q++) strings *= 4;
        for (size_t code = 0; code < strings; code++) {
            PauliString p(n);
            size_t c = code;
            for (size_t q = 0; q < n; q++) {
                p.set_x(q, c & 1);
                p.set_z(q, (c >> 1) & 1);
                c >>= 2;
            }
            for (int sign : {1, -1}) {
                p.set_sign(sign);
                CHECK(std::abs(tst::expectation(psi, p) - t.noiseless_expectation(p)) < 1e-9);
            }
        }
    }
}

TEST_CASE("noiseless expectation for random tableaus at n = 4..6") {
    Rng rng(606);
    for (size_t n = 4; n <= 6; n++) {
        for (int trial = 0; trial < 34; trial++) {
            CliffordTableau t = CliffordTableau::random(n, rng);
            tst::State psi = tst::zero_state(n);
            tst::apply_circuit(psi, t.synthesize());
            for (int probe = 0; probe < 3; probe++) {
                PauliString p = random_hermitian_pauli(n, rng);
                CHECK(std::abs(tst::expectation(psi, p) - t.noiseless_expectation(p)) < 1e-9);
            }
        }
    }
}

TEST_CASE("synthesis round-trips 200 random tableaus at n <= 8") {
    Rng rng(707);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + uniform_below(rng, 8);
        CliffordTableau t = CliffordTableau::random(n, rng);
        Circuit c = t.synthesize();
        CliffordTableau replay(n);
        replay.apply(c);
        CHECK(replay == t);
    }
}

TEST_CASE("synthesis gate count grows no faster than quadratically") {
    Rng rng(808);
    std::map<size_t, double> mean_cnots;
    for (size_t n : {8, 16, 32}) {
        double total = 0.0;
        const int samples = 20;
        for (int trial = 0; trial < samples; trial++) {
            Circuit c = CliffordTableau::random(n, rng).synthesize();
            total += static_cast<double>(c.metrics().two_qubit_count);
        }
        mean_cnots[n] = total / samples;
    }
    double slope = std::log2(mean_cnots[32] / mean_cnots[8]) / 2.0;
    CHECK(slope < 2.2);
    // And the constant stays sane: well under one CNOT per tableau entry.
    CHECK(mean_cnots[32] < 32.0 * 32.0);
}

TEST_CASE("random Clifford sampling is uniform at n = 1") {
    // |C(1)| = 24: 6 symplectic images times 4 sign patterns.
    const size_t classes = 24;
    const size_t samples = 24000;
    Rng rng(909);
    std::map<std::string, size_t> counts;
    for (size_t k = 0; k < samples; k++) {
        counts[tableau_key(CliffordTableau::random(1, rng))]++;
    }
    REQUIRE(counts.size() == classes);
    double expected = static_cast<double>(samples) / classes;
    double stat = 0.0;
    for (const auto& [key, c] : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    CHECK(chi_square_upper_p(stat, classes - 1) > 0.001);
}

TEST_CASE("random Clifford sampling is uniform at n = 2") {
    // |C(2)| = 11520 = 720 symplectic classes times 16 sign patterns.
    const size_t classes = 11520;
    const size_t samples = 600 * 1024;
    Rng rng(910);
    std::map<std::string, size_t> counts;
    for (size_t k = 0; k < samples; k++) {
        counts[tableau_key(CliffordTableau::random(2, rng))]++;
    }
    REQUIRE(counts.size() == classes);
    double expected = static_cast<double>(samples) / classes;
    double stat = 0.0;
    for (const auto& [key, c] : counts) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    CHECK(chi_square_upper_p(stat, classes - 1) > 0.001);
}
