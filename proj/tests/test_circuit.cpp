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

#include "qvb/circuit.hpp"
#include "qvb/majorana.hpp"
#include "qvb/orthogonal.hpp"
#include "qvb/rng.hpp"
#include "qvb/tableau.hpp"
#include "support/qasm_parse.hpp"

using namespace qvb;
namespace tst = qvb::testing;

TEST_CASE("metrics: greedy layering") {
    Circuit c(3);
    c.append(Gate::h(0));
    c.append(Gate::h(1));        // same layer as h(0)
    c.append(Gate::cnot(0, 1));  // layer 2
    c.append(Gate::s(2));        // layer 1 (qubit 2 free)
    c.append(Gate::cnot(1, 2));  // layer 3
    c.append(Gate::x(0));        // layer 3
    CircuitMetrics m = c.metrics();
    CHECK(m.total_count == 6);
    CHECK(m.two_qubit_count == 2);
    CHECK(m.total_depth == 3);
    CHECK(m.two_qubit_depth == 2);
}

TEST_CASE("metrics of the empty circuit") {
    Circuit c(4);
    CircuitMetrics m = c.metrics();
    CHECK(m.total_count == 0);
    CHECK(m.total_depth == 0);
    CHECK(m.two_qubit_depth == 0);
}

TEST_CASE("non-Clifford detection") {
    Circuit c(1);
    c.append(Gate::s(0));
    CHECK_FALSE(c.has_non_clifford());
    c.append(Gate::rz(0, 0.7));
    CHECK(c.has_non_clifford());
}

TEST_CASE("basis change layer maps the operator onto Z strings") {
    PauliString p = PauliString::parse("+XYIZ");
    Circuit layer = basis_change_layer(p);
    PauliString q = p;
    for (const Gate& g : layer.gates) {
        switch (g.kind) {
            case GateKind::H: q.conj_h(g.q0); break;
            case GateKind::S: q.conj_s(g.q0); break;
            case GateKind::Sdg: q.conj_sdg(g.q0); break;
            default: FAIL("unexpected gate kind in a basis change layer");
        }
    }
    for (size_t qu = 0; qu < 4; qu++) {
        CHECK_FALSE(q.x_bit(qu));
        CHECK(q.z_bit(qu) == (p.x_bit(qu) || p.z_bit(qu)));
    }
}

TEST_CASE("exported QASM re-parses to the identical gate list") {
    Rng rng(51);

    // Clifford synthesis output.
    CliffordTableau t = CliffordTableau::random(5, rng);
    Circuit clifford = t.synthesize();
    CHECK(tst::same_gates(tst::parse_qasm(clifford.to_qasm()), clifford));

    // Free-fermion lowering, which exercises rz angles.
    Eigen::MatrixXd o = sample_haar_so(8, rng);
    Circuit fermion = lower_givens(givens_decompose(o));
    CHECK(fermion.has_non_clifford());
    CHECK(tst::same_gates(tst::parse_qasm(fermion.to_qasm()), fermion));

    // Header shape.
    std::string text = clifford.to_qasm();
    CHECK(text.rfind("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[5];\n", 0) == 0);
}
