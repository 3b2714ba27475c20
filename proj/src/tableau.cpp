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

#include "qvb/tableau.hpp"

#include <cstdint>
#include <stdexcept>

namespace qvb {

CliffordTableau::CliffordTableau(size_t n) : n_(n), rows_(2 * n, PauliString(n)) {
    if (n == 0) {
        throw std::invalid_argument("CliffordTableau: n must be >= 1");
    }
    for (size_t i = 0; i < n; i++) {
        rows_[i].set_x(i, true);
        rows_[n + i].set_z(i, true);
    }
}

const PauliString& CliffordTableau::destabilizer(size_t i) const {
    if (i < 1 || i > n_) {
        throw std::out_of_range("CliffordTableau::destabilizer: index out of range");
    }
    return rows_[i - 1];
}

const PauliString& CliffordTableau::stabilizer(size_t i) const {
    if (i < 1 || i > n_) {
        throw std::out_of_range("CliffordTableau::stabilizer: index out of range");
    }
    return rows_[n_ + i - 1];
}

PauliString& CliffordTableau::destabilizer(size_t i) {
    return const_cast<PauliString&>(static_cast<const CliffordTableau&>(*this).destabilizer(i));
}

PauliString& CliffordTableau::stabilizer(size_t i) {
    return const_cast<PauliString&>(static_cast<const CliffordTableau&>(*this).stabilizer(i));
}

void CliffordTableau::apply(const Gate& g) {
    if (g.q0 >= n_ || (g.kind == GateKind::CNOT && g.q1 >= n_)) {
        throw std::out_of_range("CliffordTableau::apply: qubit index out of range");
    }
    for (PauliString& row : rows_) {
        switch (g.kind) {
            case GateKind::H:
                row.conj_h(g.q0);
                break;
            case GateKind::S:
                row.conj_s(g.q0);
                break;
            case GateKind::Sdg:
                row.conj_sdg(g.q0);
                break;
            case GateKind::X:
                row.conj_x(g.q0);
                break;
            case GateKind::Y:
                row.conj_y(g.q0);
                break;
            case GateKind::Z:
                row.conj_z(g.q0);
                break;
            case GateKind::CNOT:
                row.conj_cnot(g.q0, g.q1);
                break;
            case GateKind::Rz:
                throw std::invalid_argument("CliffordTableau::apply: Rz is not a Clifford gate");
        }
    }
}

void CliffordTableau::apply(const Circuit& c) {
    for (const Gate& g : c.gates) {
        apply(g);
    }
}

bool CliffordTableau::is_valid() const {
    for (size_t i = 0; i < 2 * n_; i++) {
        if (!rows_[i].is_hermitian()) {
            return false;
        }
        for (size_t j = i + 1; j < 2 * n_; j++) {
            bool partners = (j == i + n_);
            if (PauliString::commutes(rows_[i], rows_[j]) == partners) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Symplectic product over GF(2).
bool sp_product(const PauliString& a, const PauliString& b) {
    return !PauliString::commutes(a, b);
}

// Projects u onto the symplectic complement of the hyperbolic pairs built so
// far: u -> u + sum_j (<u,f_j> e_j + <u,e_j> f_j). Uniform inputs map to
// uniform outputs on the complement.
void sp_orthogonalize(PauliString& u, const std::vector<PauliString>& es, const std::vector<PauliString>& fs) {
    for (size_t j = 0; j < es.size(); j++) {
        bool with_f = sp_product(u, fs[j]);
        bool with_e = sp_product(u, es[j]);
        if (with_f) {
            u = PauliString::multiply(u, es[j]);
        }
        if (with_e) {
            u = PauliString::multiply(u, fs[j]);
        }
    }
    u.set_phase_exponent(0);
}

bool xz_zero(const PauliString& p) {
    for (size_t w = 0; w < p.x_words().size(); w++) {
        if (p.x_words()[w] | p.z_words()[w]) {
            return false;
        }
    }
    return true;
}

PauliString random_pauli_bits(size_t n, Rng& rng) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        uint64_t bits = rng() & 3;
        p.set_x(q, bits & 1);
        p.set_z(q, bits & 2);
    }
    return p;
}

}  // namespace

CliffordTableau CliffordTableau::random(size_t n, Rng& rng) {
    // Build a uniformly random hyperbolic (symplectic) basis pair by pair.
    // Each e_i is uniform over the nonzero vectors of the complement of the
    // previous pairs; each f_i is uniform over the complement vectors with
    // <e_i, f_i> = 1. The choice counts telescope to |Sp(2n, 2)| exactly, so
    // the resulting symplectic part is uniform.
    std::vector<PauliString> es, fs;
    es.reserve(n);
    fs.reserve(n);
    for (size_t i = 0; i < n; i++) {
        PauliString e(n);
        do {
            e = random_pauli_bits(n, rng);
            sp_orthogonalize(e, es, fs);
        } while (xz_zero(e));
        PauliString f(n);
        do {
            f = random_pauli_bits(n, rng);
            sp_orthogonalize(f, es, fs);
        } while (!sp_product(e, f));
        es.push_back(e);
        fs.push_back(f);
    }
    CliffordTableau t(n);
    for (size_t i = 0; i < n; i++) {
        es[i].set_sign((rng() & 1) ? -1 : 1);
        fs[i].set_sign((rng() & 1) ? -1 : 1);
        t.rows_[i] = es[i];
        t.rows_[n + i] = fs[i];
    }
    return t;
}

namespace {

// Position classes of a (destabilizer, stabilizer) row pair at one qubit.
// Canonical forms after single-qubit normalization:
//   A = (X, Z)   anticommuting pair
//   B = (X, X)   equal non-identity
//   C = (X, I)   destabilizer only
//   D = (I, Z)   stabilizer only
enum class PairClass { II, A, B, C, D };

void conj_with(PauliString& p, const Gate& g) {
    switch (g.kind) {
        case GateKind::H:
            p.conj_h(g.q0);
            break;
        case GateKind::S:
            p.conj_s(g.q0);
            break;
        case GateKind::Sdg:
            p.conj_sdg(g.q0);
            break;
        case GateKind::X:
            p.conj_x(g.q0);
            break;
        case GateKind::Y:
            p.conj_y(g.q0);
            break;
        case GateKind::Z:
            p.conj_z(g.q0);
            break;
        case GateKind::CNOT:
            p.conj_cnot(g.q0, g.q1);
            break;
        case GateKind::Rz:
            throw std::invalid_argument("conj_with: Rz is not a Clifford gate");
    }
}

PairClass classify_pair(const PauliString& d, const PauliString& s, size_t q) {
    int dc = (d.x_bit(q) ? 1 : 0) | (d.z_bit(q) ? 2 : 0);
    int sc = (s.x_bit(q) ? 1 : 0) | (s.z_bit(q) ? 2 : 0);
    if (dc == 0 && sc == 0) {
        return PairClass::II;
    }
    if (dc != 0 && sc != 0) {
        return dc == sc ? PairClass::B : PairClass::A;
    }
    return dc != 0 ? PairClass::C : PairClass::D;
}

// Reduces one (destabilizer, stabilizer) pair to (+-X_i, +-Z_i) jointly, so a
// single CNOT clears a qubit from both rows at once. Decisions are driven
// only by the two rows, which lets the greedy pivot search dry-run the exact
// gate sequence on a cheap two-row copy. Returns the CNOT count.
template <typename EmitFn>
size_t reduce_pair(const PauliString& destab, const PauliString& stab, size_t i, EmitFn&& emit) {
    size_t cnots = 0;
    auto gate = [&](const Gate& g) {
        if (g.kind == GateKind::CNOT) {
            cnots++;
        }
        emit(g);
    };
    auto cz = [&](size_t a, size_t b) {
        gate(Gate::h(b));
        gate(Gate::cnot(a, b));
        gate(Gate::h(b));
    };
    // Single-qubit normalization into the canonical class forms.
    auto normalize = [&](size_t q) {
        PairClass cls = classify_pair(destab, stab, q);
        if (cls == PairClass::II) {
            return;
        }
        if (cls == PairClass::D) {
            if (stab.x_bit(q) && stab.z_bit(q)) {
                gate(Gate::s(q));  // Y -> X, then fold below
            }
            if (stab.x_bit(q)) {
                gate(Gate::h(q));  // X -> Z
            }
            return;
        }
        // Classes A, B, C carry a non-identity destabilizer character.
        if (destab.x_bit(q) && destab.z_bit(q)) {
            gate(Gate::sdg(q));  // Y -> X
        } else if (destab.z_bit(q)) {
            gate(Gate::h(q));  // Z -> X
        }
        if (cls == PairClass::A && stab.x_bit(q) && stab.z_bit(q)) {
            // (X, Y) -> (X, Z): sqrt(X) realized as H S H.
            gate(Gate::h(q));
            gate(Gate::s(q));
            gate(Gate::h(q));
        }
    };

    size_t n = destab.num_qubits();
    std::vector<size_t> as, bs, cs, ds;
    for (size_t q = 0; q < n; q++) {
        normalize(q);
        switch (classify_pair(destab, stab, q)) {
            case PairClass::A:
                as.push_back(q);
                break;
            case PairClass::B:
                bs.push_back(q);
                break;
            case PairClass::C:
                cs.push_back(q);
                break;
            case PairClass::D:
                ds.push_back(q);
                break;
            case PairClass::II:
                break;
        }
    }
    // Keep the home qubit last in its pool so merges converge onto it.
    auto prefer_home = [&](std::vector<size_t>& pool) {
        for (size_t k = 0; k < pool.size(); k++) {
            if (pool[k] == i) {
                std::swap(pool[k], pool.front());
            }
        }
    };
    prefer_home(as);

    // Anticommutation forces an odd A count; pair surplus A's into C + D.
    while (as.size() >= 3) {
        size_t k = as.back();
        as.pop_back();
        size_t j = as.back();
        as.pop_back();
        gate(Gate::cnot(j, k));  // (X,Z)+(X,Z) -> (X,I) at j, (I,Z) at k
        cs.push_back(j);
        ds.push_back(k);
    }
    size_t a = as.front();

    // Merge each remaining pool down to a single position.
    auto merge_pool = [&](std::vector<size_t>& pool, bool control_keeps) {
        prefer_home(pool);
        while (pool.size() > 1) {
            size_t k = pool.back();
            pool.pop_back();
            size_t j = pool.front();
            if (control_keeps) {
                gate(Gate::cnot(j, k));
            } else {
                gate(Gate::cnot(k, j));
            }
        }
    };
    merge_pool(bs, true);   // (X,X)+(X,X): CNOT(keep, clear)
    merge_pool(cs, true);   // (X,I)+(X,I): CNOT(keep, clear)
    merge_pool(ds, false);  // (I,Z)+(I,Z): CNOT(clear, keep)

    // Fold the B remnant into the A pair: CZ sends A+B to C + A, with the A
    // pair landing on the old B position.
    if (!bs.empty()) {
        size_t b = bs.front();
        cz(a, b);
        normalize(a);  // (Y,I) -> (X,I)
        normalize(b);  // (Y,X) -> (X,Z)
        cs.push_back(a);
        a = b;
        merge_pool(cs, true);
    }
    // Fold C and D remnants; when the remnant sits on the home qubit, walk
    // the A pair over to it instead (two CNOTs, cheaper than a swap).
    if (!cs.empty()) {
        size_t c = cs.front();
        if (c == i && a != i) {
            gate(Gate::cnot(i, a));  // home becomes the A pair, a turns into D
            gate(Gate::cnot(a, i));
            a = i;
        } else {
            gate(Gate::cnot(a, c));
        }
    }
    if (!ds.empty()) {
        size_t d = ds.front();
        if (d == i && a != i) {
            gate(Gate::cnot(a, i));  // home becomes the A pair, a turns into C
            gate(Gate::cnot(i, a));
            a = i;
        } else {
            gate(Gate::cnot(d, a));
        }
    }
    // Home qubit absent from the pair entirely: relocate with three CNOTs.
    if (a != i) {
        gate(Gate::cnot(i, a));
        gate(Gate::cnot(a, i));
        gate(Gate::cnot(i, a));
    }
    return cnots;
}

}  // namespace

Circuit CliffordTableau::synthesize() const {
    if (!is_valid()) {
        throw std::invalid_argument("CliffordTableau::synthesize: non-symplectic tableau");
    }
    // Reduce a working copy to the identity tableau with conjugation gates,
    // then invert the recorded sequence. Pairs are disentangled jointly and
    // in greedy order: each step picks the remaining pair whose reduction
    // needs the fewest CNOTs. Once a pair is reduced to (X_i, Z_i), every
    // other row commutes with both, so it is identity on qubit i and later
    // steps never touch finished qubits.
    CliffordTableau w = *this;
    size_t n = n_;
    std::vector<Gate> ops;
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; step++) {
        size_t best = n;
        size_t best_cost = SIZE_MAX;
        for (size_t r = 0; r < n; r++) {
            if (done[r]) {
                continue;
            }
            PauliString d = w.rows_[r];
            PauliString s = w.rows_[n + r];
            size_t cost = reduce_pair(d, s, r, [&](const Gate& g) {
                conj_with(d, g);
                conj_with(s, g);
            });
            if (cost < best_cost) {
                best_cost = cost;
                best = r;
            }
        }
        reduce_pair(w.rows_[best], w.rows_[n + best], best, [&](const Gate& g) {
            w.apply(g);
            ops.push_back(g);
        });
        done[best] = true;
    }
    // Sign fixups: X_i flips the stabilizer sign, Z_i the destabilizer sign.
    for (size_t i = 0; i < n; i++) {
        if (w.rows_[n + i].sign() < 0) {
            w.apply(Gate::x(i));
            ops.push_back(Gate::x(i));
        }
        if (w.rows_[i].sign() < 0) {
            w.apply(Gate::z(i));
            ops.push_back(Gate::z(i));
        }
    }

    // w is now the identity; the circuit for *this is the inverse sequence.
    Circuit out(n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::S) {
            g.kind = GateKind::Sdg;
        } else if (g.kind == GateKind::Sdg) {
            g.kind = GateKind::S;
        }
        out.append(g);
    }
    return out;
}

int CliffordTableau::noiseless_expectation(const PauliString& p) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("noiseless_expectation: dimension mismatch");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("noiseless_expectation: non-Hermitian operator");
    }
    // p has nonzero expectation iff it commutes with every stabilizer row;
    // in that case it is a product of stabilizer rows and the accumulated
    // phase decides the sign.
    for (size_t i = 0; i < n_; i++) {
        if (!PauliString::commutes(p, rows_[n_ + i])) {
            return 0;
        }
    }
    // Express p over the stabilizer rows: the destabilizer pairing gives the
    // combination directly (row n+i participates iff p anticommutes with
    // destabilizer row i).
    PauliString acc(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!PauliString::commutes(p, rows_[i])) {
            acc = PauliString::multiply(acc, rows_[n_ + i]);
        }
    }
    // acc and p now agree on bits; compare phases.
    return acc.phase_exponent() == p.phase_exponent() ? 1 : -1;
}

}  // namespace qvb
