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

#include "qvb/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qvb {

namespace {
size_t words_for(size_t n) {
    return (n + 63) / 64;
}
}  // namespace

PauliString::PauliString(size_t n) : n_(n), xw_(words_for(n), 0), zw_(words_for(n), 0) {}

void PauliString::set_x(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) {
        xw_[q >> 6] |= mask;
    } else {
        xw_[q >> 6] &= ~mask;
    }
}

void PauliString::set_z(size_t q, bool v) {
    uint64_t mask = uint64_t{1} << (q & 63);
    if (v) {
        zw_[q >> 6] |= mask;
    } else {
        zw_[q >> 6] &= ~mask;
    }
}

bool PauliString::is_identity() const {
    for (size_t w = 0; w < xw_.size(); w++) {
        if (xw_[w] | zw_[w]) {
            return false;
        }
    }
    return phase_ == 0;
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xw_.size(); w++) {
        total += std::popcount(xw_[w] | zw_[w]);
    }
    return total;
}

PauliString PauliString::multiply(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("PauliString::multiply: size mismatch");
    }
    PauliString out(a.n_);
    int phase = a.phase_ + b.phase_;
    for (size_t w = 0; w < a.xw_.size(); w++) {
        uint64_t x1 = a.xw_[w], z1 = a.zw_[w];
        uint64_t x2 = b.xw_[w], z2 = b.zw_[w];
        // Per-qubit letter product: cyclic pairs (X,Y),(Y,Z),(Z,X) pick up a
        // factor +i, anticyclic pairs -i.
        uint64_t cyc = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t anti = (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2) | (x1 & z1 & x2 & ~z2);
        phase += std::popcount(cyc) - std::popcount(anti);
        out.xw_[w] = x1 ^ x2;
        out.zw_[w] = z1 ^ z2;
    }
    out.set_phase_exponent(phase);
    return out;
}

bool PauliString::commutes(const PauliString& a, const PauliString& b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("PauliString::commutes: size mismatch");
    }
    uint64_t parity = 0;
    for (size_t w = 0; w < a.xw_.size(); w++) {
        parity ^= (a.xw_[w] & b.zw_[w]) ^ (a.zw_[w] & b.xw_[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

PauliString PauliString::parse(std::string_view text) {
    int sign = 1;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') {
            sign = -1;
        }
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("PauliString::parse: empty string");
    }
    PauliString out(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case 'I':
                break;
            case 'X':
                out.set_x(q, true);
                break;
            case 'Y':
                out.set_x(q, true);
                out.set_z(q, true);
                break;
            case 'Z':
                out.set_z(q, true);
                break;
            default:
                throw std::invalid_argument(std::string("PauliString::parse: illegal character '") + text[q] + "'");
        }
    }
    out.set_sign(sign);
    return out;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(n_ + 1);
    out.push_back(phase_ == 0 ? '+' : '-');
    for (size_t q = 0; q < n_; q++) {
        bool x = x_bit(q), z = z_bit(q);
        out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
    }
    return out;
}

void PauliString::conj_h(size_t q) {
    bool x = x_bit(q), z = z_bit(q);
    if (x && z) {
        phase_ = (phase_ + 2) & 3;  // Y -> -Y
    }
    set_x(q, z);
    set_z(q, x);
}

void PauliString::conj_s(size_t q) {
    bool x = x_bit(q), z = z_bit(q);
    if (x && z) {
        phase_ = (phase_ + 2) & 3;  // Y -> -X
    }
    set_z(q, z ^ x);
}

void PauliString::conj_sdg(size_t q) {
    bool x = x_bit(q), z = z_bit(q);
    if (x && !z) {
        phase_ = (phase_ + 2) & 3;  // X -> -Y
    }
    set_z(q, z ^ x);
}

void PauliString::conj_x(size_t q) {
    if (z_bit(q)) {
        phase_ = (phase_ + 2) & 3;
    }
}

void PauliString::conj_y(size_t q) {
    if (x_bit(q) != z_bit(q)) {
        phase_ = (phase_ + 2) & 3;
    }
}

void PauliString::conj_z(size_t q) {
    if (x_bit(q)) {
        phase_ = (phase_ + 2) & 3;
    }
}

void PauliString::conj_cnot(size_t control, size_t target) {
    bool xc = x_bit(control), zc = z_bit(control);
    bool xt = x_bit(target), zt = z_bit(target);
    if (xc && zt && !(xt ^ zc)) {
        phase_ = (phase_ + 2) & 3;
    }
    set_x(target, xt ^ xc);
    set_z(control, zc ^ zt);
}

}  // namespace qvb
