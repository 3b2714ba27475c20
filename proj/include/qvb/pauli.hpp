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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qvb {

/// Signed n-qubit Pauli operator in bit-plane form.
///
/// Each qubit carries an X bit and a Z bit (X=10, Z=01, Y=11). The overall
/// phase is i^phase_exp with phase_exp in {0,1,2,3}. Hermitian operators have
/// an even phase exponent; protocol-facing observables are always Hermitian.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(size_t n);

    size_t num_qubits() const { return n_; }

    bool x_bit(size_t q) const { return (xw_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (zw_[q >> 6] >> (q & 63)) & 1; }
    void set_x(size_t q, bool v);
    void set_z(size_t q, bool v);

    /// Phase exponent p of the global factor i^p, mod 4.
    int phase_exponent() const { return phase_; }
    void set_phase_exponent(int p) { phase_ = ((p % 4) + 4) % 4; }

    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// Sign of a Hermitian string: +1 or -1.
    int sign() const { return phase_ == 0 ? 1 : -1; }
    void set_sign(int s) { phase_ = (s >= 0) ? 0 : 2; }

    bool is_identity() const;
    size_t weight() const;  // number of non-identity sites

    bool operator==(const PauliString& other) const = default;

    /// Group product a*b with exact phase tracking. Throws on size mismatch.
    static PauliString multiply(const PauliString& a, const PauliString& b);

    /// True iff a and b commute (phase-independent symplectic test).
    static bool commutes(const PauliString& a, const PauliString& b);

    /// Parses an optional sign followed by {I,X,Y,Z} characters.
    static PauliString parse(std::string_view text);
    /// Emits the sign (always) followed by one letter per qubit.
    std::string str() const;

    // Raw word access for the tableau engine.
    const std::vector<uint64_t>& x_words() const { return xw_; }
    const std::vector<uint64_t>& z_words() const { return zw_; }
    std::vector<uint64_t>& x_words() { return xw_; }
    std::vector<uint64_t>& z_words() { return zw_; }

    // In-place conjugation P -> g P g^dagger by elementary gates.
    void conj_h(size_t q);
    void conj_s(size_t q);
    void conj_sdg(size_t q);
    void conj_x(size_t q);
    void conj_y(size_t q);
    void conj_z(size_t q);
    void conj_cnot(size_t control, size_t target);

  private:
    size_t n_ = 0;
    int phase_ = 0;
    std::vector<uint64_t> xw_;
    std::vector<uint64_t> zw_;
};

}  // namespace qvb
