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

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qvb/circuit.hpp"
#include "qvb/pauli.hpp"
#include "qvb/rng.hpp"
#include "qvb/tableau.hpp"

namespace qvb {

struct NoiseParams {
    double p_2q = 0.0;  // depolarizing probability after each CNOT
    double p_m = 0.0;   // per-qubit readout bit flip
};

enum class ObservableKind { Stabilizer, Destabilizer };

struct ExpectationEstimate {
    double mean = 0.0;
    uint64_t shots = 0;
    std::string op;  // text form of the measured operator
    ObservableKind kind = ObservableKind::Stabilizer;

    double sigma() const { return std::sqrt((1.0 - mean * mean) / static_cast<double>(shots)); }
};

/// One-observable shot sampler for a compiled Clifford circuit under the
/// two-qubit depolarizing + readout bit-flip noise model.
///
/// Each CNOT fault is a uniformly random non-identity two-qubit Pauli; its
/// only measurable effect is whether it anticommutes with the observable
/// pulled back to the insertion point, which flips the recorded parity.
/// Readout flips on the observable's support likewise reduce to one parity
/// flip with probability (1 - (1-2p_m)^|support|) / 2. The sampled parity
/// distribution is identical to per-qubit trajectory simulation.
class ShotSampler {
  public:
    ShotSampler(const Circuit& circuit, const PauliString& observable, int noiseless_value, NoiseParams noise);

    /// One +-1 trajectory sample.
    int sample(Rng& rng) const;

    /// Empirical mean over `shots` samples.
    ExpectationEstimate estimate(uint64_t shots, Rng& rng, ObservableKind kind) const;

  private:
    int base_;                         // -1, 0 (coin flip) or +1
    double p_2q_;
    double parity_flip_readout_;       // collapsed per-support readout flip
    std::vector<uint8_t> cnot_masks_;  // observable (x0,z0,x1,z1) bits at each CNOT
};

/// Convenience wrapper: builds the sampler from the circuit's tableau.
ExpectationEstimate estimate_expectation(const Circuit& circuit,
                                         const CliffordTableau& tableau,
                                         const PauliString& observable,
                                         ObservableKind kind,
                                         NoiseParams noise,
                                         uint64_t shots,
                                         Rng& rng);

}  // namespace qvb
