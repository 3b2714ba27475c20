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
#include <utility>
#include <vector>

#include "qvb/clv.hpp"
#include "qvb/majorana.hpp"
#include "qvb/shots.hpp"

namespace qvb {

/// Measurement-budget rule: 20 + floor(n/5) above ten qubits by default; the
/// sparser 20 + floor(n/20) variant is selectable.
enum class CountRule { MainText, Appendix };

struct FfvConfig {
    size_t k_instances = 4;
    uint64_t shots = 512;
    double tau_s = std::exp(-1.0);
    double tau_d = 0.5 * std::exp(-1.0);
    NoiseParams noise;
    uint64_t seed = 0;
    SearchMode search = SearchMode::Linear;
    CountRule count_rule = CountRule::MainText;
};

/// Number of Majorana observables measured per instance: 2n for n <= 10,
/// otherwise the configured budget rule.
size_t measurement_count(size_t n, CountRule rule = CountRule::MainText);

struct LinCombResult {
    bool parallel = true;
    double value = 0.0;
    double sigma = 0.0;
    size_t i = 0;                  // initial Majorana index, 1-based
    size_t j = 0;                  // combination column; equals i when parallel
    std::vector<size_t> indices;   // measured Majorana indices J, 1-based
};

/// Parallel and orthogonal reduced linear combinations over the measured
/// set. Weights come from the known target O: column i renormalized by its
/// kept square mass for the parallel result, raw column j_orth for the
/// orthogonal one. Sigmas follow from per-observable shot noise.
std::pair<LinCombResult, LinCombResult> build_lincombs(
    const FermionInstance& inst,
    const std::vector<size_t>& measured,  // 1-based indices J
    const std::vector<ExpectationEstimate>& estimates,
    size_t j_orth);

/// Pass iff parallel.value - 2 sigma >= tau_S and
/// |orthogonal.value| + 2 sigma <= tau_D.
bool evaluate_ffv_criteria(const LinCombResult& parallel, const LinCombResult& orthogonal,
                           const FfvConfig& cfg);

struct FfvInstanceResult {
    size_t i = 0;
    size_t j_orth = 0;
    std::vector<size_t> measured;  // 1-based
    std::vector<ExpectationEstimate> estimates;
    LinCombResult parallel;
    LinCombResult orthogonal;
    bool pass = false;
};

struct FfvVerdict {
    size_t n = 0;
    std::vector<FfvInstanceResult> instances;
    bool pass = false;
    double wall_seconds = 0.0;
};

struct FfvRunResult {
    size_t score = 0;
    std::vector<FfvVerdict> levels;
};

/// One level: K Haar instances, averaged-noise evolution of the excited
/// column, readout damping, top-|entry| measurement reduction, L shots per
/// measured Majorana, both linear combinations, criteria.
FfvVerdict run_ffv_level(size_t n, const FfvConfig& cfg);

/// Search semantics identical to run_clv_search.
FfvRunResult run_ffv_search(const FfvConfig& cfg, size_t n_max);

}  // namespace qvb
