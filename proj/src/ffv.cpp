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

#include "qvb/ffv.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "qvb/orthogonal.hpp"

namespace qvb {

namespace {

constexpr uint64_t kFfvStream = 2;

}  // namespace

size_t measurement_count(size_t n, CountRule rule) {
    if (n < 1) {
        throw std::invalid_argument("measurement_count needs n >= 1");
    }
    if (n <= 10) {
        return 2 * n;
    }
    return 20 + (rule == CountRule::MainText ? n / 5 : n / 20);
}

std::pair<LinCombResult, LinCombResult> build_lincombs(
    const FermionInstance& inst,
    const std::vector<size_t>& measured,
    const std::vector<ExpectationEstimate>& estimates,
    size_t j_orth) {
    if (measured.empty() || measured.size() != estimates.size()) {
        throw std::invalid_argument("measured set and estimates must be non-empty and aligned");
    }
    if (j_orth == inst.init_index || j_orth < 1 || j_orth > 2 * inst.n) {
        throw std::invalid_argument("orthogonal index must differ from the initial index");
    }
    const auto ci = static_cast<Eigen::Index>(inst.init_index - 1);
    const auto cj = static_cast<Eigen::Index>(j_orth - 1);
    double par_num = 0.0, par_den = 0.0, par_var = 0.0;
    double orth_sum = 0.0, orth_var = 0.0;
    for (size_t a = 0; a < measured.size(); a++) {
        const auto row = static_cast<Eigen::Index>(measured[a] - 1);
        const double wi = inst.evolution(row, ci);
        const double wj = inst.evolution(row, cj);
        const double mean = estimates[a].mean;
        const double var = (1.0 - mean * mean) / static_cast<double>(estimates[a].shots);
        par_num += wi * mean;
        par_den += wi * wi;
        par_var += wi * wi * var;
        orth_sum += wj * mean;
        orth_var += wj * wj * var;
    }
    if (par_den <= 0.0) {
        throw std::invalid_argument("measured set carries no weight on the initial column");
    }
    LinCombResult parallel;
    parallel.parallel = true;
    parallel.value = par_num / par_den;
    parallel.sigma = std::sqrt(par_var) / par_den;
    parallel.i = inst.init_index;
    parallel.j = inst.init_index;
    parallel.indices = measured;
    LinCombResult orthogonal;
    orthogonal.parallel = false;
    orthogonal.value = orth_sum;
    orthogonal.sigma = std::sqrt(orth_var);
    orthogonal.i = inst.init_index;
    orthogonal.j = j_orth;
    orthogonal.indices = measured;
    return {std::move(parallel), std::move(orthogonal)};
}

bool evaluate_ffv_criteria(const LinCombResult& parallel, const LinCombResult& orthogonal,
                           const FfvConfig& cfg) {
    return parallel.value - 2.0 * parallel.sigma >= cfg.tau_s &&
           std::abs(orthogonal.value) + 2.0 * orthogonal.sigma <= cfg.tau_d;
}

FfvVerdict run_ffv_level(size_t n, const FfvConfig& cfg) {
    if (n < 1) {
        throw std::invalid_argument("level needs at least one qubit");
    }
    const auto start = std::chrono::steady_clock::now();
    const size_t dim = 2 * n;
    const size_t budget = std::min(measurement_count(n, cfg.count_rule), dim);
    FfvVerdict verdict;
    verdict.n = n;
    verdict.pass = true;
    for (size_t k = 0; k < cfg.k_instances; k++) {
        Rng sample_rng = fork_rng(cfg.seed, {kFfvStream, n, k, 0});
        FermionInstance inst;
        inst.n = n;
        inst.evolution = sample_haar_so(dim, sample_rng);
        inst.schedule = givens_decompose(inst.evolution);
        inst.init_index = 1 + static_cast<size_t>(uniform_below(sample_rng, dim));
        size_t j_orth = 1 + static_cast<size_t>(uniform_below(sample_rng, dim - 1));
        if (j_orth >= inst.init_index) {
            j_orth++;
        }
        Eigen::VectorXd noisy = readout_damped(
            effective_column(inst.schedule, cfg.noise.p_2q, inst.init_index), cfg.noise.p_m);
        std::vector<size_t> rows = select_top_indices(inst.evolution, inst.init_index - 1, budget);
        FfvInstanceResult res;
        res.i = inst.init_index;
        res.j_orth = j_orth;
        for (size_t a = 0; a < rows.size(); a++) {
            res.measured.push_back(rows[a] + 1);
            Rng shot_rng = fork_rng(cfg.seed, {kFfvStream, n, k, 1, rows[a]});
            ExpectationEstimate est =
                sample_shots(noisy(static_cast<Eigen::Index>(rows[a])), cfg.shots, shot_rng);
            est.op = "m_" + std::to_string(rows[a] + 1);
            res.estimates.push_back(est);
        }
        auto [parallel, orthogonal] = build_lincombs(inst, res.measured, res.estimates, j_orth);
        res.parallel = std::move(parallel);
        res.orthogonal = std::move(orthogonal);
        res.pass = evaluate_ffv_criteria(res.parallel, res.orthogonal, cfg);
        verdict.pass = verdict.pass && res.pass;
        verdict.instances.push_back(std::move(res));
    }
    verdict.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

FfvRunResult run_ffv_search(const FfvConfig& cfg, size_t n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("search needs n_max >= 1");
    }
    FfvRunResult result;
    std::map<size_t, bool> memo;
    auto probe = [&](size_t n) {
        auto it = memo.find(n);
        if (it != memo.end()) {
            return it->second;
        }
        FfvVerdict v = run_ffv_level(n, cfg);
        memo[n] = v.pass;
        result.levels.push_back(std::move(v));
        return memo[n];
    };
    if (cfg.search == SearchMode::Linear) {
        size_t score = 0;
        for (size_t n = 1; n <= n_max; n++) {
            if (!probe(n)) {
                break;
            }
            score = n;
        }
        result.score = score;
        return result;
    }
    size_t lo = 0;
    size_t hi = n_max + 1;
    while (hi - lo > 1) {
        size_t mid = lo + (hi - lo) / 2;
        if (probe(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    size_t candidate = lo;
    for (size_t n = 1; n <= candidate; n++) {
        if (!probe(n)) {
            candidate = n - 1;
            break;
        }
    }
    result.score = candidate;
    return result;
}

}  // namespace qvb
