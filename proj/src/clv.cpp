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

#include "qvb/clv.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "qvb/circuit.hpp"

namespace qvb {

namespace {

constexpr uint64_t kClvStream = 1;

std::vector<size_t> draw_distinct(size_t count, size_t bound, Rng& rng) {
    std::vector<size_t> pool(bound);
    for (size_t i = 0; i < bound; i++) {
        pool[i] = i;
    }
    // Partial Fisher-Yates: first `count` entries are a uniform draw without
    // replacement, in shuffled order.
    for (size_t i = 0; i < count; i++) {
        size_t j = i + static_cast<size_t>(uniform_below(rng, bound - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace

std::pair<std::vector<PauliString>, std::vector<PauliString>> select_observables(
    const CliffordTableau& t, size_t n_m, Rng& rng) {
    const size_t n = t.num_qubits();
    if (n_m > n) {
        throw std::invalid_argument("cannot select more observables than generators");
    }
    std::vector<PauliString> stabs;
    std::vector<PauliString> destabs;
    for (size_t idx : draw_distinct(n_m, n, rng)) {
        stabs.push_back(t.stabilizer(idx + 1));
    }
    for (size_t idx : draw_distinct(n_m, n, rng)) {
        destabs.push_back(t.destabilizer(idx + 1));
    }
    return {std::move(stabs), std::move(destabs)};
}

bool evaluate_worst_case(const ExpectationEstimate& e, const ClvConfig& cfg) {
    const double s = e.sigma();
    if (e.kind == ObservableKind::Stabilizer) {
        return e.mean - 2.0 * s >= cfg.tau_s;
    }
    return std::abs(e.mean) + 2.0 * s <= cfg.tau_d;
}

double sigma_average(const std::vector<ExpectationEstimate>& es, SigmaAverageForm form) {
    if (es.empty()) {
        throw std::invalid_argument("sigma_average needs at least one estimate");
    }
    double sum_sq = 0.0;
    for (const ExpectationEstimate& e : es) {
        double s = e.sigma();
        sum_sq += s * s;
    }
    const double m = static_cast<double>(es.size());
    if (form == SigmaAverageForm::Sem) {
        return std::sqrt(sum_sq) / m;
    }
    return std::sqrt(sum_sq / m);
}

bool evaluate_average(const std::vector<ExpectationEstimate>& es, const ClvConfig& cfg) {
    if (es.empty()) {
        throw std::invalid_argument("evaluate_average needs at least one estimate");
    }
    double mean = 0.0;
    for (const ExpectationEstimate& e : es) {
        mean += e.mean;
    }
    mean /= static_cast<double>(es.size());
    const double margin = 5.0 * sigma_average(es, cfg.sigma_avg);
    if (es.front().kind == ObservableKind::Stabilizer) {
        return mean - margin >= cfg.tau_s;
    }
    return std::abs(mean) + margin <= cfg.tau_d;
}

namespace {

ClvCliffordResult judge_round(std::vector<ExpectationEstimate> stabs,
                              std::vector<ExpectationEstimate> destabs,
                              const ClvConfig& cfg) {
    ClvCliffordResult round;
    round.stabilizers = std::move(stabs);
    round.destabilizers = std::move(destabs);
    round.pass = true;
    for (const ExpectationEstimate& e : round.stabilizers) {
        bool ok = evaluate_worst_case(e, cfg);
        round.stabilizer_flags.push_back(ok);
        round.pass = round.pass && ok;
    }
    for (const ExpectationEstimate& e : round.destabilizers) {
        bool ok = evaluate_worst_case(e, cfg);
        round.destabilizer_flags.push_back(ok);
        round.pass = round.pass && ok;
    }
    round.stabilizer_average_flag =
        round.stabilizers.empty() || evaluate_average(round.stabilizers, cfg);
    round.destabilizer_average_flag =
        round.destabilizers.empty() || evaluate_average(round.destabilizers, cfg);
    round.pass = round.pass && round.stabilizer_average_flag && round.destabilizer_average_flag;
    return round;
}

}  // namespace

ClvVerdict run_clv_level(size_t n, const ClvConfig& cfg) {
    if (n < 1) {
        throw std::invalid_argument("level needs at least one qubit");
    }
    const auto start = std::chrono::steady_clock::now();
    const size_t n_m = std::min(cfg.n_meas, n);
    ClvVerdict verdict;
    verdict.n = n;
    verdict.pass = true;
    for (size_t k = 0; k < cfg.k_cliffords; k++) {
        Rng sample_rng = fork_rng(cfg.seed, {kClvStream, n, k, 0});
        CliffordTableau tableau = CliffordTableau::random(n, sample_rng);
        Circuit circuit = tableau.synthesize();
        Rng select_rng = fork_rng(cfg.seed, {kClvStream, n, k, 1});
        auto [stab_ops, destab_ops] = select_observables(tableau, n_m, select_rng);
        std::vector<ExpectationEstimate> stabs;
        std::vector<ExpectationEstimate> destabs;
        for (size_t i = 0; i < n_m; i++) {
            Rng shot_rng = fork_rng(cfg.seed, {kClvStream, n, k, 2, i});
            stabs.push_back(estimate_expectation(circuit, tableau, stab_ops[i],
                                                 ObservableKind::Stabilizer, cfg.noise,
                                                 cfg.shots, shot_rng));
        }
        for (size_t i = 0; i < n_m; i++) {
            Rng shot_rng = fork_rng(cfg.seed, {kClvStream, n, k, 3, i});
            destabs.push_back(estimate_expectation(circuit, tableau, destab_ops[i],
                                                   ObservableKind::Destabilizer, cfg.noise,
                                                   cfg.shots, shot_rng));
        }
        verdict.cliffords.push_back(judge_round(std::move(stabs), std::move(destabs), cfg));
        verdict.pass = verdict.pass && verdict.cliffords.back().pass;
    }
    verdict.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return verdict;
}

ClvRunResult run_clv_search(const ClvConfig& cfg, size_t n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("search needs n_max >= 1");
    }
    ClvRunResult result;
    std::map<size_t, bool> memo;
    auto probe = [&](size_t n) {
        auto it = memo.find(n);
        if (it != memo.end()) {
            return it->second;
        }
        ClvVerdict v = run_clv_level(n, cfg);
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
    // Bisect assuming a monotone pass boundary, then confirm every level
    // below the candidate; the score must be valid for all n <= score.
    size_t lo = 0;       // largest n known to pass (0 = none probed)
    size_t hi = n_max + 1;  // smallest n known to fail, or n_max + 1
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

ClvVerdict replay_verdict(const std::vector<std::vector<ExpectationEstimate>>& rounds,
                          const ClvConfig& cfg) {
    if (rounds.empty()) {
        throw std::invalid_argument("replay needs at least one round");
    }
    ClvVerdict verdict;
    verdict.pass = true;
    for (const auto& round : rounds) {
        std::vector<ExpectationEstimate> stabs;
        std::vector<ExpectationEstimate> destabs;
        for (const ExpectationEstimate& e : round) {
            if (e.shots == 0 || std::abs(e.mean) > 1.0) {
                throw std::invalid_argument("malformed replay row");
            }
            (e.kind == ObservableKind::Stabilizer ? stabs : destabs).push_back(e);
        }
        verdict.cliffords.push_back(judge_round(std::move(stabs), std::move(destabs), cfg));
        verdict.pass = verdict.pass && verdict.cliffords.back().pass;
    }
    return verdict;
}

}  // namespace qvb
