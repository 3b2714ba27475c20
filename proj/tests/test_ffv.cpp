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
#include <numeric>

#include "qvb/ffv.hpp"
#include "qvb/report.hpp"
#include "support/report_compare.hpp"

using namespace qvb;
namespace tst = qvb::testing;

namespace {

FermionInstance make_instance(size_t n, size_t init_index, Rng& rng) {
    FermionInstance inst;
    inst.n = n;
    inst.evolution = sample_haar_so(2 * n, rng);
    inst.init_index = init_index;
    inst.schedule = givens_decompose(inst.evolution);
    return inst;
}

// Ideal estimates over the full index set: means equal the exact column,
// enormous shot count so the sigma terms vanish.
std::vector<ExpectationEstimate> exact_estimates(const FermionInstance& inst) {
    Eigen::VectorXd col = inst.ideal_expectations();
    std::vector<ExpectationEstimate> es(static_cast<size_t>(col.size()));
    for (size_t k = 0; k < es.size(); k++) {
        es[k].mean = col(static_cast<Eigen::Index>(k));
        es[k].shots = uint64_t{1} << 62;
    }
    return es;
}

}  // namespace

TEST_CASE("measurement budget rule") {
    for (size_t n = 1; n <= 10; n++) {
        CHECK(measurement_count(n) == 2 * n);
    }
    CHECK(measurement_count(11) == 22);      // 20 + floor(11/5)
    CHECK(measurement_count(50) == 30);
    CHECK(measurement_count(100) == 40);
    CHECK(measurement_count(100, CountRule::Appendix) == 25);  // 20 + floor(100/20)
    CHECK(measurement_count(11, CountRule::Appendix) == 20);
}

TEST_CASE("full-set linear combinations hit 1 and 0 exactly without noise") {
    Rng rng(41);
    for (size_t n : {2, 4, 7}) {
        FermionInstance inst = make_instance(n, 1 + uniform_below(rng, 2 * n), rng);
        std::vector<size_t> all(2 * n);
        std::iota(all.begin(), all.end(), size_t{1});
        size_t j_orth = inst.init_index == 1 ? 2 : 1;
        auto [par, orth] = build_lincombs(inst, all, exact_estimates(inst), j_orth);
        // Unit column: the renormalized parallel overlap is exactly 1, and
        // orthogonality of distinct columns drives the cross term to 0.
        CHECK(std::abs(par.value - 1.0) <= 1e-10);
        CHECK(std::abs(orth.value) <= 1e-10);
        CHECK(par.sigma <= 1e-9);
        CHECK(orth.sigma <= 1e-9);
        CHECK(par.i == inst.init_index);
        CHECK(orth.j == j_orth);
    }
}

TEST_CASE("criteria evaluation uses two-sigma margins against both thresholds") {
    FfvConfig cfg;
    LinCombResult par, orth;
    par.value = 0.5;
    par.sigma = 0.05;  // 0.5 - 0.1 >= 1/e
    orth.value = 0.05;
    orth.sigma = 0.05;  // 0.05 + 0.1 <= 1/(2e)
    CHECK(evaluate_ffv_criteria(par, orth, cfg));
    par.value = 0.40;  // 0.40 - 0.1 < 1/e
    CHECK_FALSE(evaluate_ffv_criteria(par, orth, cfg));
    par.value = 0.5;
    orth.value = 0.1;  // 0.1 + 0.1 > 1/(2e)
    CHECK_FALSE(evaluate_ffv_criteria(par, orth, cfg));
}

TEST_CASE("noiseless levels pass comfortably") {
    FfvConfig cfg;
    cfg.seed = 11;
    cfg.shots = 4096;
    FfvVerdict v = run_ffv_level(8, cfg);
    CHECK(v.pass);
    REQUIRE(v.instances.size() == cfg.k_instances);
    for (const FfvInstanceResult& r : v.instances) {
        CHECK(r.measured.size() == measurement_count(8));
        CHECK(r.estimates.size() == r.measured.size());
        CHECK(r.pass);
    }
}

TEST_CASE("search modes agree and scores are deterministic") {
    FfvConfig cfg;
    cfg.seed = 19;
    cfg.noise = NoiseParams{3e-3, 8e-3};
    cfg.search = SearchMode::Linear;
    FfvRunResult linear = run_ffv_search(cfg, 30);
    cfg.search = SearchMode::BinaryConfirm;
    FfvRunResult binary = run_ffv_search(cfg, 30);
    CHECK(linear.score == binary.score);

    cfg.search = SearchMode::Linear;
    FfvRunResult again = run_ffv_search(cfg, 30);
    CHECK(render_json(tst::strip_wall_clock(ffv_report(cfg, again))) ==
          render_json(tst::strip_wall_clock(ffv_report(cfg, linear))));
}

TEST_CASE("heavier noise never helps") {
    FfvConfig mild;
    mild.seed = 23;
    mild.noise = NoiseParams{1e-4, 1e-3};
    FfvConfig harsh = mild;
    harsh.noise = NoiseParams{5e-3, 2e-2};
    size_t mild_score = run_ffv_search(mild, 40).score;
    size_t harsh_score = run_ffv_search(harsh, 40).score;
    CHECK(mild_score + 1 >= harsh_score);  // allow one cell of seed jitter
    CHECK(mild_score > harsh_score);
}
