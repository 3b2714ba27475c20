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

#include "qvb/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qvb {

namespace {

nlohmann::json estimate_json(const ExpectationEstimate& e) {
    return {
        {"operator", e.op},
        {"kind", e.kind == ObservableKind::Stabilizer ? "stabilizer" : "destabilizer"},
        {"mean", e.mean},
        {"shots", e.shots},
        {"sigma", e.sigma()},
    };
}

nlohmann::json clifford_json(const ClvCliffordResult& c) {
    nlohmann::json j;
    j["stabilizers"] = nlohmann::json::array();
    for (size_t i = 0; i < c.stabilizers.size(); i++) {
        nlohmann::json e = estimate_json(c.stabilizers[i]);
        e["worst_case_pass"] = static_cast<bool>(c.stabilizer_flags[i]);
        j["stabilizers"].push_back(std::move(e));
    }
    j["destabilizers"] = nlohmann::json::array();
    for (size_t i = 0; i < c.destabilizers.size(); i++) {
        nlohmann::json e = estimate_json(c.destabilizers[i]);
        e["worst_case_pass"] = static_cast<bool>(c.destabilizer_flags[i]);
        j["destabilizers"].push_back(std::move(e));
    }
    j["stabilizer_average_pass"] = c.stabilizer_average_flag;
    j["destabilizer_average_pass"] = c.destabilizer_average_flag;
    j["pass"] = c.pass;
    return j;
}

nlohmann::json lincomb_json(const LinCombResult& l) {
    return {
        {"kind", l.parallel ? "parallel" : "orthogonal"},
        {"value", l.value},
        {"sigma", l.sigma},
        {"i", l.i},
        {"j", l.j},
    };
}

}  // namespace

nlohmann::json to_json(const ClvVerdict& v) {
    nlohmann::json j;
    j["n"] = v.n;
    j["cliffords"] = nlohmann::json::array();
    for (const ClvCliffordResult& c : v.cliffords) {
        j["cliffords"].push_back(clifford_json(c));
    }
    j["pass"] = v.pass;
    j["wall_seconds"] = v.wall_seconds;
    return j;
}

nlohmann::json to_json(const FfvVerdict& v) {
    nlohmann::json j;
    j["n"] = v.n;
    j["instances"] = nlohmann::json::array();
    for (const FfvInstanceResult& inst : v.instances) {
        nlohmann::json ij;
        ij["i"] = inst.i;
        ij["j_orth"] = inst.j_orth;
        ij["measured"] = inst.measured;
        ij["estimates"] = nlohmann::json::array();
        for (const ExpectationEstimate& e : inst.estimates) {
            ij["estimates"].push_back(estimate_json(e));
        }
        ij["parallel"] = lincomb_json(inst.parallel);
        ij["orthogonal"] = lincomb_json(inst.orthogonal);
        ij["pass"] = inst.pass;
        j["instances"].push_back(std::move(ij));
    }
    j["pass"] = v.pass;
    j["wall_seconds"] = v.wall_seconds;
    return j;
}

nlohmann::json clv_report(const ClvConfig& cfg, const ClvRunResult& run) {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["benchmark"] = "clv";
    j["config"] = {
        {"k_cliffords", cfg.k_cliffords},
        {"n_meas", cfg.n_meas},
        {"shots", cfg.shots},
        {"tau_s", cfg.tau_s},
        {"tau_d", cfg.tau_d},
        {"p_2q", cfg.noise.p_2q},
        {"p_m", cfg.noise.p_m},
        {"search", cfg.search == SearchMode::Linear ? "linear" : "binary-confirm"},
        {"sigma_avg", cfg.sigma_avg == SigmaAverageForm::Sem ? "sem" : "rms"},
    };
    j["seed"] = cfg.seed;
    j["levels"] = nlohmann::json::array();
    for (const ClvVerdict& v : run.levels) {
        j["levels"].push_back(to_json(v));
    }
    j["score"] = run.score;
    return j;
}

nlohmann::json ffv_report(const FfvConfig& cfg, const FfvRunResult& run) {
    nlohmann::json j;
    j["version"] = kToolVersion;
    j["benchmark"] = "ffv";
    j["config"] = {
        {"k_instances", cfg.k_instances},
        {"shots", cfg.shots},
        {"tau_s", cfg.tau_s},
        {"tau_d", cfg.tau_d},
        {"p_2q", cfg.noise.p_2q},
        {"p_m", cfg.noise.p_m},
        {"search", cfg.search == SearchMode::Linear ? "linear" : "binary-confirm"},
        {"count_rule", cfg.count_rule == CountRule::MainText ? "main" : "appendix"},
    };
    j["seed"] = cfg.seed;
    j["levels"] = nlohmann::json::array();
    for (const FfvVerdict& v : run.levels) {
        j["levels"].push_back(to_json(v));
    }
    j["score"] = run.score;
    return j;
}

std::string render_json(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    out << render_json(j);
}

std::string sweep_csv(const std::vector<double>& p_2q_values,
                      const std::vector<double>& p_m_values,
                      const std::vector<std::vector<size_t>>& scores) {
    if (scores.size() != p_2q_values.size()) {
        throw std::invalid_argument("score rows must match the p_2q grid");
    }
    std::ostringstream out;
    out << "p_2q\\p_m";
    for (double pm : p_m_values) {
        out << "," << pm;
    }
    out << "\n";
    for (size_t r = 0; r < scores.size(); r++) {
        if (scores[r].size() != p_m_values.size()) {
            throw std::invalid_argument("score columns must match the p_m grid");
        }
        out << p_2q_values[r];
        for (size_t c = 0; c < scores[r].size(); c++) {
            out << "," << scores[r][c];
        }
        out << "\n";
    }
    return out.str();
}

std::vector<std::vector<ExpectationEstimate>> parse_replay_table(const nlohmann::json& table) {
    if (!table.is_object() || !table.contains("rounds") || !table["rounds"].is_array() ||
        table["rounds"].empty()) {
        throw std::invalid_argument("replay table must contain a non-empty 'rounds' array");
    }
    std::vector<std::vector<ExpectationEstimate>> rounds;
    for (const nlohmann::json& round : table["rounds"]) {
        if (!round.is_array() || round.empty()) {
            throw std::invalid_argument("each replay round must be a non-empty array");
        }
        std::vector<ExpectationEstimate> group;
        for (const nlohmann::json& row : round) {
            ExpectationEstimate e;
            std::string kind = row.at("kind").get<std::string>();
            if (kind == "stabilizer") {
                e.kind = ObservableKind::Stabilizer;
            } else if (kind == "destabilizer") {
                e.kind = ObservableKind::Destabilizer;
            } else {
                throw std::invalid_argument("unknown observable kind: " + kind);
            }
            e.mean = row.at("mean").get<double>();
            e.shots = row.at("shots").get<uint64_t>();
            if (row.contains("operator")) {
                e.op = row["operator"].get<std::string>();
            }
            if (e.shots == 0 || std::abs(e.mean) > 1.0) {
                throw std::invalid_argument("malformed replay row");
            }
            group.push_back(std::move(e));
        }
        rounds.push_back(std::move(group));
    }
    return rounds;
}

}  // namespace qvb
