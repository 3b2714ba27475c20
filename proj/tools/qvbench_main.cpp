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

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qvb/clv.hpp"
#include "qvb/ffv.hpp"
#include "qvb/majorana.hpp"
#include "qvb/report.hpp"

namespace {

using namespace qvb;

std::vector<double> log_grid(double lo, double hi, size_t cells) {
    std::vector<double> out;
    if (cells == 1) {
        out.push_back(lo);
        return out;
    }
    double step = std::log(hi / lo) / static_cast<double>(cells - 1);
    for (size_t i = 0; i < cells; i++) {
        out.push_back(lo * std::exp(step * static_cast<double>(i)));
    }
    return out;
}

struct RunFlags {
    size_t n_max = 20;
    double p2q = 0.0;
    double pm = 0.0;
    // 512 shots matches the hardware protocol, but at that depth the +-2
    // sigma destabilizer window is only ~2.2 shot deviations wide, so even a
    // noiseless run fails levels at random. Simulated runs default higher.
    uint64_t shots = 4096;
    size_t k = 4;
    uint64_t seed = 0;
    std::string search = "linear";
    std::string out;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
    cmd->add_option("--n-max", f.n_max, "Largest level to probe")->check(CLI::PositiveNumber);
    cmd->add_option("--p2q", f.p2q, "Two-qubit depolarizing probability")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--pm", f.pm, "Per-qubit readout flip probability")
        ->check(CLI::Range(0.0, 0.5));
    cmd->add_option("--shots", f.shots, "Shots per expectation")->check(CLI::PositiveNumber);
    cmd->add_option("--k", f.k, "Instances per level")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Master seed")->required();
    cmd->add_option("--search", f.search, "Level search strategy")
        ->check(CLI::IsMember({"linear", "binary"}));
    cmd->add_option("--out", f.out, "Report file path (default: <bench>_report.json)");
}

int cmd_clv_run(const RunFlags& f, const std::string& sigma_avg) {
    ClvConfig cfg;
    cfg.k_cliffords = f.k;
    cfg.shots = f.shots;
    cfg.noise = {f.p2q, f.pm};
    cfg.seed = f.seed;
    cfg.search = f.search == "binary" ? SearchMode::BinaryConfirm : SearchMode::Linear;
    cfg.sigma_avg = sigma_avg == "rms" ? SigmaAverageForm::Rms : SigmaAverageForm::Sem;
    ClvRunResult run = run_clv_search(cfg, f.n_max);
    write_json_file(f.out.empty() ? "clv_report.json" : f.out, clv_report(cfg, run));
    std::cout << "CLV score: " << run.score << "\n";
    return 0;
}

int cmd_ffv_run(const RunFlags& f, const std::string& count_rule) {
    FfvConfig cfg;
    cfg.k_instances = f.k;
    cfg.shots = f.shots;
    cfg.noise = {f.p2q, f.pm};
    cfg.seed = f.seed;
    cfg.search = f.search == "binary" ? SearchMode::BinaryConfirm : SearchMode::Linear;
    cfg.count_rule = count_rule == "appendix" ? CountRule::Appendix : CountRule::MainText;
    FfvRunResult run = run_ffv_search(cfg, f.n_max);
    write_json_file(f.out.empty() ? "ffv_report.json" : f.out, ffv_report(cfg, run));
    std::cout << "FFV score: " << run.score << "\n";
    return 0;
}

struct SweepFlags {
    std::string bench;
    std::string grid_file;
    bool default_grid = false;
    size_t cells = 4;
    size_t n_max = 0;  // 0 = per-benchmark default
    uint64_t shots = 4096;
    uint64_t seed = 0;
    std::string out;
};

int cmd_sweep(const SweepFlags& f) {
    std::vector<double> p2q_values, pm_values;
    if (!f.grid_file.empty()) {
        std::ifstream in(f.grid_file);
        if (!in) {
            std::cerr << "cannot read grid file: " << f.grid_file << "\n";
            return 2;
        }
        nlohmann::json grid = nlohmann::json::parse(in);
        p2q_values = grid.at("p_2q").get<std::vector<double>>();
        pm_values = grid.at("p_m").get<std::vector<double>>();
    } else {
        p2q_values = log_grid(5e-5, 1e-2, f.cells);
        pm_values = log_grid(5e-5, 1e-2, f.cells);
    }
    for (auto* values : {&p2q_values, &pm_values}) {
        for (size_t i = 0; i + 1 < values->size(); i++) {
            if ((*values)[i] >= (*values)[i + 1]) {
                std::cerr << "grid values must be strictly increasing\n";
                return 2;
            }
        }
        if (values->empty()) {
            std::cerr << "grid must be non-empty\n";
            return 2;
        }
    }
    const bool clv = f.bench == "clv";
    const size_t n_max = f.n_max ? f.n_max : (clv ? 48 : 64);
    std::vector<std::vector<size_t>> scores;
    for (double p2q : p2q_values) {
        std::vector<size_t> row;
        for (double pm : pm_values) {
            if (clv) {
                ClvConfig cfg;
                cfg.noise = {p2q, pm};
                cfg.shots = f.shots;
                cfg.seed = f.seed;
                cfg.search = SearchMode::BinaryConfirm;
                row.push_back(run_clv_search(cfg, n_max).score);
            } else {
                FfvConfig cfg;
                cfg.noise = {p2q, pm};
                cfg.shots = f.shots;
                cfg.seed = f.seed;
                cfg.search = SearchMode::BinaryConfirm;
                row.push_back(run_ffv_search(cfg, n_max).score);
            }
        }
        scores.push_back(std::move(row));
    }
    std::string csv = sweep_csv(p2q_values, pm_values, scores);
    if (f.out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(f.out, std::ios::binary);
        out << csv;
    }
    return 0;
}

int cmd_replay(const std::string& table_path) {
    std::ifstream in(table_path);
    if (!in) {
        std::cerr << "cannot read table: " << table_path << "\n";
        return 2;
    }
    nlohmann::json table;
    std::vector<std::vector<ExpectationEstimate>> rounds;
    try {
        table = nlohmann::json::parse(in);
        rounds = parse_replay_table(table);
    } catch (const std::exception& e) {
        std::cerr << "invalid table: " << e.what() << "\n";
        return 2;
    }
    ClvConfig cfg;
    ClvVerdict verdict = replay_verdict(rounds, cfg);
    for (size_t k = 0; k < verdict.cliffords.size(); k++) {
        const ClvCliffordResult& c = verdict.cliffords[k];
        bool worst = true;
        for (bool f : c.stabilizer_flags) worst = worst && f;
        for (bool f : c.destabilizer_flags) worst = worst && f;
        std::cout << "round " << (k + 1) << ": worst-case "
                  << (worst ? "PASS" : "FAIL") << ", average "
                  << (c.stabilizer_average_flag && c.destabilizer_average_flag ? "PASS" : "FAIL")
                  << "\n";
    }
    std::cout << "verdict: " << (verdict.pass ? "PASS" : "FAIL") << "\n";
    return 0;
}

struct ExportFlags {
    std::string family;
    size_t n = 4;
    size_t count = 1;
    uint64_t seed = 0;
    std::string out_dir = ".";
};

int cmd_export(const ExportFlags& f) {
    namespace fs = std::filesystem;
    fs::create_directories(f.out_dir);
    std::string metrics_csv = "instance,n,two_qubit_depth,two_qubit_count,total_depth,total_count\n";
    for (size_t idx = 0; idx < f.count; idx++) {
        Circuit circuit;
        nlohmann::json sidecar;
        sidecar["n"] = f.n;
        sidecar["instance"] = idx;
        if (f.family == "clifford") {
            Rng rng = fork_rng(f.seed, {10, f.n, idx});
            CliffordTableau t = CliffordTableau::random(f.n, rng);
            circuit = t.synthesize();
            std::vector<std::string> stabs, destabs;
            for (size_t i = 1; i <= f.n; i++) {
                stabs.push_back(t.stabilizer(i).str());
                destabs.push_back(t.destabilizer(i).str());
            }
            sidecar["family"] = "clifford";
            sidecar["stabilizers"] = stabs;
            sidecar["destabilizers"] = destabs;
        } else {
            Rng rng = fork_rng(f.seed, {11, f.n, idx});
            Eigen::MatrixXd o = sample_haar_so(2 * f.n, rng);
            GivensProgram prog = givens_decompose(o);
            circuit = lower_givens(prog);
            size_t i = 1 + static_cast<size_t>(uniform_below(rng, 2 * f.n));
            size_t budget = std::min(measurement_count(f.n), 2 * f.n);
            std::vector<size_t> rows = select_top_indices(o, i - 1, budget);
            std::vector<double> column;
            for (size_t r = 0; r < 2 * f.n; r++) {
                column.push_back(o(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i - 1)));
            }
            std::vector<size_t> measured;
            for (size_t r : rows) {
                measured.push_back(r + 1);
            }
            sidecar["family"] = "freefermion";
            sidecar["init_index"] = i;
            sidecar["column"] = column;
            sidecar["measured"] = measured;
        }
        std::string stem = f.family + "_n" + std::to_string(f.n) + "_" + std::to_string(idx);
        std::ofstream qasm(fs::path(f.out_dir) / (stem + ".qasm"), std::ios::binary);
        qasm << circuit.to_qasm();
        write_json_file((fs::path(f.out_dir) / (stem + ".json")).string(), sidecar);
        CircuitMetrics m = circuit.metrics();
        metrics_csv += std::to_string(idx) + "," + std::to_string(f.n) + "," +
                       std::to_string(m.two_qubit_depth) + "," + std::to_string(m.two_qubit_count) +
                       "," + std::to_string(m.total_depth) + "," + std::to_string(m.total_count) +
                       "\n";
    }
    std::ofstream csv(fs::path(f.out_dir) / "metrics.csv", std::ios::binary);
    csv << metrics_csv;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volumetric benchmarks for Clifford and free-fermion circuits"};
    app.require_subcommand(1);

    RunFlags clv_flags, ffv_flags;
    std::string sigma_avg = "sem";
    std::string count_rule = "main";

    CLI::App* clv = app.add_subcommand("clv", "Clifford volume benchmark");
    clv->require_subcommand(1);
    CLI::App* clv_run = clv->add_subcommand("run", "Run the level search");
    add_run_flags(clv_run, clv_flags);
    clv_run->add_option("--sigma-avg", sigma_avg, "Averaged-sigma form")
        ->check(CLI::IsMember({"sem", "rms"}));

    CLI::App* ffv = app.add_subcommand("ffv", "Free-fermion volume benchmark");
    ffv->require_subcommand(1);
    CLI::App* ffv_run = ffv->add_subcommand("run", "Run the level search");
    add_run_flags(ffv_run, ffv_flags);
    ffv_run->add_option("--count-rule", count_rule, "Measurement budget rule")
        ->check(CLI::IsMember({"main", "appendix"}));

    SweepFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "Noise-grid score heatmap (CSV)");
    sweep->add_option("bench", sweep_flags.bench, "Benchmark family")
        ->required()
        ->check(CLI::IsMember({"clv", "ffv"}));
    sweep->add_option("--grid-file", sweep_flags.grid_file, "JSON file with p_2q / p_m arrays");
    sweep->add_flag("--default-grid", sweep_flags.default_grid, "Use the built-in log grid");
    sweep->add_option("--cells", sweep_flags.cells, "Default grid size per axis")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--n-max", sweep_flags.n_max, "Largest level to probe");
    sweep->add_option("--shots", sweep_flags.shots, "Shots per expectation")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_flags.seed, "Master seed")->required();
    sweep->add_option("--out", sweep_flags.out, "CSV output path (default: stdout)");

    std::string table_path;
    CLI::App* replay = app.add_subcommand("replay", "Apply the criteria to external estimates");
    replay->add_option("--table", table_path, "JSON estimates table")->required();

    ExportFlags export_flags;
    CLI::App* circuits = app.add_subcommand("circuits", "Circuit generation");
    CLI::App* exp = circuits->add_subcommand("export", "Export QASM + verification sidecars");
    exp->add_option("family", export_flags.family, "Circuit family")
        ->required()
        ->check(CLI::IsMember({"clifford", "ff"}));
    exp->add_option("--n", export_flags.n, "Qubit count")->check(CLI::PositiveNumber);
    exp->add_option("--count", export_flags.count, "Number of instances")
        ->check(CLI::PositiveNumber);
    exp->add_option("--seed", export_flags.seed, "Master seed");
    exp->add_option("--out-dir", export_flags.out_dir, "Output directory");
    circuits->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (clv_run->parsed()) {
            return cmd_clv_run(clv_flags, sigma_avg);
        }
        if (ffv_run->parsed()) {
            return cmd_ffv_run(ffv_flags, count_rule);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_flags);
        }
        if (replay->parsed()) {
            return cmd_replay(table_path);
        }
        if (exp->parsed()) {
            return cmd_export(export_flags);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
