#pragma once

#include <optional>
#include <string>

#include "oqs/ansatz.hpp"
#include "oqs/metrics.hpp"
#include "oqs/optimizer.hpp"

namespace oqs {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentKind { Single, Compare, DepthSweep, DeltaSweep };

std::string kind_name(ExperimentKind k);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Single;

    // graph ensemble (or a fixed instance file for single/sweeps)
    std::vector<int> graph_n{4};
    double edge_prob = 0.5;
    int n_instances = 1;
    std::string instance_file;

    // ansatz grid
    std::vector<int> n_max_list{10};
    std::vector<double> delta_list{0.45};
    int qaoa_depth = 2;
    std::vector<int> d_list{2};
    bool cd_axis_xy = false;  // default Z-basis control

    OptimizerConfig optimizer;  // seed and init_ranges are filled per job

    int repeats = 1;
    std::uint64_t master_seed = 1;
    int shots = 0;  // 0 = exact distribution
    std::string out_dir = "out";
    int workers = 0;  // 0 = hardware concurrency
    bool zero_params = false;
    std::string timings_file;  // optional, non-deterministic sidecar

    static ExperimentConfig defaults_for(ExperimentKind kind);
    void validate() const;
};

ExperimentConfig config_from_json(const std::string& text, ExperimentKind kind);
std::string config_to_json(const ExperimentConfig& cfg);

// Seed derivation (documented contract): the graph of instance i at size N
// depends only on (master, N, i) so paired arms and all N_max cells share
// instances; the optimizer stream additionally hashes the full cell
// coordinates, the repeat index and the arm.
std::uint64_t instance_seed(std::uint64_t master, int n, int instance_index);
std::uint64_t optimizer_seed(std::uint64_t master, int n, int n_max, double delta, int qaoa_depth,
                             int d, int instance_index, int repeat, int arm);

struct ResultRow {
    int n = 0;
    int n_max = 0;
    double delta = 0.0;
    int qaoa_depth = 0;
    int d = 0;
    std::uint64_t instance_seed = 0;
    int repeat = 0;
    std::string arm;  // "na" or "baseline"
    bool failed = false;
    std::string fail_reason;
    MetricReport metrics;
    int evals = 0;
    double best_objective = 0.0;
    std::vector<double> best_params;
    double wall_ms = 0.0;  // console/sidecar only, never in results.csv
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ResultRow> rows;
    std::vector<GraphInstance> graphs;
};

// Runs the experiment grid and writes results.csv, summary.csv,
// manifest.json (plus improvements.csv for compare and distribution.csv /
// run_record.json for single) under cfg.out_dir.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

}  // namespace oqs
