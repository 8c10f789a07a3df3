#include "oqs/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include <json.hpp>

namespace oqs {

using nlohmann::ordered_json;

std::string kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::Single: return "single";
        case ExperimentKind::Compare: return "compare";
        case ExperimentKind::DepthSweep: return "depth-sweep";
        case ExperimentKind::DeltaSweep: return "delta-sweep";
    }
    return "?";
}

ExperimentConfig ExperimentConfig::defaults_for(ExperimentKind kind) {
    ExperimentConfig c;
    c.kind = kind;
    switch (kind) {
        case ExperimentKind::Single:
            break;
        case ExperimentKind::Compare:
            c.graph_n = {4, 5};
            c.n_instances = 20;
            c.n_max_list = {6, 8, 10, 12};
            c.d_list = {2};
            break;
        case ExperimentKind::DepthSweep:
            c.n_max_list = {6, 8, 10, 12};
            c.d_list = {0, 1, 2, 3, 4};
            c.repeats = 10;
            break;
        case ExperimentKind::DeltaSweep:
            c.n_max_list = {10};
            c.delta_list = {0.25, 0.35, 0.45, 0.55, 0.65};
            c.d_list = {0, 1, 2, 3, 4};
            c.repeats = 10;
            break;
    }
    return c;
}

void ExperimentConfig::validate() const {
    if (graph_n.empty() || n_max_list.empty() || delta_list.empty() || d_list.empty())
        throw ContractError("ExperimentConfig: list fields must be non-empty");
    if (repeats < 1 || n_instances < 1)
        throw ContractError("ExperimentConfig: repeats and n_instances must be >= 1");
    if (edge_prob < 0.0 || edge_prob > 1.0)
        throw ContractError("ExperimentConfig: edge_prob must be in [0, 1]");
    if (shots < 0) throw ContractError("ExperimentConfig: shots must be >= 0");
    if (qaoa_depth < 1) throw ContractError("ExperimentConfig: qaoa_depth must be >= 1");
    for (int d : d_list)
        if (d < 0) throw ContractError("ExperimentConfig: mixer depth must be >= 0");
    if (kind == ExperimentKind::Single &&
        (graph_n.size() != 1 || n_max_list.size() != 1 || delta_list.size() != 1 ||
         d_list.size() != 1 || n_instances != 1 || repeats != 1))
        throw ContractError("ExperimentConfig: single runs take exactly one setting");
    OptimizerConfig oc = optimizer;
    oc.validate();
}

ExperimentConfig config_from_json(const std::string& text, ExperimentKind kind) {
    const auto j = nlohmann::json::parse(text);
    ExperimentConfig c = ExperimentConfig::defaults_for(kind);
    if (j.contains("kind") && j.at("kind").get<std::string>() != kind_name(kind))
        throw ContractError("config file kind '" + j.at("kind").get<std::string>() +
                            "' does not match subcommand '" + kind_name(kind) + "'");
    if (j.contains("graph")) {
        const auto& g = j.at("graph");
        if (g.contains("n")) c.graph_n = g.at("n").get<std::vector<int>>();
        c.edge_prob = g.value("edge_prob", c.edge_prob);
        c.n_instances = g.value("n_instances", c.n_instances);
        c.instance_file = g.value("instance_file", c.instance_file);
    }
    if (j.contains("ansatz")) {
        const auto& a = j.at("ansatz");
        if (a.contains("n_max")) c.n_max_list = a.at("n_max").get<std::vector<int>>();
        if (a.contains("delta")) c.delta_list = a.at("delta").get<std::vector<double>>();
        c.qaoa_depth = a.value("qaoa_depth", c.qaoa_depth);
        if (a.contains("mixer_depth")) c.d_list = a.at("mixer_depth").get<std::vector<int>>();
        if (a.contains("cd_axis")) {
            const std::string ax = a.at("cd_axis").get<std::string>();
            if (ax != "z" && ax != "xy") throw ContractError("config: cd_axis must be z or xy");
            c.cd_axis_xy = (ax == "xy");
        }
    }
    if (j.contains("optimizer")) {
        const auto& o = j.at("optimizer");
        c.optimizer.n_starts = o.value("n_starts", c.optimizer.n_starts);
        c.optimizer.initial_step = o.value("initial_step", c.optimizer.initial_step);
        c.optimizer.final_step = o.value("final_step", c.optimizer.final_step);
        c.optimizer.max_evals = o.value("max_evals", c.optimizer.max_evals);
    }
    c.repeats = j.value("repeats", c.repeats);
    c.master_seed = j.value("seed", c.master_seed);
    c.shots = j.value("shots", c.shots);
    c.out_dir = j.value("out_dir", c.out_dir);
    c.workers = j.value("workers", c.workers);
    c.zero_params = j.value("zero_params", c.zero_params);
    return c;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    ordered_json j;
    j["kind"] = kind_name(cfg.kind);
    j["graph"] = {{"n", cfg.graph_n},
                  {"edge_prob", cfg.edge_prob},
                  {"n_instances", cfg.n_instances},
                  {"instance_file", cfg.instance_file}};
    j["ansatz"] = {{"n_max", cfg.n_max_list},
                   {"delta", cfg.delta_list},
                   {"qaoa_depth", cfg.qaoa_depth},
                   {"mixer_depth", cfg.d_list},
                   {"cd_axis", cfg.cd_axis_xy ? "xy" : "z"}};
    j["optimizer"] = {{"n_starts", cfg.optimizer.n_starts},
                      {"initial_step", cfg.optimizer.initial_step},
                      {"final_step", cfg.optimizer.final_step},
                      {"max_evals", cfg.optimizer.max_evals}};
    j["repeats"] = cfg.repeats;
    j["seed"] = cfg.master_seed;
    j["shots"] = cfg.shots;
    j["out_dir"] = cfg.out_dir;
    j["workers"] = cfg.workers;
    j["zero_params"] = cfg.zero_params;
    return j.dump(2);
}

std::uint64_t instance_seed(std::uint64_t master, int n, int instance_index) {
    return derive_seed({master, 0x696e7374ULL, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(instance_index)});
}

std::uint64_t optimizer_seed(std::uint64_t master, int n, int n_max, double delta, int qaoa_depth,
                             int d, int instance_index, int repeat, int arm) {
    return derive_seed({master, 0x6f7074ULL, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(n_max), std::bit_cast<std::uint64_t>(delta),
                        static_cast<std::uint64_t>(qaoa_depth), static_cast<std::uint64_t>(d),
                        static_cast<std::uint64_t>(instance_index),
                        static_cast<std::uint64_t>(repeat), static_cast<std::uint64_t>(arm)});
}

namespace {

struct Job {
    int n, n_max;
    double delta;
    int d_target;  // d of the sweep cell; the na arm's circuit depth
    int instance_index, repeat, arm;  // arm: 0 baseline, 1 na
    int graph_index;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

std::string bitstring_of(std::uint32_t z, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (bit_of(z, i, n)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double stddev_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - mu) * (x - mu);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

ResultRow run_job(const ExperimentConfig& cfg, const Job& job, const GraphInstance& graph,
                  RunRecord* record_out) {
    const auto t0 = std::chrono::steady_clock::now();
    ResultRow row;
    row.n = job.n;
    row.n_max = job.n_max;
    row.delta = job.delta;
    row.qaoa_depth = cfg.qaoa_depth;
    row.d = job.arm == 0 && cfg.kind == ExperimentKind::Compare ? 0 : job.d_target;
    row.instance_seed = graph.seed;
    row.repeat = job.repeat;
    row.arm = (cfg.kind == ExperimentKind::Compare && job.arm == 0) ? "baseline" : "na";

    AnsatzConfig acfg;
    acfg.n_pairs = job.n;
    acfg.n_max = job.n_max;
    acfg.delta = job.delta;
    acfg.qaoa_depth = cfg.qaoa_depth;
    acfg.mixer_depth = row.d;
    acfg.cd_axis = cfg.cd_axis_xy ? CdAxisMode::xy_plane(0.0) : CdAxisMode::z_control();

    const std::uint64_t opt_seed =
        optimizer_seed(cfg.master_seed, job.n, job.n_max, job.delta, cfg.qaoa_depth, row.d,
                       job.instance_index, job.repeat, job.arm);
    try {
        const ParamLayout layout = ParamLayout::of(acfg);
        const Objective objective = [&](const Eigen::VectorXd& x) {
            const HybridState st =
                evolve(acfg, graph, std::span<const double>(x.data(), x.size()));
            return -expected_cut(output_distribution(st), graph);
        };

        Eigen::VectorXd best;
        if (cfg.zero_params) {
            best = Eigen::VectorXd::Zero(layout.size());
            row.best_objective = objective(best);
            row.evals = 0;
        } else {
            OptimizerConfig oc = cfg.optimizer;
            oc.seed = opt_seed;
            oc.init_ranges = layout.init_ranges();
            RunRecord rec = multistart(objective, oc);
            best = rec.best_params;
            row.best_objective = rec.best_objective;
            for (const StartTrace& t : rec.starts) row.evals += t.evals;
            if (record_out) *record_out = std::move(rec);
        }
        row.best_params.assign(best.data(), best.data() + best.size());

        std::vector<double> dist = output_distribution(
            evolve(acfg, graph, std::span<const double>(best.data(), best.size())));
        if (cfg.shots > 0)
            dist = empirical_distribution(dist, cfg.shots,
                                          derive_seed({opt_seed, 0x73686f7473ULL}));
        row.metrics = compute_metrics(dist, graph);
    } catch (const CutoffError& e) {
        row.failed = true;
        row.fail_reason = e.what();
    }
    row.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

std::string results_csv(const std::vector<ResultRow>& rows) {
    std::string s = "N,n_max,delta,P,d,instance_seed,repeat,arm,expected_cut,approx_ratio,"
                    "p_opt,c_max,evals\n";
    for (const ResultRow& r : rows) {
        s += std::to_string(r.n) + ',' + std::to_string(r.n_max) + ',' + fmt(r.delta) + ',' +
             std::to_string(r.qaoa_depth) + ',' + std::to_string(r.d) + ',' +
             std::to_string(r.instance_seed) + ',' + std::to_string(r.repeat) + ',' + r.arm + ',';
        if (r.failed) {
            s += ",,,,";
        } else {
            s += fmt(r.metrics.expected_cut) + ',' + fmt_opt(r.metrics.approx_ratio) + ',' +
                 fmt(r.metrics.p_opt) + ',' + std::to_string(r.metrics.c_max) + ',' +
                 std::to_string(r.evals);
        }
        s += '\n';
    }
    return s;
}

struct CellKey {
    int n, n_max, d;
    double delta;
    bool operator<(const CellKey& o) const {
        return std::tie(n, n_max, d, delta) < std::tie(o.n, o.n_max, o.d, o.delta);
    }
};

std::string improvements_csv(const std::vector<ResultRow>& rows,
                             std::map<CellKey, std::pair<std::vector<double>,
                                                         std::vector<double>>>& per_cell) {
    std::string s = "N,n_max,delta,P,d,instance_seed,repeat,ratio_improvement,"
                    "p_opt_improvement\n";
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        const ResultRow& base = rows[i];
        const ResultRow& na = rows[i + 1];
        s += std::to_string(na.n) + ',' + std::to_string(na.n_max) + ',' + fmt(na.delta) + ',' +
             std::to_string(na.qaoa_depth) + ',' + std::to_string(na.d) + ',' +
             std::to_string(na.instance_seed) + ',' + std::to_string(na.repeat) + ',';
        const bool ok = !base.failed && !na.failed && base.metrics.approx_ratio &&
                        na.metrics.approx_ratio;
        if (ok) {
            const double dr = *na.metrics.approx_ratio - *base.metrics.approx_ratio;
            const double dp = na.metrics.p_opt - base.metrics.p_opt;
            s += fmt(dr) + ',' + fmt(dp);
            auto& cell = per_cell[{na.n, na.n_max, na.d, na.delta}];
            cell.first.push_back(dr);
            cell.second.push_back(dp);
        } else {
            s += ",";
        }
        s += '\n';
    }
    return s;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    std::filesystem::create_directories(cfg.out_dir);

    ExperimentResult result;
    result.config = cfg;

    // graphs: one per (n, instance); shared across every cell of the grid
    std::map<std::pair<int, int>, int> graph_index;
    if (!cfg.instance_file.empty()) {
        if (cfg.kind == ExperimentKind::Compare)
            throw ContractError("compare runs use a seeded ensemble, not an instance file");
        std::ifstream in(cfg.instance_file);
        if (!in) throw std::runtime_error("cannot open instance file " + cfg.instance_file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        GraphInstance g = graph_from_json(text);
        result.graphs.push_back(std::move(g));
        for (int n : cfg.graph_n)
            for (int i = 0; i < cfg.n_instances; ++i) graph_index[{n, i}] = 0;
        if (result.graphs[0].n_vertices != cfg.graph_n.at(0))
            throw ContractError("instance file vertex count does not match configured N");
    } else {
        for (int n : cfg.graph_n)
            for (int i = 0; i < cfg.n_instances; ++i) {
                graph_index[{n, i}] = static_cast<int>(result.graphs.size());
                result.graphs.push_back(
                    generate_er(n, cfg.edge_prob, instance_seed(cfg.master_seed, n, i)));
            }
    }

    // fixed job order; compare emits (baseline, na) adjacently
    std::vector<Job> jobs;
    const bool compare = cfg.kind == ExperimentKind::Compare;
    for (int n : cfg.graph_n)
        for (int inst = 0; inst < cfg.n_instances; ++inst)
            for (int n_max : cfg.n_max_list)
                for (double delta : cfg.delta_list)
                    for (int d : cfg.d_list)
                        for (int rep = 0; rep < cfg.repeats; ++rep) {
                            if (compare)
                                jobs.push_back(
                                    {n, n_max, delta, d, inst, rep, 0, graph_index[{n, inst}]});
                            jobs.push_back(
                                {n, n_max, delta, d, inst, rep, 1, graph_index[{n, inst}]});
                        }

    result.rows.resize(jobs.size());
    RunRecord single_record;
    const bool want_record = cfg.kind == ExperimentKind::Single && !cfg.zero_params;

    int workers = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
    workers = std::min<int>(workers, static_cast<int>(jobs.size()));
    if (workers > 1) {
#pragma omp parallel for num_threads(workers) schedule(dynamic)
        for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(jobs.size()); ++j)
            result.rows[static_cast<std::size_t>(j)] =
                run_job(cfg, jobs[static_cast<std::size_t>(j)],
                        result.graphs[static_cast<std::size_t>(
                            jobs[static_cast<std::size_t>(j)].graph_index)],
                        nullptr);
    } else {
        // single runs always land here (one job)
        for (std::size_t j = 0; j < jobs.size(); ++j)
            result.rows[j] = run_job(cfg, jobs[j],
                                     result.graphs[static_cast<std::size_t>(jobs[j].graph_index)],
                                     want_record && j == 0 ? &single_record : nullptr);
    }

    const std::filesystem::path out(cfg.out_dir);
    write_text(out / "results.csv", results_csv(result.rows));

    std::map<CellKey, std::pair<std::vector<double>, std::vector<double>>> imp_cells;
    if (compare) write_text(out / "improvements.csv", improvements_csv(result.rows, imp_cells));

    // summary
    std::string summary;
    if (compare) {
        summary = "N,n_max,delta,P,d,valid,mean_ratio_improvement,median_ratio_improvement,"
                  "mean_p_opt_improvement,median_p_opt_improvement\n";
        for (const auto& [key, cell] : imp_cells)
            summary += std::to_string(key.n) + ',' + std::to_string(key.n_max) + ',' +
                       fmt(key.delta) + ',' + std::to_string(cfg.qaoa_depth) + ',' +
                       std::to_string(key.d) + ',' + std::to_string(cell.first.size()) + ',' +
                       fmt(mean_of(cell.first)) + ',' + fmt(median_of(cell.first)) + ',' +
                       fmt(mean_of(cell.second)) + ',' + fmt(median_of(cell.second)) + '\n';
    } else {
        std::map<CellKey, std::vector<const ResultRow*>> cells;
        for (const ResultRow& r : result.rows)
            if (!r.failed) cells[{r.n, r.n_max, r.d, r.delta}].push_back(&r);
        summary = "N,n_max,delta,P,d,runs,mean_expected_cut,mean_approx_ratio,"
                  "std_approx_ratio,mean_p_opt,std_p_opt\n";
        for (const auto& [key, cell] : cells) {
            std::vector<double> ec, ar, po;
            for (const ResultRow* r : cell) {
                ec.push_back(r->metrics.expected_cut);
                if (r->metrics.approx_ratio) ar.push_back(*r->metrics.approx_ratio);
                po.push_back(r->metrics.p_opt);
            }
            summary += std::to_string(key.n) + ',' + std::to_string(key.n_max) + ',' +
                       fmt(key.delta) + ',' + std::to_string(cfg.qaoa_depth) + ',' +
                       std::to_string(key.d) + ',' + std::to_string(cell.size()) + ',' +
                       fmt(mean_of(ec)) + ',' + (ar.empty() ? "" : fmt(mean_of(ar))) + ',' +
                       (ar.empty() ? "" : fmt(stddev_of(ar))) + ',' + fmt(mean_of(po)) + ',' +
                       fmt(stddev_of(po)) + '\n';
        }
    }
    write_text(out / "summary.csv", summary);

    // manifest
    ordered_json manifest;
    manifest["version"] = kVersion;
    manifest["kind"] = kind_name(cfg.kind);
    manifest["config"] = nlohmann::ordered_json::parse(config_to_json(cfg));
    manifest["rng"] = "mt19937_64 with 53-bit uniform mapping; seeds derived by a splitmix64 "
                      "chain over (master, tag, coordinate) words";
    manifest["seed_derivation"] = {
        {"instance", "derive(master, 'inst', N, instance_index)"},
        {"optimizer",
         "derive(master, 'opt', N, n_max, delta_bits, P, d, instance_index, repeat, arm)"}};
    manifest["graphs"] = ordered_json::array();
    for (const GraphInstance& g : result.graphs)
        manifest["graphs"].push_back(ordered_json::parse(graph_to_json(g)));
    manifest["runs"] = ordered_json::array();
    for (const ResultRow& r : result.rows) {
        ordered_json run{{"N", r.n},
                         {"n_max", r.n_max},
                         {"delta", r.delta},
                         {"P", r.qaoa_depth},
                         {"d", r.d},
                         {"instance_seed", r.instance_seed},
                         {"repeat", r.repeat},
                         {"arm", r.arm},
                         {"failed", r.failed}};
        if (r.failed) {
            run["fail_reason"] = r.fail_reason;
        } else {
            run["best_objective"] = r.best_objective;
            run["evals"] = r.evals;
            run["best_params"] = r.best_params;
        }
        manifest["runs"].push_back(std::move(run));
    }
    write_text(out / "manifest.json", manifest.dump(2) + "\n");

    if (cfg.kind == ExperimentKind::Single && !result.rows.empty() && !result.rows[0].failed) {
        const ResultRow& r = result.rows[0];
        const GraphInstance& g = result.graphs[0];
        AnsatzConfig acfg;
        acfg.n_pairs = r.n;
        acfg.n_max = r.n_max;
        acfg.delta = r.delta;
        acfg.qaoa_depth = r.qaoa_depth;
        acfg.mixer_depth = r.d;
        acfg.cd_axis = cfg.cd_axis_xy ? CdAxisMode::xy_plane(0.0) : CdAxisMode::z_control();
        const std::vector<double> dist = output_distribution(
            evolve(acfg, g, std::span<const double>(r.best_params.data(), r.best_params.size())));
        const std::vector<int> cuts = cut_table(g);
        std::string dcsv = "z,bitstring,probability,cut_value\n";
        for (std::size_t z = 0; z < dist.size(); ++z)
            dcsv += std::to_string(z) + ',' + bitstring_of(static_cast<std::uint32_t>(z), r.n) +
                    ',' + fmt(dist[z]) + ',' + std::to_string(cuts[z]) + '\n';
        write_text(out / "distribution.csv", dcsv);

        ordered_json rr;
        rr["best_objective"] = r.best_objective;
        rr["best_params"] = r.best_params;
        rr["evals"] = r.evals;
        rr["starts"] = ordered_json::array();
        for (const StartTrace& t : single_record.starts) {
            ordered_json ts{{"evals", t.evals},
                            {"f_best", t.f_best},
                            {"aborted", t.aborted},
                            {"note", t.note},
                            {"history", t.history}};
            if (t.x_best.size() > 0)
                ts["x_best"] = std::vector<double>(t.x_best.data(),
                                                   t.x_best.data() + t.x_best.size());
            rr["starts"].push_back(std::move(ts));
        }
        rr["best_start"] = single_record.best_start;
        write_text(out / "run_record.json", rr.dump(2) + "\n");
    }

    if (!cfg.timings_file.empty()) {
        std::string t = "N,n_max,delta,P,d,instance_seed,repeat,arm,wall_ms\n";
        for (const ResultRow& r : result.rows)
            t += std::to_string(r.n) + ',' + std::to_string(r.n_max) + ',' + fmt(r.delta) + ',' +
                 std::to_string(r.qaoa_depth) + ',' + std::to_string(r.d) + ',' +
                 std::to_string(r.instance_seed) + ',' + std::to_string(r.repeat) + ',' + r.arm +
                 ',' + fmt(r.wall_ms) + '\n';
        write_text(cfg.timings_file, t);
    }

    return result;
}

}  // namespace oqs
