#include "oqs/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace oqs {

void OptimizerConfig::validate() const {
    if (n_starts < 1) throw ContractError("OptimizerConfig: n_starts must be >= 1");
    if (!(final_step < initial_step))
        throw ContractError("OptimizerConfig: final_step must be < initial_step");
    if (!(final_step > 0.0)) throw ContractError("OptimizerConfig: final_step must be > 0");
    if (max_evals < 1) throw ContractError("OptimizerConfig: max_evals must be >= 1");
}

StartTrace minimize_local(const Objective& objective, const Eigen::VectorXd& x0,
                          const OptimizerConfig& cfg) {
    cfg.validate();
    const int m = static_cast<int>(x0.size());
    StartTrace tr;

    auto can_eval = [&] { return tr.evals < cfg.max_evals; };
    // returns false when the value was non-finite (start aborted)
    auto eval = [&](const Eigen::VectorXd& x, double& f_out) {
        const double f = objective(x);
        tr.history.push_back(f);
        ++tr.evals;
        if (!std::isfinite(f)) {
            tr.aborted = true;
            tr.note = "objective returned non-finite value at eval " + std::to_string(tr.evals);
            return false;
        }
        if (f < tr.f_best) {
            tr.f_best = f;
            tr.x_best = x;
        }
        f_out = f;
        return true;
    };

    std::vector<Eigen::VectorXd> pts;
    std::vector<double> fv;
    double rho = cfg.initial_step;

    // xb by value: the caller hands us an element of pts, which assign()
    // below destroys
    auto span_around = [&](Eigen::VectorXd xb, double fb) {
        pts.assign(1, xb);
        fv.assign(1, fb);
        for (int i = 0; i < m; ++i) {
            if (!can_eval()) return false;
            Eigen::VectorXd xi = xb;
            xi(i) += rho;
            double f;
            if (!eval(xi, f)) return false;
            pts.push_back(std::move(xi));
            fv.push_back(f);
        }
        return true;
    };

    double f0;
    if (!can_eval() || !eval(x0, f0)) return tr;
    if (!span_around(x0, f0)) return tr;

    bool just_respanned = true;
    while (can_eval()) {
        const int b = static_cast<int>(std::min_element(fv.begin(), fv.end()) - fv.begin());

        Eigen::MatrixXd s(m, m);
        Eigen::VectorXd df(m);
        int r = 0;
        for (int j = 0; j <= m; ++j) {
            if (j == b) continue;
            s.row(r) = (pts[j] - pts[b]).transpose();
            df(r) = fv[j] - fv[b];
            ++r;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
        if (!lu.isInvertible()) {
            // degenerate interpolation set: rebuild around the incumbent
            if (just_respanned) {
                rho *= 0.5;
                if (rho < cfg.final_step) break;
            }
            if (!span_around(pts[b], fv[b])) break;
            just_respanned = true;
            continue;
        }
        const Eigen::VectorXd g = lu.solve(df);
        const double gn = g.norm();
        if (!(gn > 1e-12 * std::max(1.0, std::abs(fv[b])))) {
            // model flat at this scale
            rho *= 0.5;
            if (rho < cfg.final_step) break;
            continue;
        }

        Eigen::VectorXd xn = pts[b] - (rho / gn) * g;
        double fn;
        if (!can_eval()) break;
        if (!eval(xn, fn)) break;

        const int w = static_cast<int>(std::max_element(fv.begin(), fv.end()) - fv.begin());
        if (fn < fv[b]) {
            pts[w] = std::move(xn);
            fv[w] = fn;
            just_respanned = false;
            continue;
        }
        if (fn < fv[w]) {
            pts[w] = std::move(xn);
            fv[w] = fn;
        }
        double spread = 0.0;
        for (int j = 0; j <= m; ++j) spread = std::max(spread, (pts[j] - pts[b]).norm());
        if (spread > 8.0 * rho && !just_respanned) {
            // step failed against a stale simplex: refresh geometry at the
            // current radius before deciding to shrink
            if (!span_around(pts[b], fv[b])) break;
            just_respanned = true;
        } else {
            rho *= 0.5;
            if (rho < cfg.final_step) break;
            just_respanned = false;
        }
    }
    return tr;
}

RunRecord multistart(const Objective& objective, const OptimizerConfig& cfg) {
    cfg.validate();
    const int dim = static_cast<int>(cfg.init_ranges.size());
    if (dim < 1) throw ContractError("multistart: init_ranges must fix a positive dimension");

    const auto t0 = std::chrono::steady_clock::now();
    RunRecord rec;
    rec.starts.resize(static_cast<std::size_t>(cfg.n_starts));
    for (int s = 0; s < cfg.n_starts; ++s) {
        Rng rng(derive_seed({cfg.seed, 0x7374617274ULL /* "start" */,
                             static_cast<std::uint64_t>(s)}));
        Eigen::VectorXd x0(dim);
        for (int i = 0; i < dim; ++i)
            x0(i) = rng.uniform(cfg.init_ranges[i].first, cfg.init_ranges[i].second);
        rec.starts[static_cast<std::size_t>(s)] = minimize_local(objective, x0, cfg);
    }
    for (int s = 0; s < cfg.n_starts; ++s) {
        const StartTrace& t = rec.starts[static_cast<std::size_t>(s)];
        if (t.aborted) continue;
        if (t.f_best < rec.best_objective) {
            rec.best_objective = t.f_best;
            rec.best_params = t.x_best;
            rec.best_start = s;
        }
    }
    if (rec.best_start < 0) throw std::runtime_error("multistart: all starts aborted");
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace oqs
