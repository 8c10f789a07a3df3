#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "oqs/common.hpp"

namespace oqs {

using Objective = std::function<double(const Eigen::VectorXd&)>;

struct OptimizerConfig {
    int n_starts = 5;
    double initial_step = 0.5;   // trust-region start
    double final_step = 1e-4;    // termination radius
    int max_evals = 400;         // per start
    std::uint64_t seed = 0;
    // per-parameter uniform ranges for start points; size fixes the
    // problem dimension
    std::vector<std::pair<double, double>> init_ranges;

    void validate() const;
};

struct StartTrace {
    Eigen::VectorXd x_best;
    double f_best = std::numeric_limits<double>::infinity();
    std::vector<double> history;  // every objective value, eval order
    int evals = 0;
    bool aborted = false;
    std::string note;
};

struct RunRecord {
    Eigen::VectorXd best_params;
    double best_objective = std::numeric_limits<double>::infinity();
    int best_start = -1;
    std::vector<StartTrace> starts;
    double wall_seconds = 0.0;
};

// Derivative-free local minimization: linear interpolation model over an
// m+1 point simplex, steepest-descent step on the model within a trust
// radius that shrinks from initial_step to final_step. Terminates on
// radius or eval budget; aborts the start if the objective returns a
// non-finite value.
StartTrace minimize_local(const Objective& objective, const Eigen::VectorXd& x0,
                          const OptimizerConfig& cfg);

// n_starts independent runs of minimize_local from points drawn uniformly
// in init_ranges with per-start derived seeds; ties between equal optima
// break toward the lowest start index. Throws if every start aborted.
RunRecord multistart(const Objective& objective, const OptimizerConfig& cfg);

}  // namespace oqs
