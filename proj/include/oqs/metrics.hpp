#pragma once

#include <optional>

#include "oqs/graph.hpp"

namespace oqs {

struct MetricReport {
    double expected_cut = 0.0;
    std::optional<double> approx_ratio;  // absent when c_max = 0
    double p_opt = 0.0;
    int c_max = 0;
};

// <H_C> = sum_z Pr(z) C(z)
double expected_cut(const std::vector<double>& dist, const GraphInstance& g);

// expected_cut / c_max; not applicable on the empty graph.
std::optional<double> approximation_ratio(const std::vector<double>& dist,
                                          const GraphInstance& g);

// total probability on the brute-force optimal set
double optimal_solution_probability(const std::vector<double>& dist, const GraphInstance& g);

MetricReport compute_metrics(const std::vector<double>& dist, const GraphInstance& g);

}  // namespace oqs
