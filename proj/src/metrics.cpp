#include "oqs/metrics.hpp"

namespace oqs {

namespace {
void check_dist(const std::vector<double>& dist, const GraphInstance& g) {
    if (dist.size() != (std::size_t(1) << g.n_vertices))
        throw SizeError("metrics: distribution size != 2^n_vertices");
}
}  // namespace

double expected_cut(const std::vector<double>& dist, const GraphInstance& g) {
    check_dist(dist, g);
    const std::vector<int> cuts = cut_table(g);
    double acc = 0.0;
    for (std::size_t z = 0; z < dist.size(); ++z) acc += dist[z] * cuts[z];
    return acc;
}

std::optional<double> approximation_ratio(const std::vector<double>& dist,
                                          const GraphInstance& g) {
    const int c_max = max_cut_bruteforce(g).c_max;
    if (c_max == 0) return std::nullopt;
    return expected_cut(dist, g) / c_max;
}

double optimal_solution_probability(const std::vector<double>& dist, const GraphInstance& g) {
    check_dist(dist, g);
    const MaxCutResult mc = max_cut_bruteforce(g);
    double acc = 0.0;
    for (std::uint32_t z : mc.optimal) acc += dist[z];
    return acc;
}

MetricReport compute_metrics(const std::vector<double>& dist, const GraphInstance& g) {
    check_dist(dist, g);
    const MaxCutResult mc = max_cut_bruteforce(g);
    MetricReport rep;
    rep.c_max = mc.c_max;
    rep.expected_cut = expected_cut(dist, g);
    if (mc.c_max > 0) rep.approx_ratio = rep.expected_cut / mc.c_max;
    for (std::uint32_t z : mc.optimal) rep.p_opt += dist[z];
    return rep;
}

}  // namespace oqs
