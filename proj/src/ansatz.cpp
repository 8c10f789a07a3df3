#include "oqs/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oqs {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// phi is unconstrained during optimization; fold it into [0, 2pi)
double wrap_angle(double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double w = std::fmod(phi, two_pi);
    return w < 0.0 ? w + two_pi : w;
}

}  // namespace

void AnsatzConfig::validate() const {
    if (n_pairs < 1) throw ContractError("AnsatzConfig: n_pairs must be >= 1");
    if (qaoa_depth < 1) throw ContractError("AnsatzConfig: qaoa_depth must be >= 1");
    if (mixer_depth < 0) throw ContractError("AnsatzConfig: mixer_depth must be >= 0");
    if (n_max < 1) throw ContractError("AnsatzConfig: n_max must be >= 1");
}

std::vector<std::pair<double, double>> ParamLayout::init_ranges() const {
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::pair<double, double>> ranges(size());
    for (int k = 0; k < qaoa_depth; ++k) {
        ranges[gamma(k)] = {0.0, two_pi};
        ranges[beta0(k)] = {0.0, std::numbers::pi};
        for (int l = 0; l < mixer_depth; ++l) {
            ranges[beta_x(k, l)] = {-kSqrtPi / 2.0, kSqrtPi / 2.0};
            ranges[theta_x(k, l)] = {0.0, std::numbers::pi};
            ranges[beta_p(k, l)] = {-kSqrtPi / 2.0, kSqrtPi / 2.0};
            ranges[theta_p(k, l)] = {0.0, std::numbers::pi};
            if (xy) {
                ranges[phi_x(k, l)] = {0.0, two_pi};
                ranges[phi_p(k, l)] = {0.0, two_pi};
            }
        }
    }
    return ranges;
}

HybridState initial_state(const AnsatzConfig& cfg) {
    cfg.validate();
    GkpConfig gkp{cfg.delta, cfg.n_max, cfg.comb_tolerance};
    const Eigen::VectorXd plus = gkp_plus(gkp).amplitudes;
    ComplexVector pair = ComplexVector::Zero(2 * (cfg.n_max + 1));
    for (int n = 0; n <= cfg.n_max; ++n) pair(2 * n) = plus(n);  // qubit bit 0
    return product_state(cfg.n_pairs, cfg.n_max + 1, pair);
}

std::vector<cd> cost_phase_table(const GraphInstance& g, double gamma) {
    const std::vector<int> cuts = cut_table(g);
    std::vector<cd> phases(cuts.size());
    for (std::size_t z = 0; z < cuts.size(); ++z)
        phases[z] = std::polar(1.0, -gamma * cuts[z]);
    return phases;
}

ComplexMatrix mixer_unitary(const TruncatedMode& mode, const CdAxisMode& axis, int mixer_depth,
                            std::span<const double> theta_k) {
    const int stride = axis.is_z() ? 4 : 6;
    if (static_cast<int>(theta_k.size()) != 1 + stride * mixer_depth)
        throw SizeError("mixer_unitary: parameter slice has wrong length");
    const ComplexMatrix id_osc = ComplexMatrix::Identity(mode.n_max + 1, mode.n_max + 1);
    auto rx_on_pair = [&](double angle) {
        return kron(id_osc, qubit_rotation(axis_x(), angle));
    };
    ComplexMatrix m = rx_on_pair(2.0 * theta_k[0]);
    for (int l = 0; l < mixer_depth; ++l) {
        const double* blk = theta_k.data() + 1 + stride * l;
        CdAxisMode ax_x = axis, ax_p = axis;
        double beta_x, theta_x, beta_p, theta_p;
        if (axis.is_z()) {
            beta_x = blk[0];
            theta_x = blk[1];
            beta_p = blk[2];
            theta_p = blk[3];
        } else {
            beta_x = blk[0];
            ax_x = CdAxisMode::xy_plane(wrap_angle(blk[1]));
            theta_x = blk[2];
            beta_p = blk[3];
            ax_p = CdAxisMode::xy_plane(wrap_angle(blk[4]));
            theta_p = blk[5];
        }
        // x-coupled CD takes the purely imaginary amplitude i*beta_x,
        // the p-coupled CD the purely real beta_p
        m = m * conditional_displacement(mode, cd(0.0, beta_x), ax_x) * rx_on_pair(2.0 * theta_x) *
            conditional_displacement(mode, cd(beta_p, 0.0), ax_p) * rx_on_pair(2.0 * theta_p);
    }
    return m;
}

HybridState evolve(const AnsatzConfig& cfg, const GraphInstance& g,
                   std::span<const double> params) {
    cfg.validate();
    if (g.n_vertices != cfg.n_pairs)
        throw SizeError("evolve: graph vertex count != n_pairs");
    const ParamLayout layout = ParamLayout::of(cfg);
    if (static_cast<int>(params.size()) != layout.size())
        throw SizeError("evolve: parameter vector has length " + std::to_string(params.size()) +
                        ", layout requires " + std::to_string(layout.size()));

    const TruncatedMode mode = make_mode(cfg.n_max);
    const auto ex = ex_readout_cached(cfg.n_max, cfg.delta);
    HybridState state = initial_state(cfg);

    auto sweep = [&](const ComplexMatrix& u) {
        for (int i = 0; i < cfg.n_pairs; ++i) apply_pair_unitary(state, i, u);
    };

    sweep(*ex);
    for (int k = 0; k < cfg.qaoa_depth; ++k) {
        apply_qubit_diagonal(state, cost_phase_table(g, params[layout.gamma(k)]));
        const ComplexMatrix mix = mixer_unitary(
            mode, cfg.cd_axis, cfg.mixer_depth,
            params.subspan(layout.beta0(k), layout.per_layer() - 1));
        // E_x^dag, mixer and the next E_x (final one after the last layer)
        // act back-to-back on each pair; fuse them into one matrix.
        sweep((*ex) * mix * ex->adjoint());
    }
    return state;
}

std::vector<double> output_distribution(const HybridState& state) {
    return qubit_distribution(state);
}

std::vector<std::uint32_t> sample_bitstrings(const std::vector<double>& dist, int shots,
                                             std::uint64_t seed) {
    if (shots < 1) throw ContractError("sample_bitstrings: shots must be >= 1");
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t z = 0; z < dist.size(); ++z) {
        acc += dist[z];
        cdf[z] = acc;
    }
    Rng rng(seed);
    std::vector<std::uint32_t> out(static_cast<std::size_t>(shots));
    for (int s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        out[static_cast<std::size_t>(s)] =
            static_cast<std::uint32_t>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                                cdf.size() - 1));
    }
    return out;
}

std::vector<double> empirical_distribution(const std::vector<double>& dist, int shots,
                                           std::uint64_t seed) {
    std::vector<double> emp(dist.size(), 0.0);
    for (std::uint32_t z : sample_bitstrings(dist, shots, seed))
        emp[z] += 1.0 / shots;
    return emp;
}

}  // namespace oqs
