#pragma once

#include <span>

#include "oqs/gates.hpp"
#include "oqs/graph.hpp"
#include "oqs/state.hpp"

namespace oqs {

struct AnsatzConfig {
    int n_pairs = 0;       // = graph vertices
    int n_max = 10;        // Fock cutoff
    double delta = 0.45;   // GKP envelope
    int qaoa_depth = 2;    // P
    int mixer_depth = 2;   // d
    CdAxisMode cd_axis = CdAxisMode::z_control();
    double comb_tolerance = 1e-12;

    void validate() const;
};

// Flat trainable parameter vector, one slice per QAOA layer:
//   [gamma_k, beta0_k, then per mixer block l: beta_x, (phi_x), theta_x,
//    beta_p, (phi_p), theta_p]
// phi entries exist only in XY control mode. The block parameters are
// shared across all pairs within a layer.
struct ParamLayout {
    int qaoa_depth = 1;
    int mixer_depth = 0;
    bool xy = false;

    static ParamLayout of(const AnsatzConfig& cfg) {
        return {cfg.qaoa_depth, cfg.mixer_depth, !cfg.cd_axis.is_z()};
    }

    int block_stride() const { return xy ? 6 : 4; }
    int per_layer() const { return 2 + block_stride() * mixer_depth; }
    int size() const { return qaoa_depth * per_layer(); }

    int gamma(int k) const { return k * per_layer(); }
    int beta0(int k) const { return k * per_layer() + 1; }
    int block(int k, int l) const { return k * per_layer() + 2 + block_stride() * l; }
    int beta_x(int k, int l) const { return block(k, l); }
    int phi_x(int k, int l) const { return block(k, l) + 1; }  // XY only
    int theta_x(int k, int l) const { return block(k, l) + (xy ? 2 : 1); }
    int beta_p(int k, int l) const { return block(k, l) + (xy ? 3 : 2); }
    int phi_p(int k, int l) const { return block(k, l) + 4; }  // XY only
    int theta_p(int k, int l) const { return block(k, l) + (xy ? 5 : 3); }

    // Per-parameter uniform initialization ranges: gamma in [0, 2pi),
    // rotation angles in [0, pi), CD amplitudes in [-sqrt(pi)/2, sqrt(pi)/2],
    // phi in [0, 2pi).
    std::vector<std::pair<double, double>> init_ranges() const;
};

// Tensor product of n_pairs copies of |+_gkp> (x) |0_qubit|.
HybridState initial_state(const AnsatzConfig& cfg);

// Phase table z -> e^{-i gamma C(z)} for the cost unitary diagonal.
std::vector<cd> cost_phase_table(const GraphInstance& g, double gamma);

// Local non-Abelian mixer for one layer, acting on a single pair:
//   R_X(2 beta0) prod_l [ CD(i beta_x, sigma) R_X(2 theta_x)
//                         CD(beta_p, sigma) R_X(2 theta_p) ]
// written left to right in standard operator order (rightmost factor acts
// first). theta_k is the layer slice excluding gamma, length
// 1 + block_stride*d.
ComplexMatrix mixer_unitary(const TruncatedMode& mode, const CdAxisMode& axis, int mixer_depth,
                            std::span<const double> theta_k);

// Full circuit: initial state; per layer k the per-pair E_x, the cost
// diagonal U_C(gamma_k), per-pair E_x^dag and per-pair mixer; one final
// per-pair E_x after the last layer. Per-pair factors between diagonals
// are fused into a single matrix before hitting the state.
HybridState evolve(const AnsatzConfig& cfg, const GraphInstance& g,
                   std::span<const double> params);

// Exact Z-basis measurement distribution over qubit bitstrings.
std::vector<double> output_distribution(const HybridState& state);

// shots i.i.d. draws from dist (inverse CDF on the seeded 53-bit stream).
std::vector<std::uint32_t> sample_bitstrings(const std::vector<double>& dist, int shots,
                                             std::uint64_t seed);

// Empirical distribution of sample_bitstrings draws.
std::vector<double> empirical_distribution(const std::vector<double>& dist, int shots,
                                           std::uint64_t seed);

}  // namespace oqs
