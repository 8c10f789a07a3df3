#pragma once

#include <cstdint>
#include <vector>

#include "oqs/linalg.hpp"

namespace oqs {

// Joint state of n oscillator-qubit pairs. Index layout: pair 0 is the
// slowest-varying subsystem; within a pair the oscillator index varies
// slower than the qubit bit, i.e. local index = osc*2 + bit and
// global index = sum_i local_i * pair_dim^(n_pairs-1-i).
struct HybridState {
    int n_pairs = 0;
    int osc_dim = 0;  // N_max + 1
    std::vector<cd> amps;

    int pair_dim() const { return 2 * osc_dim; }
    std::size_t dim() const { return amps.size(); }
};

inline constexpr std::size_t kMaxStateAmps = std::size_t(1) << 27;

// Bit i of bitstring z under the convention that vertex/pair 0 is the
// most significant bit.
inline int bit_of(std::uint32_t z, int vertex, int n) {
    return static_cast<int>((z >> (n - 1 - vertex)) & 1u);
}

// n_pairs-fold tensor power of a single-pair state.
HybridState product_state(int n_pairs, int osc_dim, const ComplexVector& pair_state);

double norm(const HybridState& state);

// state <- (I x ... x u x ... x I) state, with u acting on pair_index.
// Blocked Eigen products, parallelized with OpenMP over disjoint slices
// (bitwise deterministic for any thread count).
void apply_pair_unitary(HybridState& state, int pair_index, const ComplexMatrix& u);

// Multiply each amplitude by phases[z] where z is the qubit bitstring of
// its index; oscillator indices untouched. phases.size() must be
// 2^n_pairs and every entry unit-modulus.
void apply_qubit_diagonal(HybridState& state, const std::vector<cd>& phases);

// Pr(z) = sum over oscillator indices of |amplitude(z, osc)|^2.
// Exact marginal, deterministic summation order.
std::vector<double> qubit_distribution(const HybridState& state);

// Single-pair probability marginal over the local (osc*2+bit) index;
// used by tests to compare pairs of a product state.
std::vector<double> pair_marginal(const HybridState& state, int pair_index);

// Serial reference implementations: straightforward loops, no OpenMP, no
// blocking. Kept as the correctness baseline for the parallel kernels;
// compared in tests and in tools/bench_kernels.
namespace ref {
void apply_pair_unitary(HybridState& state, int pair_index, const ComplexMatrix& u);
void apply_qubit_diagonal(HybridState& state, const std::vector<cd>& phases);
std::vector<double> qubit_distribution(const HybridState& state);
}  // namespace ref

}  // namespace oqs
