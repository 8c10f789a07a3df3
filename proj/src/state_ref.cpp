#include "oqs/state.hpp"

#include <cmath>

namespace oqs::ref {

void apply_pair_unitary(HybridState& state, int pair_index, const ComplexMatrix& u) {
    const std::size_t d = static_cast<std::size_t>(state.pair_dim());
    if (u.rows() != static_cast<Eigen::Index>(d) || u.cols() != static_cast<Eigen::Index>(d))
        throw SizeError("ref::apply_pair_unitary: operator dimension mismatch");
    std::size_t left = 1, right = 1;
    for (int i = 0; i < pair_index; ++i) left *= d;
    for (int i = pair_index + 1; i < state.n_pairs; ++i) right *= d;
    std::vector<cd> column(d);
    for (std::size_t l = 0; l < left; ++l) {
        cd* base = state.amps.data() + l * d * right;
        for (std::size_t r = 0; r < right; ++r) {
            for (std::size_t j = 0; j < d; ++j) column[j] = base[j * right + r];
            for (std::size_t i = 0; i < d; ++i) {
                cd acc(0.0, 0.0);
                for (std::size_t j = 0; j < d; ++j)
                    acc += u(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) *
                           column[j];
                base[i * right + r] = acc;
            }
        }
    }
}

void apply_qubit_diagonal(HybridState& state, const std::vector<cd>& phases) {
    const int n = state.n_pairs;
    const std::size_t d = static_cast<std::size_t>(state.pair_dim());
    if (phases.size() != (std::size_t(1) << n))
        throw SizeError("ref::apply_qubit_diagonal: phase table size mismatch");
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        std::size_t z = 0, rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            z |= ((rest % d) & 1) << (n - 1 - i);
            rest /= d;
        }
        state.amps[idx] *= phases[z];
    }
}

std::vector<double> qubit_distribution(const HybridState& state) {
    const int n = state.n_pairs;
    const std::size_t d = static_cast<std::size_t>(state.pair_dim());
    std::vector<double> out(std::size_t(1) << n, 0.0);
    for (std::size_t idx = 0; idx < state.dim(); ++idx) {
        std::size_t z = 0, rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            z |= ((rest % d) & 1) << (n - 1 - i);
            rest /= d;
        }
        out[z] += std::norm(state.amps[idx]);
    }
    return out;
}

}  // namespace oqs::ref
