#include "oqs/state.hpp"

#include <cmath>

namespace oqs {

namespace {

using RowMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using StridedMap = Eigen::Map<RowMat, 0, Eigen::OuterStride<>>;

// Column-panel width for the blocked kernel; bounds per-thread scratch.
constexpr std::ptrdiff_t kColChunk = 2048;

void check_pair_args(const HybridState& state, int pair_index, const ComplexMatrix& u) {
    const int d = state.pair_dim();
    if (pair_index < 0 || pair_index >= state.n_pairs)
        throw SizeError("apply_pair_unitary: pair index " + std::to_string(pair_index) +
                        " out of range");
    if (u.rows() != d || u.cols() != d)
        throw SizeError("apply_pair_unitary: operator is " + std::to_string(u.rows()) + "x" +
                        std::to_string(u.cols()) + ", pair dimension is " + std::to_string(d));
}

}  // namespace

HybridState product_state(int n_pairs, int osc_dim, const ComplexVector& pair_state) {
    if (n_pairs < 1) throw SizeError("product_state: need at least one pair");
    const std::size_t d = static_cast<std::size_t>(2) * osc_dim;
    if (pair_state.size() != static_cast<Eigen::Index>(d))
        throw SizeError("product_state: pair state has wrong dimension");
    std::size_t dim = 1;
    for (int i = 0; i < n_pairs; ++i) {
        if (dim > kMaxStateAmps / d)
            throw SizeError("product_state: state of " + std::to_string(n_pairs) +
                            " pairs exceeds amplitude limit");
        dim *= d;
    }
    HybridState state;
    state.n_pairs = n_pairs;
    state.osc_dim = osc_dim;
    state.amps.assign(dim, cd(0.0, 0.0));
    state.amps[0] = cd(1.0, 0.0);
    std::size_t cur = 1;
    for (int i = 0; i < n_pairs; ++i) {
        // extend by one factor: amps[0..cur*d) = amps[0..cur) (x) pair_state
        for (std::size_t b = cur; b-- > 0;) {
            const cd head = state.amps[b];
            for (std::size_t j = d; j-- > 0;)
                state.amps[b * d + j] = head * pair_state(static_cast<Eigen::Index>(j));
        }
        cur *= d;
    }
    return state;
}

double norm(const HybridState& state) {
    constexpr std::size_t chunk = 4096;
    const std::size_t n = state.amps.size();
    double total = 0.0;
    for (std::size_t c0 = 0; c0 < n; c0 += chunk) {
        const std::size_t c1 = std::min(n, c0 + chunk);
        double s = 0.0;
        for (std::size_t i = c0; i < c1; ++i) s += std::norm(state.amps[i]);
        total += s;
    }
    return std::sqrt(total);
}

void apply_pair_unitary(HybridState& state, int pair_index, const ComplexMatrix& u) {
    check_pair_args(state, pair_index, u);
    const std::ptrdiff_t d = state.pair_dim();
    std::ptrdiff_t left = 1, right = 1;
    for (int i = 0; i < pair_index; ++i) left *= d;
    for (int i = pair_index + 1; i < state.n_pairs; ++i) right *= d;
    cd* amps = state.amps.data();

    if (right == 1) {
        // contiguous rows: view as (left x d), out = in * u^T
        const std::ptrdiff_t row_chunk = std::max<std::ptrdiff_t>(1, kColChunk / d);
        const std::ptrdiff_t n_jobs = (left + row_chunk - 1) / row_chunk;
#pragma omp parallel
        {
            RowMat scratch(row_chunk, d);
#pragma omp for schedule(static)
            for (std::ptrdiff_t job = 0; job < n_jobs; ++job) {
                const std::ptrdiff_t r0 = job * row_chunk;
                const std::ptrdiff_t len = std::min(row_chunk, left - r0);
                Eigen::Map<RowMat> block(amps + r0 * d, len, d);
                scratch.topRows(len).noalias() = block * u.transpose();
                block = scratch.topRows(len);
            }
        }
        return;
    }

    const std::ptrdiff_t n_chunks = (right + kColChunk - 1) / kColChunk;
    const std::ptrdiff_t n_jobs = left * n_chunks;
#pragma omp parallel
    {
        RowMat scratch(d, std::min<std::ptrdiff_t>(right, kColChunk));
#pragma omp for schedule(static)
        for (std::ptrdiff_t job = 0; job < n_jobs; ++job) {
            const std::ptrdiff_t l = job / n_chunks;
            const std::ptrdiff_t c0 = (job % n_chunks) * kColChunk;
            const std::ptrdiff_t len = std::min<std::ptrdiff_t>(kColChunk, right - c0);
            StridedMap block(amps + l * d * right + c0, d, len, Eigen::OuterStride<>(right));
            scratch.leftCols(len).noalias() = u * block;
            block = scratch.leftCols(len);
        }
    }
}

void apply_qubit_diagonal(HybridState& state, const std::vector<cd>& phases) {
    const int n = state.n_pairs;
    const std::size_t nz = std::size_t(1) << n;
    if (phases.size() != nz)
        throw SizeError("apply_qubit_diagonal: phase table size mismatch");
    for (const cd& ph : phases)
        if (std::abs(std::abs(ph) - 1.0) > 1e-12)
            throw ContractError("apply_qubit_diagonal: phase table entry not unit modulus");

    const std::ptrdiff_t d = state.pair_dim();
    const std::ptrdiff_t dim = static_cast<std::ptrdiff_t>(state.dim());
    cd* amps = state.amps.data();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < dim; ++idx) {
        std::size_t z = 0;
        std::ptrdiff_t rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            z |= static_cast<std::size_t>((rest % d) & 1) << (n - 1 - i);
            rest /= d;
        }
        amps[idx] *= phases[z];
    }
}

std::vector<double> qubit_distribution(const HybridState& state) {
    const int n = state.n_pairs;
    const std::ptrdiff_t nz = std::ptrdiff_t(1) << n;
    std::vector<double> out(static_cast<std::size_t>(nz), 0.0);
    const std::ptrdiff_t d = state.pair_dim();
    std::vector<std::size_t> bit_stride(n), osc_stride(n);
    std::size_t s = 1;
    for (int i = n - 1; i >= 0; --i) {
        bit_stride[i] = s;
        osc_stride[i] = 2 * s;
        s *= d;
    }
    const cd* amps = state.amps.data();
    const int osc_dim = state.osc_dim;
    // Each bucket is summed in fixed index order: thread count does not
    // affect the result.
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t z = 0; z < nz; ++z) {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            idx += static_cast<std::size_t>(bit_of(static_cast<std::uint32_t>(z), i, n)) *
                   bit_stride[i];
        std::vector<int> digits(n, 0);
        double acc = 0.0;
        for (;;) {
            acc += std::norm(amps[idx]);
            int i = n - 1;
            for (; i >= 0; --i) {
                ++digits[i];
                idx += osc_stride[i];
                if (digits[i] < osc_dim) break;
                idx -= static_cast<std::size_t>(osc_dim) * osc_stride[i];
                digits[i] = 0;
            }
            if (i < 0) break;
        }
        out[static_cast<std::size_t>(z)] = acc;
    }
    return out;
}

std::vector<double> pair_marginal(const HybridState& state, int pair_index) {
    const std::size_t d = static_cast<std::size_t>(state.pair_dim());
    if (pair_index < 0 || pair_index >= state.n_pairs)
        throw SizeError("pair_marginal: pair index out of range");
    std::size_t right = 1;
    for (int i = pair_index + 1; i < state.n_pairs; ++i) right *= d;
    std::vector<double> out(d, 0.0);
    for (std::size_t idx = 0; idx < state.dim(); ++idx)
        out[(idx / right) % d] += std::norm(state.amps[idx]);
    return out;
}

}  // namespace oqs
