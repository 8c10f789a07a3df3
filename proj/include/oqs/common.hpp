#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oqs {

using cd = std::complex<double>;

// Tolerance constants shared by implementation checks and property tests.
namespace tol {
inline constexpr double unitarity = 1e-10;
inline constexpr double hermiticity = 1e-10;
inline constexpr double norm_drift = 1e-8;
inline constexpr double kron_oracle = 1e-12;
}  // namespace tol

struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CutoffError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// SplitMix64 finalizer; used for portable seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic combination of a master seed with context words.
// Every derived stream in the project goes through this single function.
inline std::uint64_t derive_seed(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    for (std::uint64_t w : words) h = mix64(h ^ w);
    return h;
}

// mt19937_64 with the 53-bit mantissa mapping. std::mt19937_64 output is
// fully pinned by the standard and the mapping below avoids the
// implementation-defined std::uniform_real_distribution, so streams
// reproduce across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t next_u64() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// Sum in fixed 4096-element chunks: result independent of any later
// parallel partitioning and more accurate than a running sum.
inline double chunked_sum(const double* v, std::size_t n) {
    constexpr std::size_t chunk = 4096;
    double total = 0.0;
    for (std::size_t c0 = 0; c0 < n; c0 += chunk) {
        const std::size_t c1 = std::min(n, c0 + chunk);
        double s = 0.0;
        for (std::size_t i = c0; i < c1; ++i) s += v[i];
        total += s;
    }
    return total;
}

}  // namespace oqs
