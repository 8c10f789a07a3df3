#pragma once

#include "oqs/linalg.hpp"

namespace oqs {

// Truncated oscillator operators at Fock cutoff n_max, in Wigner units:
// x = (a + a^dag)/2, p = (a - a^dag)/(2i), so [x, p] = i/2 away from the
// truncation corner and the vacuum position variance is 1/4.
struct TruncatedMode {
    int n_max = 0;
    ComplexMatrix a;      // annihilation
    ComplexMatrix a_dag;  // creation
    ComplexMatrix x;      // position quadrature
    ComplexMatrix p;      // momentum quadrature
    ComplexMatrix n;      // photon number
};

TruncatedMode make_mode(int n_max);

// e^{beta a^dag - beta* a} on the truncated space; exactly unitary.
ComplexMatrix displacement(const TruncatedMode& mode, cd beta);

// Harmonic-oscillator position wavefunctions psi_n(x) = 2^(1/4) h_n(sqrt2 x)
// in the Wigner-unit convention above, where h_n are the unit-normalized
// Hermite functions. hermite_functions returns h_0..h_n_top at u via the
// stable normalized recurrence.
Eigen::VectorXd hermite_functions(int n_top, double u);
double position_wavefunction(int n, double x);

struct GkpConfig {
    double delta = 0.45;            // envelope parameter
    int n_max = 10;                 // Fock cutoff
    double comb_tolerance = 1e-12;  // norm-increment threshold for peak inclusion
};

struct GkpCodeword {
    Eigen::VectorXd amplitudes;  // normalized, real in this construction
    // Fraction of the enveloped comb's squared norm captured by the
    // cutoff (cutoff-adequacy diagnostic; non-decreasing in delta).
    double captured_fraction = 0.0;
    // Norm of the truncated, un-normalized component vector.
    double unnormalized_norm = 0.0;
};

// Finite-energy GKP codeword: components c_n = e^{-delta^2 n} sum_j psi_n(x_j)
// with x_j = sqrt(pi) (2j + logical), peaks summed symmetrically outward
// until the norm increment falls below comb_tolerance. Throws CutoffError
// if the truncated norm is below 1e-6.
GkpCodeword gkp_codeword(const GkpConfig& cfg, int logical);

// (|0_gkp> + |1_gkp>) / norm; finite-energy codewords are not exactly
// orthogonal so the sum is re-normalized.
GkpCodeword gkp_plus(const GkpConfig& cfg);

}  // namespace oqs
