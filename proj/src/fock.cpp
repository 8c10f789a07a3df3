#include "oqs/fock.hpp"

#include <cmath>
#include <numbers>

namespace oqs {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

TruncatedMode make_mode(int n_max) {
    if (n_max < 1) throw SizeError("make_mode: n_max must be >= 1");
    const int dim = n_max + 1;
    TruncatedMode m;
    m.n_max = n_max;
    m.a = ComplexMatrix::Zero(dim, dim);
    for (int j = 1; j < dim; ++j) m.a(j - 1, j) = std::sqrt(static_cast<double>(j));
    m.a_dag = m.a.adjoint();
    m.x = (m.a + m.a_dag) / 2.0;
    m.p = (m.a - m.a_dag) / cd(0.0, 2.0);
    m.n = m.a_dag * m.a;
    return m;
}

ComplexMatrix displacement(const TruncatedMode& mode, cd beta) {
    // generator beta a^dag - beta* a is anti-Hermitian; exponentiate as
    // e^{i h} with h = -i (beta a^dag - beta* a) Hermitian
    ComplexMatrix h = cd(0.0, -1.0) * (beta * mode.a_dag - std::conj(beta) * mode.a);
    return expm_i_hermitian(h, 1.0);
}

Eigen::VectorXd hermite_functions(int n_top, double u) {
    Eigen::VectorXd h(n_top + 1);
    h(0) = std::pow(std::numbers::pi, -0.25) * std::exp(-u * u / 2.0);
    if (n_top >= 1) h(1) = std::numbers::sqrt2 * u * h(0);
    for (int n = 1; n < n_top; ++n)
        h(n + 1) = u * std::sqrt(2.0 / (n + 1)) * h(n) - std::sqrt(double(n) / (n + 1)) * h(n - 1);
    return h;
}

double position_wavefunction(int n, double x) {
    if (n < 0) throw SizeError("position_wavefunction: negative index");
    return std::pow(2.0, 0.25) * hermite_functions(n, std::numbers::sqrt2 * x)(n);
}

namespace {

void validate(const GkpConfig& cfg) {
    if (!(cfg.delta > 0.0 && cfg.delta <= 1.0))
        throw ContractError("gkp: delta must be in (0, 1]");
    if (!(cfg.comb_tolerance > 0.0 && cfg.comb_tolerance <= 1e-6))
        throw ContractError("gkp: comb_tolerance must be in (0, 1e-6]");
    if (cfg.n_max < 1) throw SizeError("gkp: n_max must be >= 1");
}

// Components of the enveloped comb up to n_top, peaks added symmetrically
// outward until the norm increment is below tol.
Eigen::VectorXd comb_components(double delta, int n_top, int logical, double tol) {
    Eigen::VectorXd env(n_top + 1);
    for (int n = 0; n <= n_top; ++n) env(n) = std::exp(-delta * delta * n);
    Eigen::VectorXd raw = Eigen::VectorXd::Zero(n_top + 1);
    const double sqrt2 = std::numbers::sqrt2;
    double prev_norm = -1.0;
    // peaks at +-k sqrt(pi) for k = logical, logical+2, ...
    for (int k = logical;; k += 2) {
        const double u = sqrt2 * k * kSqrtPi;
        Eigen::VectorXd h = hermite_functions(n_top, u);
        if (k == 0) {
            raw += std::pow(2.0, 0.25) * h;
        } else {
            // psi_n(-x) = (-1)^n psi_n(x)
            for (int n = 0; n <= n_top; ++n)
                raw(n) += std::pow(2.0, 0.25) * h(n) * (1.0 + ((n % 2) ? -1.0 : 1.0));
        }
        const double cur_norm = (env.array() * raw.array()).matrix().norm();
        if (prev_norm >= 0.0 && std::abs(cur_norm - prev_norm) < tol) break;
        prev_norm = cur_norm;
        if (k > 200) break;  // unreachable for delta in (0,1]; belt and braces
    }
    return (env.array() * raw.array()).matrix();
}

}  // namespace

GkpCodeword gkp_codeword(const GkpConfig& cfg, int logical) {
    validate(cfg);
    if (logical != 0 && logical != 1)
        throw ContractError("gkp_codeword: logical bit must be 0 or 1");
    // reference cutoff large enough that the envelope tail is negligible
    const int n_ref = std::max(2 * (cfg.n_max + 1),
                               static_cast<int>(std::ceil(46.1 / (cfg.delta * cfg.delta))));
    Eigen::VectorXd full = comb_components(cfg.delta, n_ref, logical, cfg.comb_tolerance);
    Eigen::VectorXd trunc = full.head(cfg.n_max + 1);
    const double trunc_norm = trunc.norm();
    if (trunc_norm < 1e-6)
        throw CutoffError("gkp_codeword: cutoff too small, truncated norm " +
                          std::to_string(trunc_norm));
    GkpCodeword out;
    out.unnormalized_norm = trunc_norm;
    out.captured_fraction = trunc.squaredNorm() / full.squaredNorm();
    out.amplitudes = trunc / trunc_norm;
    return out;
}

GkpCodeword gkp_plus(const GkpConfig& cfg) {
    GkpCodeword zero = gkp_codeword(cfg, 0);
    GkpCodeword one = gkp_codeword(cfg, 1);
    GkpCodeword out;
    Eigen::VectorXd sum = zero.amplitudes + one.amplitudes;
    out.amplitudes = sum / sum.norm();
    out.captured_fraction = std::min(zero.captured_fraction, one.captured_fraction);
    out.unnormalized_norm = std::min(zero.unnormalized_norm, one.unnormalized_norm);
    return out;
}

}  // namespace oqs
