#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oqs/gates.hpp"
#include "support/oracles.hpp"

using namespace oqs;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;

// P(ancilla measures b | codeword b prepared with ancilla |0>)
double readout_prob(const ComplexMatrix& ex, const Eigen::VectorXd& code, int b) {
    const int dim = static_cast<int>(code.size());
    ComplexVector st = ComplexVector::Zero(2 * dim);
    for (int n = 0; n < dim; ++n) st(2 * n) = code(n);
    st = ex * st;
    double p = 0.0;
    for (int n = 0; n < dim; ++n) p += std::norm(st(2 * n + b));
    return p;
}
}  // namespace

TEST_CASE("qubit rotation closed forms and series oracle") {
    CHECK(max_abs(qubit_rotation(axis_x(), 0.0) - ComplexMatrix::Identity(2, 2)) < 1e-14);

    // R_x(pi) = -iX
    CHECK(max_abs(qubit_rotation(axis_x(), M_PI) - cd(0, -1) * pauli_x()) < 1e-14);

    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const QubitAxis diag{inv_sqrt3, inv_sqrt3, inv_sqrt3};
    const ComplexMatrix gen = inv_sqrt3 * (pauli_x() + pauli_y() + pauli_z());
    CHECK(max_abs(qubit_rotation(diag, 0.7) - test::expm_series(gen, -0.35)) < 1e-10);

    CHECK_THROWS_AS(qubit_rotation({1.0, 1.0, 0.0}, 0.3), ContractError);
}

TEST_CASE("conditional displacement trivial and coherent-state action") {
    const TruncatedMode m = make_mode(20);
    CHECK(max_abs(conditional_displacement(m, cd(0, 0), CdAxisMode::z_control()) -
                  ComplexMatrix::Identity(42, 42)) < 1e-12);

    // |0>_osc (x) |0>_q  ->  |coherent beta> (x) |0>_q under Z control
    const double beta = 0.4;
    const ComplexMatrix cdg = conditional_displacement(m, cd(beta, 0), CdAxisMode::z_control());
    ComplexVector in = ComplexVector::Zero(42);
    in(0) = 1.0;
    const ComplexVector out = cdg * in;
    double fact = 1.0;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) fact *= n;
        const double coherent = std::exp(-beta * beta / 2.0) * std::pow(beta, n) / std::sqrt(fact);
        CHECK(std::abs(out(2 * n) - cd(coherent, 0)) < 1e-8);
        CHECK(std::abs(out(2 * n + 1)) < 1e-14);
    }
}

TEST_CASE("conditional displacement equals expm of the full generator") {
    const TruncatedMode m = make_mode(12);
    const cd beta(0.23, -0.31);
    for (const CdAxisMode& axis :
         {CdAxisMode::z_control(), CdAxisMode::xy_plane(0.0), CdAxisMode::xy_plane(1.1)}) {
        ComplexMatrix sigma =
            axis.is_z() ? pauli_z()
                        : ComplexMatrix(std::cos(axis.phi) * pauli_x() +
                                        std::sin(axis.phi) * pauli_y());
        const ComplexMatrix gen = kron(beta * m.a_dag - std::conj(beta) * m.a, sigma);
        const ComplexMatrix oracle = expm_i_hermitian(cd(0, -1) * gen, 1.0);
        CHECK(max_abs(conditional_displacement(m, beta, axis) - oracle) < 1e-10);
    }
}

TEST_CASE("CD block structure is exact for Z control") {
    const TruncatedMode m = make_mode(8);
    const ComplexMatrix g = conditional_displacement(m, cd(0.3, 0.2), CdAxisMode::z_control());
    for (int r = 0; r < g.rows(); ++r)
        for (int c = 0; c < g.cols(); ++c)
            if ((r & 1) != (c & 1)) CHECK(std::abs(g(r, c)) == 0.0);
}

TEST_CASE("CD quadrature-coupling identities") {
    const TruncatedMode m = make_mode(10);
    const double b = 0.37;
    // purely imaginary amplitude couples through x
    ComplexMatrix gen_x = cd(0, b) * m.a_dag - std::conj(cd(0, b)) * m.a;
    CHECK(max_abs(gen_x - ComplexMatrix(cd(0, 2 * b) * m.x)) < 1e-12);
    // purely real amplitude couples through p
    ComplexMatrix gen_p = cd(b, 0) * m.a_dag - cd(b, 0) * m.a;
    CHECK(max_abs(gen_p - ComplexMatrix(cd(0, -2 * b) * m.p)) < 1e-12);
}

TEST_CASE("rzz closed forms") {
    CHECK(max_abs(rzz(0.0) - ComplexMatrix::Identity(4, 4)) < 1e-15);
    CHECK(max_abs(rzz(2 * M_PI) + ComplexMatrix::Identity(4, 4)) < 1e-14);
    const ComplexMatrix oracle = test::expm_series(kron(pauli_z(), pauli_z()), -M_PI / 6.0);
    CHECK(max_abs(rzz(M_PI / 3.0) - oracle) < 1e-12);
}

TEST_CASE("ex_readout structure") {
    const TruncatedMode m = make_mode(10);
    const ComplexMatrix bare = expm_i_hermitian(kron(m.x, pauli_x()), kSqrtPi / 2.0);
    CHECK(max_abs(ex_readout(m, 0.0) - bare) < 1e-13);
    CHECK(is_unitary(ex_readout(m, 0.45)));
}

TEST_CASE("ex_readout maps codewords to ancilla outcomes") {
    const TruncatedMode m = make_mode(30);
    const double delta = 0.35;
    const ComplexMatrix ex = ex_readout(m, delta);
    const GkpConfig gcfg{delta, 30, 1e-12};
    const double p00 = readout_prob(ex, gkp_codeword(gcfg, 0).amplitudes, 0);
    const double p11 = readout_prob(ex, gkp_codeword(gcfg, 1).amplitudes, 1);
    CHECK(p00 >= 0.95);
    CHECK(p11 >= 0.95);
    // regression values
    CHECK(p00 == doctest::Approx(0.98427).epsilon(1e-3));
    CHECK(p11 == doctest::Approx(0.98399).epsilon(1e-3));
}

TEST_CASE("precorrection factor reduces readout error at delta=0.45") {
    const TruncatedMode m = make_mode(30);
    const double delta = 0.45;
    const ComplexMatrix with_pre = ex_readout(m, delta);
    const ComplexMatrix without = expm_i_hermitian(kron(m.x, pauli_x()), kSqrtPi / 2.0);
    const GkpConfig gcfg{delta, 30, 1e-12};
    const Eigen::VectorXd c0 = gkp_codeword(gcfg, 0).amplitudes;
    const Eigen::VectorXd c1 = gkp_codeword(gcfg, 1).amplitudes;
    const double err_with =
        std::max(1.0 - readout_prob(with_pre, c0, 0), 1.0 - readout_prob(with_pre, c1, 1));
    const double err_without =
        std::max(1.0 - readout_prob(without, c0, 0), 1.0 - readout_prob(without, c1, 1));
    CHECK(err_with < err_without);
}

TEST_CASE("gate unitarity across parameter samples") {
    const TruncatedMode m = make_mode(12);
    Rng rng(4);
    for (int it = 0; it < 5; ++it) {
        const cd beta(rng.uniform(-1, 1), rng.uniform(-1, 1));
        CHECK(is_unitary(conditional_displacement(m, beta, CdAxisMode::z_control())));
        CHECK(is_unitary(qubit_rotation(axis_y(), rng.uniform(0, 6.28))));
        CHECK(is_unitary(rzz(rng.uniform(0, 6.28))));
        CHECK(is_unitary(ex_readout(m, rng.uniform(0, 1))));
    }
}

TEST_CASE("ex_readout cache returns shared instances") {
    const auto a = ex_readout_cached(10, 0.45);
    const auto b = ex_readout_cached(10, 0.45);
    CHECK(a.get() == b.get());
    const auto c = ex_readout_cached(10, 0.35);
    CHECK(a.get() != c.get());
    CHECK(max_abs(*a - ex_readout(make_mode(10), 0.45)) == 0.0);
}

TEST_CASE("cd axis mode validation") {
    CHECK_THROWS_AS(CdAxisMode::xy_plane(-0.1), ContractError);
    CHECK_THROWS_AS(CdAxisMode::xy_plane(2 * M_PI), ContractError);
}
