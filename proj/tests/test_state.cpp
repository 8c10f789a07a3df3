#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oqs/state.hpp"
#include "support/oracles.hpp"

using namespace oqs;

namespace {

HybridState random_hybrid(int n_pairs, int osc_dim, std::uint64_t seed) {
    HybridState st;
    st.n_pairs = n_pairs;
    st.osc_dim = osc_dim;
    std::size_t dim = 1;
    for (int i = 0; i < n_pairs; ++i) dim *= static_cast<std::size_t>(2 * osc_dim);
    const ComplexVector v = test::random_state(static_cast<int>(dim), seed);
    st.amps.assign(v.data(), v.data() + v.size());
    return st;
}

ComplexVector as_vector(const HybridState& st) {
    return Eigen::Map<const ComplexVector>(st.amps.data(),
                                           static_cast<Eigen::Index>(st.amps.size()));
}

}  // namespace

TEST_CASE("identity pair unitary leaves state unchanged") {
    HybridState st = random_hybrid(2, 3, 5);
    const HybridState before = st;
    apply_pair_unitary(st, 1, ComplexMatrix::Identity(6, 6));
    for (std::size_t i = 0; i < st.amps.size(); ++i)
        CHECK(std::abs(st.amps[i] - before.amps[i]) < 1e-14);
}

TEST_CASE("oscillator level swap on pair 0 moves basis states") {
    // |1,0> (x) |0,0> -> |0,0> (x) |0,0> under a 0<->1 oscillator swap
    const int osc_dim = 3, d = 6;
    HybridState st;
    st.n_pairs = 2;
    st.osc_dim = osc_dim;
    st.amps.assign(36, cd(0, 0));
    st.amps[1 * 2 * 6] = 1.0;  // pair0 local = osc 1, bit 0 -> index 2*6
    ComplexMatrix swap = ComplexMatrix::Identity(d, d);
    swap(0, 0) = swap(2, 2) = 0.0;
    swap(0, 2) = swap(2, 0) = 1.0;  // swaps (osc0,bit0) <-> (osc1,bit0)
    swap(1, 1) = swap(3, 3) = 0.0;
    swap(1, 3) = swap(3, 1) = 1.0;  // and the bit-1 column
    apply_pair_unitary(st, 0, swap);
    CHECK(std::abs(st.amps[0] - cd(1, 0)) < 1e-14);
}

TEST_CASE("kron-expanded oracle equivalence over all pairs, n<=2, N_max<=3") {
    for (int n_pairs : {1, 2}) {
        for (int n_max : {1, 2, 3}) {
            const int d = 2 * (n_max + 1);
            for (int pair = 0; pair < n_pairs; ++pair) {
                HybridState st = random_hybrid(n_pairs, n_max + 1,
                                               static_cast<std::uint64_t>(100 * n_max + pair));
                const ComplexMatrix u =
                    test::random_unitary(d, static_cast<std::uint64_t>(7 * n_max + pair));
                const ComplexVector expect =
                    test::embed_pair_op(u, pair, n_pairs) * as_vector(st);
                apply_pair_unitary(st, pair, u);
                CHECK(max_abs(ComplexMatrix(as_vector(st) - expect)) < tol::kron_oracle);
            }
        }
    }
}

TEST_CASE("blocked kernel agrees with serial reference on larger states") {
    for (int pair = 0; pair < 3; ++pair) {
        HybridState a = random_hybrid(3, 6, static_cast<std::uint64_t>(pair) + 11);
        HybridState b = a;
        const ComplexMatrix u = test::random_unitary(12, 31 + static_cast<std::uint64_t>(pair));
        apply_pair_unitary(a, pair, u);
        ref::apply_pair_unitary(b, pair, u);
        for (std::size_t i = 0; i < a.amps.size(); ++i)
            CHECK(std::abs(a.amps[i] - b.amps[i]) < 1e-13);
    }
}

TEST_CASE("norm preserved under random unitaries") {
    HybridState st = random_hybrid(2, 4, 17);
    CHECK(norm(st) == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k < 20; ++k)
        apply_pair_unitary(st, k % 2, test::random_unitary(8, static_cast<std::uint64_t>(k)));
    CHECK(std::abs(norm(st) - 1.0) < 20 * tol::unitarity);
}

TEST_CASE("pair unitary argument checks") {
    HybridState st = random_hybrid(2, 3, 1);
    CHECK_THROWS_AS(apply_pair_unitary(st, 2, ComplexMatrix::Identity(6, 6)), SizeError);
    CHECK_THROWS_AS(apply_pair_unitary(st, 0, ComplexMatrix::Identity(4, 4)), SizeError);
}

TEST_CASE("qubit diagonal: trivial phase, single-qubit Z, and dense oracle") {
    HybridState st = random_hybrid(1, 3, 23);
    const HybridState before = st;
    apply_qubit_diagonal(st, {cd(1, 0), cd(1, 0)});
    for (std::size_t i = 0; i < st.amps.size(); ++i)
        CHECK(std::abs(st.amps[i] - before.amps[i]) == 0.0);

    // phase (-1)^z on one pair equals Z on the qubit
    HybridState a = before;
    apply_qubit_diagonal(a, {cd(1, 0), cd(-1, 0)});
    HybridState b = before;
    apply_pair_unitary(b, 0, kron(ComplexMatrix::Identity(3, 3), pauli_z()));
    for (std::size_t i = 0; i < a.amps.size(); ++i)
        CHECK(std::abs(a.amps[i] - b.amps[i]) < 1e-14);
}

TEST_CASE("qubit diagonal equals full diagonal-matrix product at n=2, N_max=2") {
    HybridState st = random_hybrid(2, 3, 29);
    std::vector<cd> phases(4);
    Rng rng(57);
    for (auto& p : phases) p = std::polar(1.0, rng.uniform(0, 6.28));
    // dense oracle: diagonal entry per global index from its qubit bits
    const int d = 6;
    ComplexVector diag(36);
    for (int idx = 0; idx < 36; ++idx) {
        const int z = ((idx / d) & 1) * 2 + (idx % d & 1);
        diag(idx) = phases[static_cast<std::size_t>(z)];
    }
    const ComplexVector expect = diag.asDiagonal() * as_vector(st);
    apply_qubit_diagonal(st, phases);
    CHECK(max_abs(ComplexMatrix(as_vector(st) - expect)) < 1e-14);

    // reference implementation agrees
    HybridState c = random_hybrid(2, 3, 29);
    ref::apply_qubit_diagonal(c, phases);
    for (std::size_t i = 0; i < st.amps.size(); ++i)
        CHECK(std::abs(st.amps[i] - c.amps[i]) == 0.0);
}

TEST_CASE("qubit diagonal rejects non-unit phases") {
    HybridState st = random_hybrid(1, 2, 3);
    CHECK_THROWS_AS(apply_qubit_diagonal(st, {cd(1, 0), cd(0.5, 0)}), ContractError);
}

TEST_CASE("distribution marginalizes oscillators and matches reference") {
    HybridState st = random_hybrid(2, 4, 41);
    const std::vector<double> par = qubit_distribution(st);
    const std::vector<double> ser = ref::qubit_distribution(st);
    REQUIRE(par.size() == 4);
    double total = 0.0;
    for (std::size_t z = 0; z < 4; ++z) {
        CHECK(par[z] == doctest::Approx(ser[z]).epsilon(1e-13));
        total += par[z];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("product state layout and pair marginals") {
    ComplexVector pair(4);
    pair << cd(0.6, 0), cd(0, 0.8), cd(0, 0), cd(0, 0);
    const HybridState st = product_state(3, 2, pair);
    CHECK(st.dim() == 64);
    CHECK(norm(st) == doctest::Approx(1.0).epsilon(1e-12));
    const std::vector<double> m0 = pair_marginal(st, 0);
    for (int i = 1; i < 3; ++i) {
        const std::vector<double> mi = pair_marginal(st, i);
        for (std::size_t l = 0; l < m0.size(); ++l)
            CHECK(mi[l] == doctest::Approx(m0[l]).epsilon(1e-12));
    }
}

TEST_CASE("product state guards absurd sizes") {
    ComplexVector pair = ComplexVector::Zero(64);
    pair(0) = 1.0;
    CHECK_THROWS_AS(product_state(6, 32, pair), SizeError);
}
