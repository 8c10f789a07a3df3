#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oqs/optimizer.hpp"

using namespace oqs;

namespace {

OptimizerConfig base_cfg(int dim, int max_evals = 400) {
    OptimizerConfig cfg;
    cfg.max_evals = max_evals;
    cfg.init_ranges.assign(static_cast<std::size_t>(dim), {-2.0, 2.0});
    return cfg;
}

double best_so_far_is_monotone(const std::vector<double>& history) {
    double best = std::numeric_limits<double>::infinity();
    for (double f : history) {
        const double next = std::min(best, f);
        if (next > best) return false;
        best = next;
    }
    return true;
}

}  // namespace

TEST_CASE("quadratic bowl in 4 dims") {
    Eigen::VectorXd a(4);
    a << 0.3, -0.2, 0.5, 0.1;
    const Objective obj = [&](const Eigen::VectorXd& x) { return (x - a).squaredNorm(); };
    const OptimizerConfig cfg = base_cfg(4, 200);
    const StartTrace tr = minimize_local(obj, Eigen::VectorXd::Zero(4), cfg);
    CHECK(tr.evals <= 200);
    CHECK((tr.x_best - a).norm() <= 1e-3);
    CHECK(best_so_far_is_monotone(tr.history));
}

TEST_CASE("constant objective terminates at the radius floor") {
    const Objective obj = [](const Eigen::VectorXd&) { return 3.5; };
    const OptimizerConfig cfg = base_cfg(3, 400);
    const StartTrace tr = minimize_local(obj, Eigen::VectorXd::Zero(3), cfg);
    CHECK(tr.f_best == 3.5);
    CHECK(tr.evals < 400);  // stopped on radius, not budget
    CHECK_FALSE(tr.aborted);
}

TEST_CASE("one-dimensional cosine lands at pi") {
    const Objective obj = [](const Eigen::VectorXd& x) { return std::cos(x(0)); };
    Eigen::VectorXd x0(1);
    x0 << 0.1;
    const StartTrace tr = minimize_local(obj, x0, base_cfg(1, 200));
    const double wrapped = std::remainder(tr.x_best(0) - M_PI, 2 * M_PI);
    CHECK(std::abs(wrapped) <= 1e-2);
    CHECK(tr.f_best == doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("multistart with one start reduces to minimize_local") {
    const Objective obj = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
    OptimizerConfig cfg = base_cfg(2, 120);
    cfg.n_starts = 1;
    cfg.seed = 42;
    const RunRecord rec = multistart(obj, cfg);

    Rng rng(derive_seed({cfg.seed, 0x7374617274ULL, 0}));
    Eigen::VectorXd x0(2);
    x0 << rng.uniform(-2, 2), rng.uniform(-2, 2);
    const StartTrace tr = minimize_local(obj, x0, cfg);
    CHECK(rec.starts.size() == 1);
    CHECK(rec.best_objective == tr.f_best);
    CHECK(rec.starts[0].history == tr.history);
}

TEST_CASE("two-basin landscape found by multistart") {
    // depth -1 at (-1.5, 0); depth -2 at (+1.5, 0), wider
    const Objective obj = [](const Eigen::VectorXd& x) {
        const double d1 = (x - Eigen::Vector2d(-1.5, 0)).squaredNorm();
        const double d2 = (x - Eigen::Vector2d(1.5, 0)).squaredNorm();
        return -std::exp(-d1 / (2 * 0.6 * 0.6)) - 2.0 * std::exp(-d2 / (2 * 0.8 * 0.8));
    };
    OptimizerConfig cfg = base_cfg(2, 150);
    cfg.n_starts = 8;
    cfg.init_ranges = {{-3.0, 3.0}, {-3.0, 3.0}};
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg.seed = seed;
        hits += multistart(obj, cfg).best_objective <= -1.9;
    }
    CHECK(hits >= 18);
}

TEST_CASE("determinism: identical seeds give identical records") {
    const Objective obj = [](const Eigen::VectorXd& x) {
        return std::sin(3 * x(0)) + x.squaredNorm();
    };
    OptimizerConfig cfg = base_cfg(2, 100);
    cfg.seed = 7;
    const RunRecord a = multistart(obj, cfg);
    const RunRecord b = multistart(obj, cfg);
    CHECK(a.best_objective == b.best_objective);
    CHECK(a.best_start == b.best_start);
    REQUIRE(a.starts.size() == b.starts.size());
    for (std::size_t s = 0; s < a.starts.size(); ++s)
        CHECK(a.starts[s].history == b.starts[s].history);
}

TEST_CASE("budget: total evaluations bounded by n_starts * max_evals") {
    const Objective obj = [](const Eigen::VectorXd& x) { return std::sin(x.sum()); };
    OptimizerConfig cfg = base_cfg(5, 60);
    cfg.n_starts = 3;
    const RunRecord rec = multistart(obj, cfg);
    int total = 0;
    for (const StartTrace& t : rec.starts) {
        CHECK(t.evals <= 60);
        CHECK(static_cast<int>(t.history.size()) == t.evals);
        total += t.evals;
    }
    CHECK(total <= 180);
}

TEST_CASE("per-start monotone best-so-far") {
    const Objective obj = [](const Eigen::VectorXd& x) { return std::cos(x(0)) * std::sin(x(1)); };
    OptimizerConfig cfg = base_cfg(2, 150);
    cfg.n_starts = 4;
    for (const StartTrace& t : multistart(obj, cfg).starts)
        CHECK(best_so_far_is_monotone(t.history));
}

TEST_CASE("non-finite objective aborts the start with a diagnostic") {
    int count = 0;
    const Objective obj = [&](const Eigen::VectorXd& x) {
        return ++count > 10 ? std::numeric_limits<double>::quiet_NaN() : x.squaredNorm();
    };
    const StartTrace tr = minimize_local(obj, Eigen::VectorXd::Ones(3), base_cfg(3));
    CHECK(tr.aborted);
    CHECK(tr.note.find("non-finite") != std::string::npos);

    const Objective all_nan = [](const Eigen::VectorXd&) {
        return std::numeric_limits<double>::quiet_NaN();
    };
    OptimizerConfig cfg = base_cfg(2, 50);
    cfg.n_starts = 2;
    CHECK_THROWS(multistart(all_nan, cfg));
}

TEST_CASE("config validation") {
    OptimizerConfig cfg;
    cfg.final_step = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ContractError);
}
